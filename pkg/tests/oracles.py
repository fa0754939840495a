"""Reference implementations used as independent test oracles."""

from zlam.terms import Abs, App, Var


def debruijn(t, env=()):
    # independent oracle for alpha-equivalence: binder-free encoding
    if isinstance(t, Var):
        return ("b", env.index(t.name)) if t.name in env else ("f", t.name)
    if isinstance(t, App):
        return ("a", debruijn(t.fun, env), debruijn(t.arg, env))
    return ("l", debruijn(t.body, (t.binder,) + env))


def occurrences(t, bound=frozenset()):
    if isinstance(t, Var):
        return set() if t.name in bound else {t.name}
    if isinstance(t, App):
        return occurrences(t.fun, bound) | occurrences(t.arg, bound)
    return occurrences(t.body, bound | {t.binder})


def naive_subst(t, x, s):
    # only correct when no binder of t is free in s
    if isinstance(t, Var):
        return s if t.name == x else t
    if isinstance(t, App):
        return App(naive_subst(t.fun, x, s), naive_subst(t.arg, x, s))
    if t.binder == x:
        return t
    return Abs(t.binder, naive_subst(t.body, x, s))


def binders(t):
    if isinstance(t, Var):
        return set()
    if isinstance(t, App):
        return binders(t.fun) | binders(t.arg)
    return {t.binder} | binders(t.body)


def rename_apart(t, avoid, counter=None):
    counter = counter if counter is not None else [0]
    if isinstance(t, Var):
        return t
    if isinstance(t, App):
        return App(rename_apart(t.fun, avoid, counter), rename_apart(t.arg, avoid, counter))
    counter[0] += 1
    z = f"r{counter[0]}"
    while z in avoid:
        counter[0] += 1
        z = f"r{counter[0]}"
    body = naive_subst(t.body, t.binder, Var(z))
    return Abs(z, rename_apart(body, avoid, counter))


def oracle_subst(t, x, s):
    avoid = occurrences(t) | occurrences(s) | binders(t) | binders(s) | {x}
    return naive_subst(rename_apart(t, avoid), x, s)
