"""The full-superdevelopment map and the reductions that witness its Z-property.

``bullet`` contracts every redex of a term together with the redexes created
upward by those contractions. ``self_steps``, ``rhs_steps`` and ``z_steps``
build explicit reduction sequences by structural recursion, one case per case
of the corresponding induction; each result can be checked independently with
:func:`zlam.beta.validate_seq`.
"""

from __future__ import annotations

from typing import Sequence

from .beta import (
    ReductionSeq,
    abs_coherence,
    check_seq,
    concat,
    cong_abs,
    cong_app_left,
    cong_app_right,
    is_step,
    rename_binder,
    subst_left_steps,
    subst_right_steps,
)
from .errors import PreconditionError
from .terms import Abs, App, Term, Var, subst, substitution_lemma_sides

__all__ = ["app_beta", "app_beta_steps", "bullet", "self_steps", "rhs_steps", "z_steps"]


def app_beta(s: Term, t: Term) -> Term:
    """Application that contracts at the root when ``s`` is an abstraction."""
    if isinstance(s, Abs):
        return subst(s.body, s.binder, t)
    return App(s, t)


def _root_step(t: Term) -> ReductionSeq:
    # [App s u] or [App s u, app_beta(s, u)]
    if isinstance(t, App) and isinstance(t.fun, Abs):
        return [t, app_beta(t.fun, t.arg)]
    return [t]


def _pinned(seq: ReductionSeq, start: Term, end: Term) -> ReductionSeq:
    # swap the endpoints for alpha-equal canonical representatives
    assert seq[0] == start and seq[-1] == end, (seq[0], start, seq[-1], end)
    if len(seq) == 1:
        return [start]
    return [start, *seq[1:-1], end]


def app_beta_steps(s_seq: Sequence[Term], t_seq: Sequence[Term]) -> ReductionSeq:
    """From ``app_beta(s, t)`` to ``app_beta(s', t')`` given ``s ->* s'`` and ``t ->* t'``."""
    check_seq(s_seq)
    check_seq(t_seq)
    s, t = s_seq[0], t_seq[0]
    if not isinstance(s, Abs):
        k = next((i for i, a in enumerate(s_seq) if isinstance(a, Abs)), None)
        if k is None:
            return concat(cong_app_left(s_seq, t), cong_app_right(s_seq[-1], t_seq))
        # the function part turns into an abstraction: fire the root redex there
        head = concat(cong_app_left(s_seq[: k + 1], t), _root_step(App(s_seq[k], t)))
        return concat(head, app_beta_steps(s_seq[k:], t_seq))
    body_end, body_seq = abs_coherence(s.binder, s.body, s_seq)
    return concat(
        subst_left_steps(body_seq, s.binder, t),
        subst_right_steps(body_end, s.binder, t_seq),
    )


def bullet(t: Term) -> Term:
    if isinstance(t, Var):
        return t
    if isinstance(t, Abs):
        return Abs(t.binder, bullet(t.body))
    return app_beta(bullet(t.fun), bullet(t.arg))


def self_steps(t: Term) -> ReductionSeq:
    """A reduction from ``t`` to ``bullet(t)``."""
    if isinstance(t, Var):
        return [t]
    if isinstance(t, Abs):
        return cong_abs(t.binder, self_steps(t.body))
    fun, arg = self_steps(t.fun), self_steps(t.arg)
    return concat(
        cong_app_left(fun, t.arg),
        cong_app_right(fun[-1], arg),
        _root_step(App(fun[-1], arg[-1])),
    )


def rhs_steps(t: Term, x: str, s: Term) -> ReductionSeq:
    """A reduction from ``bullet(t)[x := bullet(s)]`` to ``bullet(t[x := s])``."""
    bs = bullet(s)
    start = subst(bullet(t), x, bs)
    end = bullet(subst(t, x, s))
    return _pinned(_rhs(t, x, s, bs), start, end)


def _rhs(t: Term, x: str, s: Term, bs: Term) -> ReductionSeq:
    if isinstance(t, Var):
        return [bs] if t.name == x else [t]
    if isinstance(t, Abs):
        t = rename_binder(t, s.free_vars | {x})
        return cong_abs(t.binder, _rhs(t.body, x, s, bs))

    t1, t2 = t.fun, t.arg
    b1, b2 = bullet(t1), bullet(t2)
    ih1 = _rhs(t1, x, s, bs)
    ih2 = _rhs(t2, x, s, bs)
    if isinstance(b1, Abs):
        # b1 = \y. u with y fresh for x and bullet(s)
        lam = rename_binder(b1, bs.free_vars | s.free_vars | {x})
        y, u = lam.binder, lam.body
        u_x = subst(u, x, bs)
        # ih1 runs from \y. u[x:=bs]; peel the binder to get u[x:=bs] ->* v
        v, body_seq = abs_coherence(y, u_x, ih1)
        lhs, mid = substitution_lemma_sides(u, y, b2, x, bs)
        assert lhs == mid, (lhs, mid)
        return concat(
            subst_left_steps(body_seq, y, subst(b2, x, bs)),
            subst_right_steps(v, y, ih2),
        )
    return concat(
        cong_app_left(ih1, subst(b2, x, bs)),
        cong_app_right(ih1[-1], ih2),
        _root_step(App(ih1[-1], ih2[-1])),
    )


def z_steps(s: Term, t: Term) -> tuple[ReductionSeq, ReductionSeq]:
    """Both legs of the Z-property for the step ``s -> t``.

    Returns ``(t ->* bullet(s), bullet(s) ->* bullet(t))``.
    """
    if not is_step(s, t):
        raise PreconditionError(f"{s} does not reduce to {t} in one step")
    bs, bt = bullet(s), bullet(t)
    first, second = _z(s, t)
    return _pinned(first, t, bs), _pinned(second, bs, bt)


def _z(s: Term, t: Term) -> tuple[ReductionSeq, ReductionSeq]:
    # assumes is_step(s, t); recursion follows the position of the step
    if isinstance(s, Abs):
        assert isinstance(t, Abs)
        body = t.body if t.binder == s.binder else subst(t.body, t.binder, Var(s.binder))
        first, second = _z(s.body, body)
        return cong_abs(s.binder, first), cong_abs(s.binder, second)

    assert isinstance(s, App)
    fun, arg = s.fun, s.arg
    if isinstance(fun, Abs) and subst(fun.body, fun.binder, arg) == t:
        x, body = fun.binder, fun.body
        self_body, self_arg = self_steps(body), self_steps(arg)
        first = concat(
            subst_left_steps(self_body, x, arg),
            subst_right_steps(self_body[-1], x, self_arg),
        )
        return first, rhs_steps(body, x, arg)

    assert isinstance(t, App)
    if t.arg == arg and is_step(fun, t.fun):
        w1, w2 = _z(fun, t.fun)
        arg_self = self_steps(arg)
        first = concat(
            cong_app_left(w1, arg),
            cong_app_right(w1[-1], arg_self),
            _root_step(App(w1[-1], arg_self[-1])),
        )
        return first, app_beta_steps(w2, [arg_self[-1]])

    assert t.fun == fun and is_step(arg, t.arg)
    w1, w2 = _z(arg, t.arg)
    fun_self = self_steps(fun)
    first = concat(
        cong_app_right(fun, w1),
        cong_app_left(fun_self, w1[-1]),
        _root_step(App(fun_self[-1], w1[-1])),
    )
    return first, app_beta_steps([fun_self[-1]], w2)
