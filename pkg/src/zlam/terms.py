"""Named lambda terms compared up to alpha-equivalence.

Terms are immutable. ``==`` and ``hash`` work on alpha-equivalence classes,
so terms can be used directly as set members and dict keys; the binder names
stored in a term only matter for printing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable

from .errors import PreconditionError

__all__ = [
    "Term",
    "Var",
    "App",
    "Abs",
    "free_vars",
    "is_fresh",
    "alpha_eq",
    "fresh_name",
    "subst",
    "substitution_lemma_sides",
    "size",
]

NAME_RE = re.compile(r"[a-z][A-Za-z0-9_']*\Z")


class Term:
    __slots__ = ()

    @cached_property
    def free_vars(self) -> frozenset[str]:
        raise NotImplementedError

    @cached_property
    def key(self) -> Hashable:
        """Nameless (de Bruijn style) encoding; equal keys iff alpha-equivalent."""
        return _nameless(self, ())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Term):
            return NotImplemented
        return self is other or self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __str__(self) -> str:
        from .syntax import print_term

        return print_term(self)


def _check_name(name: str) -> None:
    if not isinstance(name, str) or not NAME_RE.match(name):
        raise ValueError(f"invalid variable name: {name!r}")


@dataclass(frozen=True, eq=False)
class Var(Term):
    name: str

    def __post_init__(self) -> None:
        _check_name(self.name)

    @cached_property
    def free_vars(self) -> frozenset[str]:
        return frozenset((self.name,))


@dataclass(frozen=True, eq=False)
class App(Term):
    fun: Term
    arg: Term

    @cached_property
    def free_vars(self) -> frozenset[str]:
        return self.fun.free_vars | self.arg.free_vars


@dataclass(frozen=True, eq=False)
class Abs(Term):
    binder: str
    body: Term

    def __post_init__(self) -> None:
        _check_name(self.binder)

    @cached_property
    def free_vars(self) -> frozenset[str]:
        return self.body.free_vars - {self.binder}


def _nameless(t: Term, bound: tuple[str, ...]) -> Hashable:
    # bound lists binder names innermost-first
    if isinstance(t, Var):
        try:
            return ("b", bound.index(t.name))
        except ValueError:
            return ("f", t.name)
    if isinstance(t, App):
        return ("@", _nameless(t.fun, bound), _nameless(t.arg, bound))
    return ("\\", _nameless(t.body, (t.binder,) + bound))


def size(t: Term) -> int:
    """Number of Var, App and Abs nodes in ``t``."""
    if isinstance(t, Var):
        return 1
    if isinstance(t, App):
        return 1 + size(t.fun) + size(t.arg)
    return 1 + size(t.body)


def free_vars(t: Term) -> frozenset[str]:
    return t.free_vars


def is_fresh(x: str, t: Term) -> bool:
    return x not in t.free_vars


def alpha_eq(s: Term, t: Term) -> bool:
    """Decide alpha-equivalence by walking both terms in lockstep.

    Each side keeps a map from binder name to binding depth; two variables
    match when both are free with the same name, or both are bound at the
    same depth.
    """
    return _alpha(s, t, {}, {}, 0)


def _alpha(s: Term, t: Term, ls: dict, rs: dict, depth: int) -> bool:
    if isinstance(s, Var) and isinstance(t, Var):
        a, b = ls.get(s.name), rs.get(t.name)
        if a is None and b is None:
            return s.name == t.name
        return a == b
    if isinstance(s, App) and isinstance(t, App):
        return _alpha(s.fun, t.fun, ls, rs, depth) and _alpha(s.arg, t.arg, ls, rs, depth)
    if isinstance(s, Abs) and isinstance(t, Abs):
        return _alpha(
            s.body,
            t.body,
            {**ls, s.binder: depth},
            {**rs, t.binder: depth},
            depth + 1,
        )
    return False


_SUFFIX = re.compile(r"\d+\Z")


def fresh_name(avoid: Iterable[str], base: str = "x") -> str:
    """First name of the supply ``base, base1, base2, ...`` not in ``avoid``.

    Trailing digits of ``base`` are dropped first, so renaming ``y3`` tries
    ``y``, ``y1``, ... rather than ``y31``.
    """
    avoid = set(avoid)
    stem = _SUFFIX.sub("", base) or "x"
    if stem not in avoid:
        return stem
    i = 1
    while f"{stem}{i}" in avoid:
        i += 1
    return f"{stem}{i}"


def subst(t: Term, x: str, s: Term) -> Term:
    """Capture-avoiding substitution ``t[x := s]``.

    A binder is renamed only when it occurs free in ``s`` and ``x`` occurs
    free under it. Subterms without a free ``x`` are returned unchanged.
    """
    if x not in t.free_vars:
        return t
    if isinstance(t, Var):
        return s
    if isinstance(t, App):
        return App(subst(t.fun, x, s), subst(t.arg, x, s))
    # x free in t, so t.binder != x
    y, body = t.binder, t.body
    if y in s.free_vars:
        z = fresh_name(s.free_vars | body.free_vars | {x}, base=y)
        body = subst(body, y, Var(z))
        y = z
    return Abs(y, subst(body, x, s))


def substitution_lemma_sides(
    t: Term, x: str, s: Term, y: str, u: Term
) -> tuple[Term, Term]:
    """Both sides of ``t[x:=s][y:=u] = t[y:=u][x:=s[y:=u]]``.

    Requires ``x != y`` and ``x`` fresh for ``u``.
    """
    if x == y:
        raise PreconditionError(f"substitution lemma needs distinct variables, got {x} twice")
    if not is_fresh(x, u):
        raise PreconditionError(f"substitution lemma needs {x} fresh for {u}")
    left = subst(subst(t, x, s), y, u)
    right = subst(subst(t, y, u), x, subst(s, y, u))
    return left, right
