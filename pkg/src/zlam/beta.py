"""One-step beta reduction, bounded search, and reduction-sequence builders.

A reduction sequence is a non-empty list of terms in which every adjacent
pair is a single beta step; ``[t]`` is the empty reduction from ``t``. The
builders here lift sequences through contexts and substitutions and always
hand back sequences that pass :func:`validate_seq`.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

from .errors import InvalidSequence, PreconditionError
from .terms import Abs, App, Term, Var, fresh_name, subst

__all__ = [
    "reducts",
    "is_step",
    "validate_seq",
    "check_seq",
    "concat",
    "reachable",
    "reduces_to",
    "cong_app_left",
    "cong_app_right",
    "cong_abs",
    "subst_right_steps",
    "subst_left_step",
    "subst_left_steps",
    "abs_coherence",
    "rename_binder",
]

ReductionSeq = list  # list[Term], non-empty


def _reducts(t: Term) -> list[Term]:
    if isinstance(t, Var):
        return []
    if isinstance(t, Abs):
        return [Abs(t.binder, r) for r in _reducts(t.body)]
    out = []
    if isinstance(t.fun, Abs):
        out.append(subst(t.fun.body, t.fun.binder, t.arg))
    out.extend(App(r, t.arg) for r in _reducts(t.fun))
    out.extend(App(t.fun, r) for r in _reducts(t.arg))
    return out


def reducts(t: Term) -> list[Term]:
    """All one-step reducts, leftmost-outermost, without alpha-duplicates.

    Order: the root redex, then steps inside the function part, then inside
    the argument, then under a binder.
    """
    return list(dict.fromkeys(_reducts(t)))


def is_step(s: Term, t: Term) -> bool:
    return any(r == t for r in _reducts(s))


def validate_seq(seq: Sequence[Term]) -> bool:
    if not seq:
        return False
    return all(is_step(a, b) for a, b in zip(seq, seq[1:]))


def check_seq(seq: Sequence[Term]) -> None:
    if not seq:
        raise InvalidSequence("empty reduction sequence")
    for i, (a, b) in enumerate(zip(seq, seq[1:])):
        if not is_step(a, b):
            raise InvalidSequence(f"position {i}: {a} does not reduce to {b} in one step")


def concat(*seqs: Sequence[Term]) -> ReductionSeq:
    """Glue sequences end to start; joints must agree up to alpha."""
    out = list(seqs[0])
    for seq in seqs[1:]:
        if out[-1] != seq[0]:
            raise InvalidSequence(f"cannot join: {out[-1]} is not {seq[0]}")
        out.extend(seq[1:])
    return out


def reachable(t: Term, depth: int) -> set[Term]:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    seen = {t}
    frontier = [t]
    for _ in range(depth):
        nxt = []
        for a in frontier:
            for r in reducts(a):
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        if not nxt:
            break
        frontier = nxt
    return seen


def reduces_to(s: Term, t: Term, depth: int) -> Optional[ReductionSeq]:
    """Shortest sequence from ``s`` to ``t`` with at most ``depth`` steps.

    ``None`` only means nothing was found within the bound.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    parent: dict[Term, Optional[Term]] = {s: None}
    queue = deque([(s, 0)])
    while queue:
        a, d = queue.popleft()
        if a == t:
            path = [a]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            path.reverse()
            return path
        if d == depth:
            continue
        for r in reducts(a):
            if r not in parent:
                parent[r] = a
                queue.append((r, d + 1))
    return None


def cong_app_left(seq: Sequence[Term], u: Term) -> ReductionSeq:
    check_seq(seq)
    return [App(t, u) for t in seq]


def cong_app_right(u: Term, seq: Sequence[Term]) -> ReductionSeq:
    check_seq(seq)
    return [App(u, t) for t in seq]


def cong_abs(x: str, seq: Sequence[Term]) -> ReductionSeq:
    check_seq(seq)
    return [Abs(x, t) for t in seq]


def rename_binder(t: Abs, avoid: frozenset[str] | set[str]) -> Abs:
    """Alpha-variant of ``t`` whose binder is not in ``avoid``."""
    if t.binder not in avoid:
        return t
    z = fresh_name(set(avoid) | t.body.free_vars, base=t.binder)
    return Abs(z, subst(t.body, t.binder, Var(z)))


def _subst_right_one(t: Term, x: str, s0: Term, s1: Term) -> ReductionSeq:
    # t[x:=s0] ->* t[x:=s1], rewriting occurrences of x left to right
    if x not in t.free_vars:
        return [t]
    if isinstance(t, Var):
        return [s0, s1]
    if isinstance(t, App):
        left = _subst_right_one(t.fun, x, s0, s1)
        right = _subst_right_one(t.arg, x, s0, s1)
        return concat(
            [App(a, subst(t.arg, x, s0)) for a in left],
            [App(left[-1], b) for b in right],
        )
    t = rename_binder(t, s0.free_vars | s1.free_vars | {x})
    return [Abs(t.binder, b) for b in _subst_right_one(t.body, x, s0, s1)]


def subst_right_steps(t: Term, x: str, seq: Sequence[Term]) -> ReductionSeq:
    """From ``t[x:=s]`` to ``t[x:=s']`` given a sequence from ``s`` to ``s'``.

    Each step of ``seq`` is repeated once per free occurrence of ``x``.
    """
    check_seq(seq)
    out = [subst(t, x, seq[0])]
    for a, b in zip(seq, seq[1:]):
        out = concat(out, _subst_right_one(t, x, a, b))
    return out


def subst_left_step(s: Term, t: Term, x: str, u: Term) -> ReductionSeq:
    """The single step ``s[x:=u] -> t[x:=u]`` for a step ``s -> t``."""
    if not is_step(s, t):
        raise PreconditionError(f"{s} does not reduce to {t} in one step")
    out = [subst(s, x, u), subst(t, x, u)]
    if not is_step(*out):
        raise AssertionError(f"substitutivity failed for {s} -> {t} with {x} := {u}")
    return out


def subst_left_steps(seq: Sequence[Term], x: str, u: Term) -> ReductionSeq:
    out = [subst(seq[0], x, u)]
    for a, b in zip(seq, seq[1:]):
        out = concat(out, subst_left_step(a, b, x, u))
    return out


def abs_coherence(x: str, t: Term, seq: Sequence[Term]) -> tuple[Term, ReductionSeq]:
    """Peel the binder off a reduction that starts at ``\\x. t``.

    Returns ``(t', body_seq)`` where ``body_seq`` goes from ``t`` to ``t'``
    and the last element of ``seq`` is ``\\x. t'``.
    """
    check_seq(seq)
    if seq[0] != Abs(x, t):
        raise PreconditionError(f"sequence starts at {seq[0]}, not at {Abs(x, t)}")
    bodies = [t]
    for a in seq[1:]:
        # reducts of abstractions are abstractions; x cannot become free
        assert isinstance(a, Abs), a
        bodies.append(a.body if a.binder == x else subst(a.body, a.binder, Var(x)))
    check_seq(bodies)
    return bodies[-1], bodies
