"""Abstract rewriting: the Z-property, confluence joins, and the angle property.

Everything here is generic over an :class:`ArsView` (a successor function plus
an equivalence given by a key function) and a bullet map. Two instances are
provided: lambda terms under beta (:func:`lambda_view`) and explicit finite
systems (:class:`FiniteArs`). On infinite carriers ``->*`` is approximated by
breadth-first search to a fixed depth, and failures caused only by the depth
cut are flagged ``bounded=True`` in the returned :class:`Violation`.
"""

from __future__ import annotations

import json
from collections import deque
from collections.abc import Set
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Hashable, Iterable, Iterator, Optional, Sequence

from .errors import InvalidSequence, PreconditionError

__all__ = [
    "ArsView",
    "Violation",
    "FiniteArs",
    "DevRelation",
    "lambda_view",
    "search_z_witness",
    "check_z",
    "monotonicity_steps",
    "semi_confluence_join",
    "confluence_join",
    "dev_relation",
    "check_angle",
    "z_implies_angle",
    "angle_implies_z",
]

BulletMap = Callable[[Any], Any]
ZWitness = Callable[[Any, Any], "tuple[list, list]"]


def _identity(a: Any) -> Any:
    return a


@dataclass(frozen=True)
class ArsView:
    """A rewrite relation seen through its successor function.

    Objects are compared through ``key``; ``successors`` must give
    equivalent results for equivalent objects.
    """

    successors: Callable[[Any], Sequence[Any]]
    key: Callable[[Any], Hashable] = _identity

    def equal(self, a: Any, b: Any) -> bool:
        return self.key(a) == self.key(b)

    def is_step(self, a: Any, b: Any) -> bool:
        kb = self.key(b)
        return any(self.key(c) == kb for c in self.successors(a))

    def reach(self, a: Any, depth: int) -> tuple[dict, bool]:
        """Objects within ``depth`` steps of ``a``, keyed, and whether the search exhausted them all."""
        seen = {self.key(a): a}
        frontier = [a]
        for _ in range(depth):
            nxt = []
            for o in frontier:
                for c in self.successors(o):
                    k = self.key(c)
                    if k not in seen:
                        seen[k] = c
                        nxt.append(c)
            if not nxt:
                return seen, True
            frontier = nxt
        complete = not any(self.key(c) not in seen for o in frontier for c in self.successors(o))
        return seen, complete

    def reaches(self, a: Any, b: Any, depth: int) -> tuple[bool, bool]:
        """``(found, exact)``; ``exact`` is False when a miss may be due to the depth cut."""
        seen, complete = self.reach(a, depth)
        found = self.key(b) in seen
        return found, found or complete

    def path(self, a: Any, b: Any, depth: int) -> Optional[list]:
        kb = self.key(b)
        parent = {self.key(a): None}
        objs = {self.key(a): a}
        queue = deque([(a, 0)])
        while queue:
            o, d = queue.popleft()
            if self.key(o) == kb:
                out = [o]
                k = parent[self.key(o)]
                while k is not None:
                    out.append(objs[k])
                    k = parent[k]
                return out[::-1]
            if d == depth:
                continue
            for c in self.successors(o):
                k = self.key(c)
                if k not in parent:
                    parent[k] = self.key(o)
                    objs[k] = c
                    queue.append((c, d + 1))
        return None

    def check_seq(self, seq: Sequence[Any]) -> None:
        if not seq:
            raise InvalidSequence("empty sequence")
        for i, (a, b) in enumerate(zip(seq, seq[1:])):
            if not self.is_step(a, b):
                raise InvalidSequence(f"position {i}: {a} -> {b} is not a step")

    def validate(self, seq: Sequence[Any]) -> bool:
        try:
            self.check_seq(seq)
        except InvalidSequence:
            return False
        return True

    def concat(self, *seqs: Sequence[Any]) -> list:
        out = list(seqs[0])
        for seq in seqs[1:]:
            if not self.equal(out[-1], seq[0]):
                raise InvalidSequence(f"cannot join: {out[-1]} is not {seq[0]}")
            out.extend(seq[1:])
        return out


@dataclass(frozen=True)
class Violation:
    object: Any
    step_target: Any
    failed_leg: str
    detail: str
    bounded: bool = False

    def to_dict(self) -> dict:
        return {
            "object": str(self.object),
            "step_target": None if self.step_target is None else str(self.step_target),
            "failed_leg": self.failed_leg,
            "detail": self.detail,
            "bounded": self.bounded,
        }

    def __str__(self) -> str:
        where = f"{self.object} -> {self.step_target}" if self.step_target is not None else str(self.object)
        suffix = " (within bound)" if self.bounded else ""
        return f"[{self.failed_leg}] at {where}: {self.detail}{suffix}"


def lambda_view() -> ArsView:
    from .beta import reducts

    return ArsView(reducts)


def search_z_witness(ars: ArsView, b: BulletMap, depth: int) -> ZWitness:
    """Z-legs for a step ``a -> c`` found by breadth-first search."""

    def witness(a: Any, c: Any) -> tuple[list, list]:
        first = ars.path(c, b(a), depth)
        second = ars.path(b(a), b(c), depth)
        if first is None or second is None:
            raise PreconditionError(f"no Z-legs for {a} -> {c} within depth {depth}")
        return first, second

    return witness


def check_z(ars: ArsView, b: BulletMap, universe: Iterable[Any], depth: int) -> Optional[Violation]:
    """First failure of the Z-property over ``universe``, or None."""
    for a in universe:
        ba = b(a)
        for c in ars.successors(a):
            found, exact = ars.reaches(c, ba, depth)
            if not found:
                return Violation(a, c, "c->*b(a)", f"{c} does not reach b({a}) = {ba}", not exact)
            bc = b(c)
            found, exact = ars.reaches(ba, bc, depth)
            if not found:
                return Violation(a, c, "b(a)->*b(c)", f"b({a}) = {ba} does not reach b({c}) = {bc}", not exact)
    return None


def monotonicity_steps(ars: ArsView, b: BulletMap, seq: Sequence[Any], z_witness: ZWitness) -> list:
    """From ``b(first)`` to ``b(last)`` by chaining the second Z-leg of every step."""
    ars.check_seq(seq)
    out = [b(seq[0])]
    for a, c in zip(seq, seq[1:]):
        out = ars.concat(out, z_witness(a, c)[1])
    return out


def semi_confluence_join(
    ars: ArsView, b: BulletMap, z_witness: ZWitness, seq_ac: Sequence[Any], d: Any
) -> tuple[Any, list, list]:
    """Join ``c`` (end of ``seq_ac``) with a one-step reduct ``d`` of its start.

    Returns ``(e, d ->* e, c ->* e)``.
    """
    ars.check_seq(seq_ac)
    a = seq_ac[0]
    if not ars.is_step(a, d):
        raise PreconditionError(f"{a} -> {d} is not a step")
    if len(seq_ac) == 1:
        return d, [d], [a, d]
    before, c = seq_ac[-2], seq_ac[-1]
    e = b(before)
    w_d = ars.concat(z_witness(a, d)[0], monotonicity_steps(ars, b, seq_ac[:-1], z_witness))
    w_c = z_witness(before, c)[0]
    return e, w_d, w_c


def confluence_join(
    ars: ArsView, b: BulletMap, z_witness: ZWitness, seq_ab: Sequence[Any], seq_ac: Sequence[Any]
) -> tuple[Any, list, list]:
    """Common reduct of the ends of two reductions from the same object.

    Returns ``(e, b ->* e, c ->* e)``, built by walking ``seq_ab`` one step
    at a time through :func:`semi_confluence_join`.
    """
    ars.check_seq(seq_ab)
    ars.check_seq(seq_ac)
    if not ars.equal(seq_ab[0], seq_ac[0]):
        raise PreconditionError(f"peaks differ: {seq_ab[0]} vs {seq_ac[0]}")
    # invariant: current runs from seq_ab[i] to e, tail from end of seq_ac to e
    current = list(seq_ac)
    tail = [seq_ac[-1]]
    for d in seq_ab[1:]:
        _, w_d, w_c = semi_confluence_join(ars, b, z_witness, current, d)
        current = w_d
        tail = ars.concat(tail, w_c)
    return current[-1], current, tail


class DevRelation(Set):
    """The bullet-development relation: ``a`` relates to ``c`` iff ``a ->* c ->* b(a)``.

    Iteration yields the pairs whose left side lies in the universe;
    membership is decided for arbitrary pairs by bounded search.
    """

    def __init__(self, ars: ArsView, b: BulletMap, universe: Iterable[Any], depth: int):
        self.ars, self.b, self.depth = ars, b, depth
        self._cache: dict = {}
        pairs = []
        for a in universe:
            seen, _ = ars.reach(a, depth)
            for c in seen.values():
                if self.decide(a, c)[0]:
                    pairs.append((a, c))
        self._pairs = pairs

    def decide(self, a: Any, c: Any) -> tuple[bool, bool]:
        """``(member, exact)``."""
        k = (self.ars.key(a), self.ars.key(c))
        if k not in self._cache:
            found, exact = self.ars.reaches(a, c, self.depth)
            if found:
                found, exact = self.ars.reaches(c, self.b(a), self.depth)
            self._cache[k] = (found, exact)
        return self._cache[k]

    def __contains__(self, pair: object) -> bool:
        a, c = pair  # type: ignore[misc]
        return self.decide(a, c)[0]

    def __iter__(self) -> Iterator[tuple[Any, Any]]:
        return iter(self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)


def dev_relation(ars: ArsView, b: BulletMap, universe: Iterable[Any], depth: int) -> DevRelation:
    return DevRelation(ars, b, universe, depth)


def _membership(rel: Any, a: Any, c: Any) -> tuple[bool, bool]:
    if isinstance(rel, DevRelation):
        return rel.decide(a, c)
    return (a, c) in rel, True


def _ordered_pairs(rel: Any, universe: Sequence[Any], ars: ArsView) -> list:
    if isinstance(rel, DevRelation) or isinstance(rel, (list, tuple)):
        return list(rel)
    rank = {ars.key(a): i for i, a in enumerate(universe)}
    return sorted(rel, key=lambda p: (rank.get(ars.key(p[0]), len(rank)), str(p[0]), str(p[1])))


def check_angle(
    ars: ArsView, b: BulletMap, rel: Any, universe: Iterable[Any], depth: int
) -> Optional[Violation]:
    """First failure of the angle property of ``rel`` for ``b``, or None.

    ``rel`` is a container of pairs. The three checks, in order: every step
    from the universe is in ``rel``; every pair of ``rel`` is a reduction;
    ``(a, c)`` in ``rel`` implies ``(c, b(a))`` in ``rel``.
    """
    universe = list(universe)
    for a in universe:
        for c in ars.successors(a):
            member, exact = _membership(rel, a, c)
            if not member:
                return Violation(a, c, "step-in-relation", f"step {a} -> {c} is not related", not exact)
    pairs = _ordered_pairs(rel, universe, ars)
    for a, c in pairs:
        found, exact = ars.reaches(a, c, depth)
        if not found:
            return Violation(a, c, "relation-in-reduction", f"related pair {a}, {c} is not a reduction", not exact)
    for a, c in pairs:
        ba = b(a)
        member, exact = _membership(rel, c, ba)
        if not member:
            return Violation(a, c, "angle", f"{c} is not related to b({a}) = {ba}", not exact)
    return None


def z_implies_angle(ars: ArsView, b: BulletMap, universe: Iterable[Any], depth: int) -> Optional[Violation]:
    """Check the angle property of the bullet-development relation, given Z holds."""
    universe = list(universe)
    v = check_z(ars, b, universe, depth)
    if v is not None:
        raise PreconditionError(f"Z-property does not hold: {v}")
    return check_angle(ars, b, dev_relation(ars, b, universe, depth), universe, depth)


def angle_implies_z(
    ars: ArsView, b: BulletMap, rel: Any, universe: Iterable[Any], depth: int
) -> Optional[Violation]:
    """Derive Z for every step from the angle property applied twice."""
    universe = list(universe)
    v = check_angle(ars, b, rel, universe, depth)
    if v is not None:
        raise PreconditionError(f"angle property does not hold: {v}")
    for a in universe:
        ba = b(a)
        for c in ars.successors(a):
            bc = b(c)
            for x, y, leg in ((a, c, "a~>c"), (c, ba, "c~>b(a)"), (ba, bc, "b(a)~>b(c)")):
                member, exact = _membership(rel, x, y)
                if not member:
                    return Violation(a, c, leg, f"({x}, {y}) is not related", not exact)
            for x, y, leg in ((c, ba, "c->*b(a)"), (ba, bc, "b(a)->*b(c)")):
                found, exact = ars.reaches(x, y, depth)
                if not found:
                    return Violation(a, c, leg, f"{x} does not reach {y}", not exact)
    return None


@dataclass(frozen=True)
class FiniteArs:
    """An explicit finite rewrite system over string labels."""

    elements: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    bullet: Optional[dict[str, str]] = field(default=None, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate elements")
        carrier = set(self.elements)
        for a, c in self.edges:
            if a not in carrier or c not in carrier:
                raise ValueError(f"edge ({a}, {c}) leaves the carrier")
        if self.bullet is not None:
            if set(self.bullet) != carrier or not set(self.bullet.values()) <= carrier:
                raise ValueError("bullet must map every element into the carrier")

    def successors(self, a: str) -> list[str]:
        return [c for c in self.elements if (a, c) in self.edges]

    def view(self) -> ArsView:
        table = {a: self.successors(a) for a in self.elements}
        return ArsView(table.__getitem__)

    def bullet_map(self) -> BulletMap:
        if self.bullet is None:
            raise PreconditionError("this ARS has no bullet map")
        return self.bullet.__getitem__

    def to_json(self) -> dict:
        out: dict = {
            "elements": list(self.elements),
            "edges": sorted([a, c] for a, c in self.edges),
        }
        if self.bullet is not None:
            out["bullet"] = {a: self.bullet[a] for a in self.elements}
        return out

    @classmethod
    def from_json(cls, data: dict) -> FiniteArs:
        if not isinstance(data, dict) or not {"elements", "edges"} <= set(data):
            raise ValueError("ARS JSON needs 'elements' and 'edges'")
        extra = set(data) - {"elements", "edges", "bullet"}
        if extra:
            raise ValueError(f"unknown keys: {sorted(extra)}")
        edges = []
        for e in data["edges"]:
            if not isinstance(e, list) or len(e) != 2:
                raise ValueError(f"edge must be a pair: {e!r}")
            edges.append((str(e[0]), str(e[1])))
        bullet = data.get("bullet")
        if bullet is not None:
            bullet = {str(k): str(v) for k, v in bullet.items()}
        return cls(tuple(str(a) for a in data["elements"]), frozenset(edges), bullet)

    @classmethod
    def load(cls, path: str | Path) -> FiniteArs:
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json()) + "\n", encoding="utf-8")
