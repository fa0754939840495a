"""Exhaustive and randomized check suites over enumerated inputs.

Each suite returns a :class:`SuiteReport`; a suite passes when it found no
violations. The CLI ``check`` command is a thin wrapper over :data:`SUITES`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Optional

from .ars import (
    Violation,
    angle_implies_z,
    check_angle,
    check_z,
    confluence_join,
    dev_relation,
    lambda_view,
)
from .beta import reducts, validate_seq
from .superdev import bullet, rhs_steps, self_steps, z_steps
from .terms import Term, alpha_eq, is_fresh, subst, substitution_lemma_sides
from .testgen import EnumConfig, enumerate_terms, random_finite_ars

__all__ = ["SuiteReport", "SUITES", "run_suite", "peaks"]

SUBSTITUEND_SIZE = 3
PEAK_LEG = 2


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    violations: int = 0
    first_violation: Optional[Violation] = None
    params: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def record(self, v: Optional[Violation]) -> None:
        self.checked += 1
        if v is not None:
            self.violations += 1
            if self.first_violation is None:
                self.first_violation = v

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "violations": self.violations,
            "first_violation": None if self.first_violation is None else self.first_violation.to_dict(),
            "params": self.params,
        }

    def summary(self) -> str:
        lines = [f"suite {self.suite}: {self.checked} checked, {self.violations} violations"]
        if self.first_violation is not None:
            lines.append(f"first violation: {self.first_violation}")
        return "\n".join(lines)


def _seq_violation(obj: Any, target: Any, leg: str, seq: list, start: Term, end: Term) -> Optional[Violation]:
    if not validate_seq(seq):
        return Violation(obj, target, leg, "sequence does not validate")
    if not alpha_eq(seq[0], start):
        return Violation(obj, target, leg, f"starts at {seq[0]}, expected {start}")
    if not alpha_eq(seq[-1], end):
        return Violation(obj, target, leg, f"ends at {seq[-1]}, expected {end}")
    return None


def check_subst(max_size: int = 5, nvars: int = 2, **_: Any) -> SuiteReport:
    cfg = EnumConfig.with_vars(max_size, nvars)
    report = SuiteReport("subst", params={"max_size": max_size, "vars": nvars})
    small = enumerate_terms(EnumConfig(min(SUBSTITUEND_SIZE, max_size), cfg.var_pool))
    pool = cfg.var_pool
    for t in enumerate_terms(cfg):
        for x in pool:
            for y in pool:
                if x == y:
                    continue
                for s in small:
                    for u in small:
                        if not is_fresh(x, u):
                            continue
                        left, right = substitution_lemma_sides(t, x, s, y, u)
                        v = None
                        if not alpha_eq(left, right):
                            v = Violation(
                                t, None, "substitution-lemma",
                                f"x={x} s={s} y={y} u={u}: {left} vs {right}",
                            )
                        report.record(v)
    return report


def check_self(max_size: int = 6, nvars: int = 2, **_: Any) -> SuiteReport:
    report = SuiteReport("self", params={"max_size": max_size, "vars": nvars})
    for t in enumerate_terms(EnumConfig.with_vars(max_size, nvars)):
        report.record(_seq_violation(t, None, "self", self_steps(t), t, bullet(t)))
    return report


def check_rhs(max_size: int = 5, nvars: int = 2, **_: Any) -> SuiteReport:
    cfg = EnumConfig.with_vars(max_size, nvars)
    report = SuiteReport("rhs", params={"max_size": max_size, "vars": nvars})
    small = enumerate_terms(EnumConfig(min(SUBSTITUEND_SIZE, max_size), cfg.var_pool))
    for t in enumerate_terms(cfg):
        for s in small:
            for x in cfg.var_pool:
                start = subst(bullet(t), x, bullet(s))
                end = bullet(subst(t, x, s))
                v = _seq_violation(t, None, f"rhs[{x}:={s}]", rhs_steps(t, x, s), start, end)
                report.record(v)
    return report


def check_z_lambda(max_size: int = 6, nvars: int = 2, **_: Any) -> SuiteReport:
    report = SuiteReport("z", params={"max_size": max_size, "vars": nvars})
    for s in enumerate_terms(EnumConfig.with_vars(max_size, nvars)):
        bs = bullet(s)
        for t in reducts(s):
            first, second = z_steps(s, t)
            v = _seq_violation(s, t, "t->*b(s)", first, t, bs) or _seq_violation(
                s, t, "b(s)->*b(t)", second, bs, bullet(t)
            )
            report.record(v)
    return report


def paths(t: Term, max_len: int) -> Iterator[list[Term]]:
    """All reduction sequences from ``t`` with at most ``max_len`` steps."""
    yield [t]
    if max_len > 0:
        for r in reducts(t):
            for rest in paths(r, max_len - 1):
                yield [t, *rest]


def peaks(t: Term, max_len: int = PEAK_LEG) -> Iterator[tuple[list[Term], list[Term]]]:
    legs = list(paths(t, max_len))
    for i, left in enumerate(legs):
        for right in legs[i:]:
            yield left, right


def check_join(max_size: int = 6, nvars: int = 2, **_: Any) -> SuiteReport:
    report = SuiteReport("join", params={"max_size": max_size, "vars": nvars, "leg": PEAK_LEG})
    view = lambda_view()
    for a in enumerate_terms(EnumConfig.with_vars(max_size, nvars)):
        for left, right in peaks(a):
            e, wl, wr = confluence_join(view, bullet, z_steps, left, right)
            v = _seq_violation(a, left[-1], "left-join", wl, left[-1], e) or _seq_violation(
                a, right[-1], "right-join", wr, right[-1], e
            )
            report.record(v)
    return report


def candidate_relations(ars, seed: int, depth: int) -> list:
    """Relations to test against the angle property for one finite ARS."""
    view = ars.view()
    closure = {(a, c) for a in ars.elements for c in view.reach(a, depth)[0]}
    rng = random.Random(seed)
    out = [set(ars.edges), closure]
    for _ in range(3):
        out.append(set(ars.edges) | {p for p in sorted(closure) if rng.random() < 0.5})
    return out


def check_angle_suite(seed: int = 0, depth: int = 6, count: int = 100, max_elems: int = 6, **_: Any) -> SuiteReport:
    """Z holds iff the development relation has the angle property, on random finite systems."""
    report = SuiteReport(
        "angle", params={"seed": seed, "depth": depth, "count": count, "max_elems": max_elems}
    )
    for i in range(seed, seed + count):
        ars = random_finite_ars(i, max_elems)
        view, b = ars.view(), ars.bullet_map()
        z_ok = check_z(view, b, ars.elements, depth) is None
        dev = dev_relation(view, b, ars.elements, depth)
        angle_ok = check_angle(view, b, dev, ars.elements, depth) is None
        v = None
        if z_ok != angle_ok:
            v = Violation(f"ars#{i}", None, "z<->angle", f"check_z ok={z_ok}, angle on dev ok={angle_ok}")
        else:
            for rel in [dev, *candidate_relations(ars, i, depth)]:
                if check_angle(view, b, rel, ars.elements, depth) is None:
                    w = angle_implies_z(view, b, rel, ars.elements, depth)
                    if w is not None:
                        v = Violation(f"ars#{i}", None, "angle->z", str(w))
                        break
        report.record(v)
    return report


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "subst": check_subst,
    "self": check_self,
    "rhs": check_rhs,
    "z": check_z_lambda,
    "angle": check_angle_suite,
    "join": check_join,
}


def run_suite(name: str, **params: Any) -> SuiteReport:
    return SUITES[name](**params)
