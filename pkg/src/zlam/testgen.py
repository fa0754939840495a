"""Deterministic term enumeration and seeded random generation."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .terms import Abs, App, Term, Var

__all__ = ["EnumConfig", "enumerate_terms", "terms_by_size", "random_term", "random_finite_ars", "POOL"]

POOL = ("x", "y", "z", "w", "v", "u")


@dataclass(frozen=True)
class EnumConfig:
    max_size: int
    var_pool: tuple[str, ...] = field(default=("x", "y"))

    def __post_init__(self) -> None:
        object.__setattr__(self, "var_pool", tuple(self.var_pool))
        if self.max_size < 1:
            raise ValueError("max_size must be positive")
        if not self.var_pool or len(set(self.var_pool)) != len(self.var_pool):
            raise ValueError("var_pool must be non-empty with distinct names")

    @classmethod
    def with_vars(cls, max_size: int, nvars: int) -> EnumConfig:
        if not 1 <= nvars <= len(POOL):
            raise ValueError(f"number of variables must be between 1 and {len(POOL)}")
        return cls(max_size, POOL[:nvars])


def terms_by_size(cfg: EnumConfig) -> list[list[Term]]:
    """``out[n]`` holds the alpha-classes of size exactly ``n`` (``out[0]`` is empty)."""
    by_size: list[list[Term]] = [[]]
    seen: set[Term] = set()
    for n in range(1, cfg.max_size + 1):
        layer: list[Term] = []

        def add(t: Term) -> None:
            if t not in seen:
                seen.add(t)
                layer.append(t)

        if n == 1:
            for x in cfg.var_pool:
                add(Var(x))
        else:
            for x in cfg.var_pool:
                for body in by_size[n - 1]:
                    add(Abs(x, body))
            for k in range(1, n - 1):
                for fun in by_size[k]:
                    for arg in by_size[n - 1 - k]:
                        add(App(fun, arg))
        by_size.append(layer)
    return by_size


def enumerate_terms(cfg: EnumConfig) -> list[Term]:
    """All alpha-classes up to ``cfg.max_size`` with names from the pool, smallest first."""
    return [t for layer in terms_by_size(cfg) for t in layer]


def _random_tree(rng: random.Random, n: int, pool: Sequence[str]) -> Term:
    if n == 1:
        return Var(rng.choice(pool))
    if n == 2 or rng.random() < 0.4:
        return Abs(rng.choice(pool), _random_tree(rng, n - 1, pool))
    k = rng.randint(1, n - 2)
    return App(_random_tree(rng, k, pool), _random_tree(rng, n - 1 - k, pool))


def random_term(seed: int, cfg: EnumConfig) -> Term:
    rng = random.Random(seed)
    return _random_tree(rng, rng.randint(1, cfg.max_size), cfg.var_pool)


def random_finite_ars(seed: int, max_elems: int):
    """A random finite ARS with a random bullet map, fixed by ``seed``."""
    from .ars import FiniteArs

    if max_elems < 1:
        raise ValueError("max_elems must be at least 1")
    rng = random.Random(seed)
    n = rng.randint(1, max_elems)
    elements = tuple(str(i) for i in range(n))
    density = rng.random()
    edges = frozenset((a, b) for a in elements for b in elements if rng.random() < density)
    bullet = {a: rng.choice(elements) for a in elements}
    return FiniteArs(elements, edges, bullet)
