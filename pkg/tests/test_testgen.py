import pytest

from oracles import debruijn
from zlam.syntax import parse as p
from zlam.terms import Abs, App, Var, size
from zlam.testgen import EnumConfig, enumerate_terms, random_finite_ars, random_term


def raw_trees(n, pool):
    if n == 1:
        return [Var(x) for x in pool]
    out = [Abs(x, b) for x in pool for b in raw_trees(n - 1, pool)]
    for k in range(1, n - 1):
        out += [App(f, a) for f in raw_trees(k, pool) for a in raw_trees(n - 1 - k, pool)]
    return out


def brute_count(max_size, pool):
    return len({debruijn(t) for n in range(1, max_size + 1) for t in raw_trees(n, pool)})


# frozen from brute_count (raw generation, then dedup on nameless encodings)
COUNTS = {
    ("x",): [1, 2, 4, 8, 17, 38, 89],
    ("x", "y"): [2, 5, 13, 37, 114, 376, 1299],
}


@pytest.mark.parametrize("pool", sorted(COUNTS))
def test_counts_match_brute_force(pool):
    for max_size, expected in enumerate(COUNTS[pool], 1):
        assert len(enumerate_terms(EnumConfig(max_size, pool))) == expected
        if max_size <= 6:
            assert brute_count(max_size, pool) == expected


def test_small_configurations():
    assert enumerate_terms(EnumConfig(1, ("x", "y"))) == [p("x"), p("y")]
    two = enumerate_terms(EnumConfig(2, ("x", "y")))
    assert two == [p("x"), p("y"), p(r"\a. a"), p(r"\a. y"), p(r"\a. x")]
    three = enumerate_terms(EnumConfig(3, ("x",)))
    assert p("x x") in three and p(r"\a. \b. b") in three
    assert len(three) == 4


def test_no_duplicates_and_size_order():
    terms = enumerate_terms(EnumConfig(6, ("x", "y")))
    assert len(terms) == len(set(terms))
    sizes = [size(t) for t in terms]
    assert sizes == sorted(sizes)


def test_downward_closed():
    cfg = EnumConfig(6, ("x", "y"))
    terms = set(enumerate_terms(cfg))
    for t in terms:
        if isinstance(t, App):
            assert t.fun in terms and t.arg in terms
        elif isinstance(t, Abs) and t.body.free_vars <= set(cfg.var_pool):
            assert t.body in terms


def test_enumeration_is_deterministic():
    cfg = EnumConfig(5, ("x", "y"))
    assert [repr(t) for t in enumerate_terms(cfg)] == [repr(t) for t in enumerate_terms(cfg)]


def test_config_validation():
    with pytest.raises(ValueError):
        EnumConfig(0)
    with pytest.raises(ValueError):
        EnumConfig(3, ())
    with pytest.raises(ValueError):
        EnumConfig(3, ("x", "x"))
    assert EnumConfig.with_vars(3, 2).var_pool == ("x", "y")


def test_random_term():
    cfg = EnumConfig(7, ("x", "y"))
    assert repr(random_term(0, cfg)) == repr(random_term(0, cfg))
    for seed in range(200):
        t = random_term(seed, cfg)
        assert size(t) <= cfg.max_size
        assert t.free_vars <= set(cfg.var_pool)


def test_random_finite_ars():
    one = random_finite_ars(0, 1)
    assert one.elements == ("0",)
    assert one.bullet["0"] == "0"
    assert random_finite_ars(3, 6) == random_finite_ars(3, 6)
    system = random_finite_ars(7, 6)
    assert len(system.elements) <= 6
    carrier = set(system.elements)
    assert all(a in carrier and c in carrier for a, c in system.edges)
    with pytest.raises(ValueError):
        random_finite_ars(0, 0)
