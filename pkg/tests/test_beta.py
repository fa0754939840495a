import pytest
from hypothesis import given, settings

from conftest import I, OMEGA, terms
from zlam.beta import (
    abs_coherence,
    concat,
    cong_abs,
    cong_app_left,
    cong_app_right,
    is_step,
    reachable,
    reduces_to,
    reducts,
    subst_left_step,
    subst_right_steps,
    validate_seq,
)
from zlam.errors import InvalidSequence, PreconditionError
from zlam.syntax import parse as p
from zlam.terms import Abs, App, Var, subst


def positions(t, path=()):
    yield path, t
    if isinstance(t, App):
        yield from positions(t.fun, path + (0,))
        yield from positions(t.arg, path + (1,))
    elif isinstance(t, Abs):
        yield from positions(t.body, path + (0,))


def replace(t, path, new):
    if not path:
        return new
    head, rest = path[0], path[1:]
    if isinstance(t, App):
        if head == 0:
            return App(replace(t.fun, rest, new), t.arg)
        return App(t.fun, replace(t.arg, rest, new))
    return Abs(t.binder, replace(t.body, rest, new))


def brute_reducts(t):
    out = set()
    for path, sub in positions(t):
        if isinstance(sub, App) and isinstance(sub.fun, Abs):
            out.add(replace(t, path, subst(sub.fun.body, sub.fun.binder, sub.arg)))
    return out


@pytest.mark.parametrize(
    "src, expected",
    [
        ("y", []),
        (r"(\x. x) y", ["y"]),
        (r"(\x. x x) (\y. y)", [r"(\y. y) (\y. y)"]),
        (r"(\x. x) ((\y. y) z)", [r"(\y. y) z"]),
        (r"(\x. x) ((\y. y y) z)", [r"(\y. y y) z", r"(\x. x) (z z)"]),
        (r"(\x. (\y. y) x x) z", [r"(\y. y) z z", r"(\x. x x) z"]),
        (r"w ((\x. x) z) (\y. (\x. x) y)", [r"w z (\y. (\x. x) y)", r"w ((\x. x) z) (\y. y)"]),
    ],
)
def test_reducts_examples(src, expected):
    assert reducts(p(src)) == [p(e) for e in expected]


def test_reducts_dedup():
    # two redexes contracting to the same term
    t = p(r"(\x. x) y ((\x. x) y)")
    rs = reducts(t)
    assert len(rs) == len(set(rs)) == 2


def test_reducts_match_position_oracle(small_terms):
    for t in small_terms:
        rs = reducts(t)
        assert len(rs) == len(set(rs))
        assert set(rs) == brute_reducts(t)


@given(terms)
def test_reducts_match_position_oracle_random(t):
    assert set(reducts(t)) == brute_reducts(t)


@given(terms)
def test_abstraction_reducts_are_abstractions(t):
    for r in reducts(Abs("q", t)):
        assert isinstance(r, Abs)


def test_is_step():
    assert is_step(p(r"(\x. x) y"), p("y"))
    assert not is_step(p("y"), p("y"))
    assert is_step(OMEGA, OMEGA)
    assert is_step(OMEGA, p(r"(\a. a a) (\b. b b)"))


def test_validate_seq():
    assert validate_seq([p("y")])
    assert validate_seq([p(r"(\x. x) y"), p("y")])
    assert not validate_seq([p("y"), p("x")])
    assert not validate_seq([])


def test_reachable():
    assert reachable(p("y"), 5) == {p("y")}
    assert reachable(p(r"(\x. x) y"), 1) == {p(r"(\x. x) y"), p("y")}
    assert reachable(OMEGA, 3) == {OMEGA}
    assert reachable(p(r"(\x. x) y"), 0) == {p(r"(\x. x) y")}


def test_reduces_to():
    assert reduces_to(p("y"), p("y"), 0) == [p("y")]
    seq = reduces_to(p(r"(\x. x) (\y. y) z"), p("z"), 3)
    assert seq is not None and len(seq) == 3 and validate_seq(seq)
    assert reduces_to(p(r"(\x. x) y"), p("z"), 5) is None
    assert reduces_to(p(r"(\x. x) (\y. y) z"), p("z"), 1) is None


@settings(max_examples=50)
@given(terms)
def test_reachable_monotone_and_consistent_with_search(t):
    r1, r2 = reachable(t, 1), reachable(t, 2)
    assert r1 <= r2
    for target in r2:
        seq = reduces_to(t, target, 2)
        assert seq is not None and validate_seq(seq) and seq[-1] == target
    for target in reducts(Var("q")):
        assert reduces_to(t, target, 2) is None


def test_cong_app_left():
    assert cong_app_left([p(r"(\x. x) y"), p("y")], p("z")) == [p(r"(\x. x) y z"), p("y z")]
    assert cong_app_left([p("y")], p("z")) == [p("y z")]
    seq = cong_app_left([OMEGA, OMEGA], I)
    assert seq == [App(OMEGA, I), App(OMEGA, I)] and validate_seq(seq)
    with pytest.raises(InvalidSequence):
        cong_app_left([p("y"), p("x")], p("z"))


def test_cong_app_right():
    assert cong_app_right(p("z"), [p(r"(\x. x) y"), p("y")]) == [p(r"z ((\x. x) y)"), p("z y")]
    assert cong_app_right(p("z"), [p("y")]) == [p("z y")]
    seq = cong_app_right(I, [App(I, I), I])
    assert seq == [App(I, App(I, I)), App(I, I)] and validate_seq(seq)


def test_cong_abs():
    assert cong_abs("x", [p(r"(\y. y) x"), p("x")]) == [p(r"\x. (\y. y) x"), p(r"\x. x")]
    assert cong_abs("x", [p("x")]) == [p(r"\x. x")]
    seq = cong_abs("z", [App(I, I), I])
    assert seq == [Abs("z", App(I, I)), Abs("z", I)] and validate_seq(seq)


def test_subst_right_steps():
    step = [p(r"(\z. z) w"), p("w")]
    assert subst_right_steps(p("y"), "x", step) == [p("y")]
    assert subst_right_steps(p("x"), "x", step) == step
    seq = subst_right_steps(p("x x"), "x", step)
    assert len(seq) == 3 and validate_seq(seq)
    assert seq[0] == p(r"(\z. z) w ((\z. z) w)") and seq[-1] == p("w w")


def test_subst_right_steps_under_capturing_binder():
    # the binder w must be renamed away from the substituend's free w
    step = [p(r"(\z. z) w"), p("w")]
    seq = subst_right_steps(p(r"\w. x w"), "x", step)
    assert validate_seq(seq)
    assert seq[0] == subst(p(r"\w. x w"), "x", step[0])
    assert seq[-1] == subst(p(r"\w. x w"), "x", step[1])


@settings(max_examples=60)
@given(terms, terms)
def test_subst_right_steps_endpoints(t, s):
    for s1 in reducts(s)[:2]:
        seq = subst_right_steps(t, "x", [s, s1])
        assert validate_seq(seq)
        assert seq[0] == subst(t, "x", s) and seq[-1] == subst(t, "x", s1)


def test_subst_left_step():
    assert subst_left_step(p(r"(\y. y) x"), p("x"), "x", p("z")) == [p(r"(\y. y) z"), p("z")]
    assert subst_left_step(p(r"(\y. y) w"), p("w"), "x", p("z")) == [p(r"(\y. y) w"), p("w")]
    assert subst_left_step(OMEGA, OMEGA, "x", p("z")) == [OMEGA, OMEGA]
    with pytest.raises(PreconditionError):
        subst_left_step(p("x"), p("x"), "x", p("z"))


@settings(max_examples=60)
@given(terms, terms)
def test_subst_left_step_random(s, u):
    for t in reducts(s):
        seq = subst_left_step(s, t, "x", u)
        assert len(seq) == 2 and validate_seq(seq)


def test_abs_coherence():
    body, seq = abs_coherence("x", p(r"(\y. y) x"), [p(r"\x. (\y. y) x"), p(r"\x. x")])
    assert body == p("x") and seq == [p(r"(\y. y) x"), p("x")]
    assert abs_coherence("x", p("x"), [p(r"\x. x")]) == (p("x"), [p("x")])
    body, seq = abs_coherence("z", App(I, I), [Abs("z", App(I, I)), Abs("z", I)])
    assert body == I and seq == [App(I, I), I]


def test_abs_coherence_with_renamed_binders():
    # the sequence uses a different binder name than the one requested
    seq = [p(r"\a. (\y. y) a"), p(r"\b. b")]
    body, bodies = abs_coherence("x", p(r"(\y. y) x"), seq)
    assert repr(body) == repr(Var("x"))
    assert validate_seq(bodies)


def test_abs_coherence_rejects_bad_input():
    with pytest.raises(PreconditionError):
        abs_coherence("x", p("x"), [p(r"\x. y")])
    with pytest.raises(InvalidSequence):
        abs_coherence("x", p("x"), [p(r"\x. x"), p(r"\x. x")])


def test_concat_checks_joints():
    assert concat([p("x")], [p("x")]) == [p("x")]
    with pytest.raises(InvalidSequence):
        concat([p("x")], [p("y")])
