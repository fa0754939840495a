import pytest
from hypothesis import strategies as st

from zlam.syntax import parse
from zlam.terms import Abs, App, Var
from zlam.testgen import EnumConfig, enumerate_terms

I = parse(r"\x. x")
OMEGA = parse(r"(\x. x x) (\x. x x)")

NAMES = st.sampled_from(["x", "y", "z", "x1", "w"])


def _extend(children):
    return st.one_of(
        st.builds(App, children, children),
        st.builds(Abs, NAMES, children),
    )


terms = st.recursive(st.builds(Var, NAMES), _extend, max_leaves=8)


@pytest.fixture(scope="session")
def small_terms():
    return enumerate_terms(EnumConfig(5, ("x", "y")))


@pytest.fixture(scope="session")
def tiny_terms():
    return enumerate_terms(EnumConfig(3, ("x", "y")))


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
