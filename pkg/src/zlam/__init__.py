"""Executable Z-property confluence proof for the untyped lambda calculus."""

from .beta import reachable, reduces_to, reducts, validate_seq
from .errors import InvalidSequence, ParseError, PreconditionError
from .superdev import bullet, rhs_steps, self_steps, z_steps
from .syntax import parse, print_term
from .terms import Abs, App, Term, Var, alpha_eq, free_vars, subst

__all__ = [
    "Term", "Var", "App", "Abs",
    "alpha_eq", "free_vars", "subst",
    "parse", "print_term",
    "reducts", "reachable", "reduces_to", "validate_seq",
    "bullet", "self_steps", "rhs_steps", "z_steps",
    "ParseError", "PreconditionError", "InvalidSequence",
]
