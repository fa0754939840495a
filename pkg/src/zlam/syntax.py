"""Concrete syntax for terms and reduction traces.

Grammar::

    term  := lam | app
    lam   := ('\\' | 'λ') var+ '.' term
    app   := atom atom*
    atom  := var | '(' term ')'
    var   := [a-z][A-Za-z0-9_']*

Application associates to the left and an abstraction body extends as far
right as possible. A lambda is not an atom, so ``x \\y. y`` is rejected and
must be written ``x (\\y. y)``.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple

from .errors import ParseError
from .terms import Abs, App, Term, Var

__all__ = ["parse", "parse_term", "print_term", "parse_trace", "format_trace"]

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<lam>[\\λ])|(?P<dot>\.)|(?P<lpar>\()|(?P<rpar>\))"
    r"|(?P<var>[a-z][A-Za-z0-9_']*)"
)

_DESCRIBE = {
    "lam": "'\\'",
    "dot": "'.'",
    "lpar": "'('",
    "rpar": "')'",
    "var": "variable",
    "eof": "end of input",
}


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "ws":
            newlines = m.group().count("\n")
            if newlines:
                line += newlines
                line_start = pos + m.group().rindex("\n") + 1
        else:
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected: str):
        tok = self.peek
        found = _DESCRIBE[tok.kind] if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"expected {expected}, found {found}", tok.line, tok.column)

    def expect(self, kind: str) -> Token:
        if self.peek.kind != kind:
            self.fail(_DESCRIBE[kind])
        tok = self.peek
        self.i += 1
        return tok

    def term(self) -> Term:
        if self.peek.kind == "lam":
            self.i += 1
            binders = [self.expect("var").text]
            while self.peek.kind == "var":
                binders.append(self.expect("var").text)
            if self.peek.kind != "dot":
                self.fail("variable or '.'")
            self.i += 1
            body = self.term()
            for x in reversed(binders):
                body = Abs(x, body)
            return body
        t = self.atom()
        while self.peek.kind in ("var", "lpar"):
            t = App(t, self.atom())
        return t

    def atom(self) -> Term:
        tok = self.peek
        if tok.kind == "var":
            self.i += 1
            return Var(tok.text)
        if tok.kind == "lpar":
            self.i += 1
            t = self.term()
            self.expect("rpar")
            return t
        self.fail("variable, '(' or '\\'" if self.i == 0 else "variable or '('")


def parse(src: str) -> Term:
    p = _Parser(src)
    t = p.term()
    if p.peek.kind != "eof":
        p.fail("end of input" if p.peek.kind != "lam" else "end of input (parenthesize lambda arguments)")
    return t


parse_term = parse


def print_term(t: Term) -> str:
    """Render with the fewest parentheses the grammar allows."""
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Abs):
        return f"\\{t.binder}. {print_term(t.body)}"
    fun = print_term(t.fun)
    if isinstance(t.fun, Abs):
        fun = f"({fun})"
    arg = print_term(t.arg)
    if not isinstance(t.arg, Var):
        arg = f"({arg})"
    return f"{fun} {arg}"


def parse_trace(text: str) -> list[Term]:
    """One term per line; blank lines and ``#`` comment lines are ignored."""
    terms = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            terms.append(parse(line))
        except ParseError as exc:
            raise ParseError(exc.message, lineno, exc.column) from None
    if not terms:
        raise ParseError("empty trace", 1, 1)
    return terms


def format_trace(seq: Iterable[Term]) -> str:
    return "\n".join(print_term(t) for t in seq) + "\n"
