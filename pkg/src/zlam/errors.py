"""Exception types shared across the package."""


class ZlamError(Exception):
    pass


class PreconditionError(ZlamError, ValueError):
    """A lemma or witness builder was called outside its hypotheses."""


class InvalidSequence(PreconditionError):
    """A reduction sequence has an adjacent pair that is not a single step."""


class ParseError(ZlamError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column
