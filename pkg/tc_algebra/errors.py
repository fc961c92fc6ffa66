class TcAlgebraError(Exception):
    """Base class for every error raised by the tc_algebra package."""


class VariableCountError(TcAlgebraError):
    """Operands live over a different number of variables."""

    def __init__(self, expected, actual):
        super().__init__(f"variable count mismatch: expected {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


class DimensionMismatchError(TcAlgebraError):
    """Matrix sizes, vector lengths or permutation sizes do not agree."""


class IndexOutOfRangeError(TcAlgebraError):
    """An index lies outside of its admissible range."""


class BackendMismatchError(TcAlgebraError):
    """Conformal elements over different target algebras were combined."""


class RingMismatchError(TcAlgebraError):
    """Distributions over different coefficient rings were combined."""


class OddDimensionError(TcAlgebraError):
    """A symplectic operation was requested for an odd number of variables."""

    def __init__(self, n):
        super().__init__(f"symplectic structure needs an even number of variables, got n={n}")
        self.n = n


class InconsistentTableError(TcAlgebraError):
    """An evaluation table is not the table of any T-invariant map."""


class ReconstructionError(TcAlgebraError):
    """q-free parts persist up to the top layer of the probe window."""


class VarietyMismatchError(TcAlgebraError):
    """Operad elements of different varieties were combined."""


class ArityError(TcAlgebraError):
    """An operation received the wrong number of arguments or legs."""


class ParseError(TcAlgebraError):
    """Syntax error in an expression, with a 1-based position."""

    def __init__(self, message, line=1, column=1):
        where = "" if line is None else f" (line {line}, column {column})"
        super().__init__(message + where)
        self.message = message
        self.line = line
        self.column = column


class UnknownIdentifierError(ParseError):
    """An identifier that is not part of any sub-language."""


class SubLanguageError(ParseError):
    """Two sub-expressions belong to sub-languages that cannot be combined."""


class EvaluationError(TcAlgebraError):
    """A well-formed expression whose operands cannot be combined."""
