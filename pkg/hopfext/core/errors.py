"""Exception hierarchy shared by all services."""


class HopfextError(Exception):
    """Base class for library errors."""


class FieldError(HopfextError):
    """Raised for an invalid characteristic, a reducible modulus or a missing root of unity."""


class ParseError(HopfextError):
    """Raised when an expression or scenario file cannot be parsed."""

    def __init__(self, msg: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line or column else ""
        super().__init__(f"{msg}{where}")


class PreconditionError(HopfextError):
    """Raised when input data violates a stated precondition."""


class InconclusiveError(HopfextError):
    """Raised when a degree bound or budget runs out before an answer is reached."""


class BudgetError(InconclusiveError):
    """Raised when a size cap is exceeded."""


class VerificationError(HopfextError):
    """Raised when a construction fails its own verification."""

    def __init__(self, msg: str, witness=None):
        self.witness = witness
        super().__init__(msg if witness is None else f"{msg}: {witness}")


class NotInvertibleError(HopfextError):
    """Raised when a convolution inverse does not exist."""
