"""Exception types shared across the package."""


class DiagramError(ValueError):
    """A splice diagram is malformed or an operation on it is not defined."""


class ParseError(DiagramError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class NotDivisibleError(ArithmeticError):
    """Raised by exact Laurent division when the remainder is nonzero."""


class GeometryError(ValueError):
    pass


class InvariantViolation(AssertionError):
    """Two independent evaluations of the same quantity disagreed.

    This always signals either a malformed input that slipped past validation
    or a bug; it is never an expected outcome.
    """
