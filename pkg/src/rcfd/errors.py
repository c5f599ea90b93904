"""Exception hierarchy shared by every module in the package."""


class DesignError(Exception):
    """Base class for all errors raised by rcfd."""


class NotPrimePower(DesignError, ValueError):
    pass


class ZeroInverse(DesignError, ZeroDivisionError):
    pass


class RangeError(DesignError, ValueError):
    pass


class ShapeMismatch(DesignError, ValueError):
    pass


class KMismatch(ShapeMismatch):
    pass


class FieldMismatch(DesignError, ValueError):
    pass


class UnverifiedInput(DesignError, ValueError):
    """A combinator received a design that is not a regular row-column design."""


class UnsupportedShape(DesignError, ValueError):
    pass


class Indivisible(DesignError, ValueError):
    pass


class BadBase(DesignError, ValueError):
    pass


class NonExistent(DesignError):
    """No design with the requested parameters exists."""

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"no design exists: {verdict.reason.value}")


class KernelUnavailable(DesignError):
    """A pair of MOLS of some order q = 2 (mod 4) is needed but none is on hand."""


class NoSuchPair(DesignError):
    pass


class InternalAssertion(DesignError, AssertionError):
    pass


class ParseError(DesignError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class DimensionMismatch(ParseError):
    pass
