"""Exception types shared across the package."""


class SepformError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SepformError):
    """Invalid system file or polynomial expression."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class ModulusOverflowError(SepformError):
    """A requested prime does not fit in a machine word."""


class NotCoprimeError(SepformError):
    """Input polynomials share a nonconstant common factor."""


class NotZeroDimensionalError(SepformError):
    """The input system does not have finitely many solutions."""


class InexactDivisionError(SepformError):
    """exact_div was called with a non-divisor (internal logic bug)."""


class NotInvertibleError(SepformError):
    """Inverse modulo a univariate polynomial does not exist."""


class InseparabilityError(SepformError):
    """Squarefree part requested in characteristic <= deg(f)."""
