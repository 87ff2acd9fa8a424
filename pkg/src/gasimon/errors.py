"""Exception hierarchy shared by every backend."""


class GASimonError(Exception):
    """Base class for all errors raised by this package."""


class WidthError(GASimonError, ValueError):
    """Bit widths of operands disagree or fall outside the supported range."""


class TableSyntaxError(GASimonError, ValueError):
    """A function-table file could not be parsed."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class ArityError(GASimonError, ValueError):
    """A function table has the wrong number of entries."""


class CapacityError(GASimonError, ValueError):
    """The output width cannot hold the requested number of distinct values."""


class ZeroMaskError(GASimonError, ValueError):
    """The all-zeros string was given where a nonzero mask is required."""


class OracleDomainError(GASimonError, ValueError):
    """The oracle gate was applied to a blade with a nonzero output register."""


class ReadoutError(GASimonError):
    """Mask readout produced no candidate that satisfies the mask property."""


class RangeError(GASimonError, ValueError):
    """A generator index or algebra width is outside the matrix backend's limit."""


class DimError(GASimonError, ValueError):
    """Matrix dimensions are incompatible."""


class NotMultivectorError(GASimonError, ValueError):
    """A matrix does not decode to an integer-coefficient multivector."""


class RoundLimitError(GASimonError):
    """The sampling loop ran out of rounds before collecting enough equations."""
