"""Exception types raised by the toolkit."""


class DomainError(ValueError):
    """An argument lies outside its mathematical domain (e.g. p not in (0, 1))."""


class DegenerateSampleError(ValueError):
    """The sample is too small or has zero variation, so nothing can be estimated."""


class EmptyInputError(ValueError):
    """An operation that needs at least one element received none."""


class ParseError(ValueError):
    """A row of an input file could not be parsed."""

    def __init__(self, row: int, reason: str):
        super().__init__(f"row {row}: {reason}")
        self.row = row
        self.reason = reason


class EmptyDatasetError(ValueError):
    """The input file contained no data rows."""


class UnsupportedFormatError(ValueError):
    """An unknown output format was requested."""


class NumericalError(RuntimeError):
    """No distribution family could be fitted to the data."""
