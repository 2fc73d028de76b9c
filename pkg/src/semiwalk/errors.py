"""Exception hierarchy shared by all semiwalk modules."""


class SemiwalkError(Exception):
    """Base class for all errors raised by this package."""


class NegativeWeightError(SemiwalkError):
    """A graph weight or matrix entry is negative."""


class DanglingNodeError(SemiwalkError):
    """A node has no outgoing weight and dangling-node patching is disabled."""

    def __init__(self, node: int):
        self.node = node
        super().__init__(f"node {node} has no outgoing weight (zero column)")


class NotStochasticError(SemiwalkError):
    """A column of a transition matrix does not sum to one."""

    def __init__(self, column: int, deviation: float):
        self.column = column
        self.deviation = deviation
        super().__init__(
            f"column {column} deviates from unit sum by {deviation:.3e}"
        )


class ParseError(SemiwalkError):
    """Malformed serialized input; carries a line/field locus when known."""

    def __init__(self, message: str, line: int | None = None, field: int | str | None = None):
        self.line = line
        self.field = field
        locus = ""
        if line is not None:
            locus += f" (line {line}"
            locus += f", field {field})" if field is not None else ")"
        elif field is not None:
            locus += f" (field {field})"
        super().__init__(message + locus)


class IndexOutOfRangeError(SemiwalkError, IndexError):
    """A node index is outside 0..N-1."""


class DimensionMismatchError(SemiwalkError):
    """Operands built for different node counts were combined."""


class TooLargeError(SemiwalkError):
    """The requested dense computation exceeds the configured size cap."""


class TooSmallError(SemiwalkError):
    """The requested structure is below the minimum supported size."""


class InsufficientRangeError(SemiwalkError):
    """A candidate period exists but the range is too short to witness it twice."""


class RankFailedError(SemiwalkError):
    """A family member's limiting distribution could not be certified."""


class UnsupportedSizeError(SemiwalkError):
    """The circuit constructions only support two-node graphs."""
