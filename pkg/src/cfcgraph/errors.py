"""Exception types shared across the package."""


class CfcError(Exception):
    """Base class for all package-specific errors."""


class ParseError(CfcError):
    """Malformed graph or coloring input."""

    def __init__(self, message: str, *, line: int | None = None, offset: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line})"
        elif offset is not None:
            loc = f" (byte offset {offset})"
        super().__init__(message + loc)
        self.line = line
        self.offset = offset


class DisconnectedGraphError(CfcError):
    """The operation is defined only for connected graphs."""


class UnsupportedShapeError(CfcError):
    """The graph falls outside the shapes handled by the closed-form routines."""


class ColoringError(CfcError):
    """The coloring is partial or otherwise ill-formed for the target graph."""


class BudgetExceededError(CfcError):
    """A search or check was aborted after exhausting its step budget.

    ``lo`` and ``hi`` bound the answer proven before the abort, when known.
    """

    def __init__(self, message: str, *, lo: int | None = None, hi: int | None = None):
        super().__init__(message)
        self.lo = lo
        self.hi = hi


class RangeExhaustedError(CfcError):
    """No valid coloring exists within the requested color range."""

    def __init__(self, lo: int, hi: int):
        super().__init__(f"no valid coloring with {lo}..{hi} colors exists")
        self.lo = lo
        self.hi = hi


class ReconstructionError(CfcError):
    """A generated family member failed its structural self-checks."""


class UnresolvedIntervalError(CfcError):
    """A coloring certificate was requested for an interval-valued classification."""
