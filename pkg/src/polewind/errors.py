"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for every failure raised by this package."""


class RootFindingError(ToolkitError):
    """Root finder could not meet its residual or pairing contract."""


class GcdError(ToolkitError):
    """Approximate common-divisor removal failed (ill-conditioned division)."""


class ResultantError(ToolkitError):
    """Evaluation/interpolation of a resultant broke down."""


class CurveValidationError(ToolkitError):
    """The input triple does not define a compact immersed rational curve.

    ``reason`` is a stable machine-readable code: ``real_pole``,
    ``noncompact_infinity``, ``cusp`` or ``degenerate``.
    """

    def __init__(self, message: str, reason: str = "degenerate"):
        super().__init__(message)
        self.reason = reason


class AuditError(ToolkitError):
    """Numeric breakdown inside the self-intersection audit."""


class WindingError(ToolkitError):
    """Winding computation failed (non-integral turn or exhausted budget)."""


class GenericityError(ToolkitError):
    """No generic rotation angle found within the attempt budget."""


class ConsistencyError(ToolkitError):
    """Two internal computations of the same quantity disagree."""


class LedgerError(ToolkitError):
    """A sweep ledger check failed (gap constancy, jump rule or endpoints)."""


class DegenerateInfinityError(ToolkitError):
    """A pole lands on a real point of the line at infinity.

    The signed hemisphere count is undefined there.  No real projective
    change of coordinates can repair this (real points at infinity stay
    real); only a genuine perturbation of the curve can.
    """

    def __init__(self, message: str, point=None):
        super().__init__(message)
        self.point = point


class ParseError(ToolkitError):
    """Curve-spec text failed to parse; carries source location."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class GenerationError(ToolkitError):
    """Random curve generation exhausted its redraw budget."""
