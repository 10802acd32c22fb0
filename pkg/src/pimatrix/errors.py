"""Exception hierarchy.

Everything raised on purpose by this package derives from :class:`PimError`.
Precondition violations (bad shapes, inputs outside the admissible domain,
predicates that an operation requires) are plain ``PimError`` subclasses;
breakdowns of a numerical process get the :class:`NumericalFailure` branch so
callers (and the CLI exit-code mapping) can tell the two apart.
"""


class PimError(Exception):
    """Base class for all package errors."""


class ShapeMismatch(PimError):
    """Operands have incompatible or non-square shapes."""


class NotPartialIsometry(PimError):
    """The operation requires a partial isometry and the input is not one."""


class NotContraction(PimError):
    """Input has operator norm exceeding one."""


class NotRealizable(PimError):
    """No partial isometry exists with the requested data."""


class InputOutOfDisk(PimError):
    """A parameter that must lie strictly inside the unit disk does not."""


class OutsideDisk(PimError):
    """An evaluation point that must lie in the open unit disk does not."""


class IllConditioned(PimError):
    """Eigenvalue clustering or a rank decision is too ambiguous to trust."""


class NotCnu(PimError):
    """The operation requires a completely non-unitary input."""


class NotNormal(PimError):
    """The operation requires a normal matrix."""


class DefectNotOne(PimError):
    """The operation requires a defect-one input."""


class DefectMismatch(PimError):
    """Two inputs that must share a defect do not."""


class UnsupportedSize(PimError):
    """The requested decision procedure does not cover this matrix size."""


class SpectralGapTooSmall(PimError):
    """Spectrum cannot be split cleanly into disk and circle parts."""


class EmptyIntersection(PimError):
    """A region intersection came out empty; indicates a numerical bug."""


class IndexOutOfRange(PimError):
    """Basis or entry index outside the valid range."""


class NumericalFailure(PimError):
    """Base class for breakdowns of a numerical process (CLI exit code 3)."""


class ConvergenceFailure(NumericalFailure):
    """An iterative decomposition did not converge."""


class SingularDenominator(NumericalFailure):
    """A denominator matrix in an evaluation is numerically singular."""


class RootOffCircle(NumericalFailure):
    """A root that must lie on the unit circle strayed too far from it."""
