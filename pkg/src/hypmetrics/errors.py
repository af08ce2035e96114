"""Exception taxonomy for the toolkit.

Every error raised by the library derives from HypMetricsError so callers
(and the CLI) can distinguish tool errors from programming errors.
"""


class HypMetricsError(Exception):
    """Base class for all toolkit errors."""


class OutsideDomain(HypMetricsError):
    """A point lies outside the domain of the metric or operation."""


class SingularPoint(HypMetricsError):
    """Evaluation was requested at a declared singular point (e.g. z = 0)."""


class StencilOutsideDomain(HypMetricsError):
    """A finite-difference stencil does not fit inside the domain."""


class NonpositiveDensity(HypMetricsError):
    """The density is zero or negative where a positive value is required."""


class WindingBoundTooSmall(HypMetricsError):
    """The deck-transformation minimum was attained at the scan boundary."""


class DegenerateSample(HypMetricsError):
    """All sampled ratios equal 1; the fit is degenerate (equality case)."""


class TooFewPoints(HypMetricsError):
    """Not enough usable sample points for a fit."""


class WrongSingularityOrder(HypMetricsError):
    """The metric does not have the singularity type the operation expects."""


class NumericOverflow(HypMetricsError):
    """A solution exceeded the overflow guard (blow-up reached)."""


class BadParameter(HypMetricsError):
    """A parameter is outside its declared range."""


class GridTooShort(HypMetricsError):
    """A radial grid does not reach deep enough for classification."""


class UnknownSuite(HypMetricsError):
    """The requested verification suite does not exist."""


class ParseError(HypMetricsError):
    """A metric/domain/map specification string could not be parsed."""
