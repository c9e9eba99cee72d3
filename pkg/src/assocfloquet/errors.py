"""Exception hierarchy.

Validation errors (bad user input) derive from :class:`ValidationError`;
internal failures of the analytic pipeline derive from
:class:`AnalysisError`. The class name doubles as the diagnostic code the
CLI prints.
"""


class ValidationError(ValueError):
    """Input violates a modelling assumption."""

    @property
    def code(self) -> str:
        return type(self).__name__


class NotSymmetric(ValidationError):
    pass


class NotPSD(ValidationError):
    pass


class RateOutOfRange(ValidationError):
    pass


class EntryOutOfRange(ValidationError):
    pass


class ZeroSelfKernel(ValidationError):
    pass


class BadPhaseOrder(ValidationError):
    pass


class BadDuration(ValidationError):
    pass


class ParamOutOfRange(ValidationError):
    pass


class ConfigError(ValidationError):
    """Malformed run configuration (missing keys, wrong shapes)."""


class AnalysisError(ArithmeticError):
    """Numerical pipeline produced something the theory rules out."""

    @property
    def code(self) -> str:
        return type(self).__name__


class ConsistencyFailure(AnalysisError):
    """Two independent constructions of the same quantity disagree."""


class SpectralAnomaly(AnalysisError):
    pass


class DegenerateBasis(AnalysisError):
    pass
