# --------------------------------------------------------------------
# models/errors.py
# Error hierarchy shared by every module. `code` is module-qualified
# ("coxeter.NonSymmetric") and is what the CLI prints.
# --------------------------------------------------------------------
from __future__ import annotations

from typing import Any, Dict, Optional


class Coxwl2Error(Exception):
    module = "coxwl2"

    def __init__(self, message: str = "", details: Optional[Dict[str, Any]] = None):
        super().__init__(message or type(self).__name__)
        self.message = message or type(self).__name__
        self.details: Dict[str, Any] = dict(details or {})

    @property
    def code(self) -> str:
        return f"{self.module}.{type(self).__name__}"

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "details": self.details}


# ---- coxeter-core ----------------------------------------------------------

class CoxeterError(Coxwl2Error):
    module = "coxeter"


class NonSymmetric(CoxeterError):
    pass


class BadDiagonal(CoxeterError):
    pass


class LabelOutOfRange(CoxeterError):
    pass


class BadGenerator(CoxeterError):
    """Duplicate, empty or non-identifier generator name, or unknown name in a subset."""


class TooManyGenerators(CoxeterError):
    pass


class PrecisionFailure(CoxeterError):
    """A sign could not be certified within the configured precision ceiling."""


class InternalDisagreement(CoxeterError):
    """Two independent computations of the same quantity disagree."""


# ---- simplicial ------------------------------------------------------------

class SimplicialError(Coxwl2Error):
    module = "simplicial"


class DimensionTooHigh(SimplicialError):
    pass


class ComplexTooLarge(SimplicialError):
    pass


class NotASubcomplex(SimplicialError):
    pass


class NoneFound(SimplicialError):
    pass


class HomologyTooLarge(SimplicialError):
    pass


class NotASphere(SimplicialError):
    pass


# ---- growth ----------------------------------------------------------------

class GrowthError(Coxwl2Error):
    module = "growth"


class NotSpherical(GrowthError):
    pass


class OrderCapExceeded(GrowthError):
    pass


class BallCapExceeded(GrowthError):
    pass


class PoleEvaluation(GrowthError):
    pass


class PoleAtZero(GrowthError):
    pass


class MultidegreeMismatch(GrowthError):
    """Two Cayley-graph paths to one element produced different multidegrees."""


# ---- weighted --------------------------------------------------------------

class WeightedError(Coxwl2Error):
    module = "weighted"


class IrrationalWeight(WeightedError):
    pass


class NonPositiveWeight(WeightedError):
    pass


class WeightNotClassConstant(WeightedError):
    pass


class PreconditionFailed(WeightedError):
    pass


class Unclassified(WeightedError):
    pass


class SignViolation(WeightedError):
    pass


class RegimeConflict(WeightedError):
    pass


class UnresolvedInput(WeightedError):
    pass


# ---- davis-complex ---------------------------------------------------------

class DavisError(Coxwl2Error):
    module = "davis"


class RuinPreconditionFailed(DavisError):
    pass


# ---- cli -------------------------------------------------------------------

class CliError(Coxwl2Error):
    module = "cli"


class InputError(CliError):
    pass


class SchemaError(CliError):
    pass


class ConfigError(CliError):
    pass


NOT_APPLICABLE = (PreconditionFailed, Unclassified)
