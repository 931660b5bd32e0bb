"""Exact Hahn-series arithmetic with truncation structures.

Core layers: exponent groups and coefficient fields, finite-support
series with the truncation calculus, lazy grid series with inversion,
the truncation-structure interface plus its property-based checker,
and the constructive series embedding. A FastAPI service and a thin
CLI client sit on top.
"""

from .coefficients import Coefficient, CoefficientField
from .checker import (
    CheckItem,
    CheckReport,
    SampleSet,
    check_axioms,
    check_hahn_space,
    check_lemmas,
    run_standard_checks,
)
from .embedding import Budget, EmbeddingResult, embed, roundtrip_identity, verify_embedding
from .errors import (
    EvalError,
    FieldMismatchError,
    GridSearchLimitError,
    GroupMismatchError,
    HahnError,
    NotInvertibleError,
    ParseError,
    ResidueUndefinedError,
    StructureViolationError,
    UnsupportedGroupError,
)
from .exponents import INFINITY, Exponent, ExponentGroup, ExponentOrInf
from .grid import GridSeries, invert, lift
from .series import (
    FiniteSeries,
    asymptotic_to,
    dominated_by,
    same_magnitude,
    strictly_dominated_by,
)
from .structure import (
    MODELS,
    GridHahnModel,
    HahnModel,
    LeTruncationModel,
    NonadditiveTruncModel,
    ScaledTauModel,
    TruncStructure,
    WideTauModel,
    build_model,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "CheckItem",
    "CheckReport",
    "Coefficient",
    "CoefficientField",
    "EmbeddingResult",
    "EvalError",
    "Exponent",
    "ExponentGroup",
    "ExponentOrInf",
    "FieldMismatchError",
    "FiniteSeries",
    "GridHahnModel",
    "GridSearchLimitError",
    "GridSeries",
    "GroupMismatchError",
    "HahnError",
    "HahnModel",
    "INFINITY",
    "LeTruncationModel",
    "MODELS",
    "NonadditiveTruncModel",
    "NotInvertibleError",
    "ParseError",
    "ResidueUndefinedError",
    "SampleSet",
    "ScaledTauModel",
    "StructureViolationError",
    "TruncStructure",
    "UnsupportedGroupError",
    "WideTauModel",
    "asymptotic_to",
    "build_model",
    "check_axioms",
    "check_hahn_space",
    "check_lemmas",
    "dominated_by",
    "embed",
    "invert",
    "lift",
    "roundtrip_identity",
    "run_standard_checks",
    "same_magnitude",
    "strictly_dominated_by",
    "verify_embedding",
]
