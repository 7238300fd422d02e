"""Dynamic suffix array over a byte text under single-symbol substitutions."""

from .derived import SaRange
from .engine import Probe, QueryBudget
from .errors import DynSAError, InvariantViolation, PositionError, SymbolError, VersionError
from .index import DynamicSuffixArray
from .lce import BACKENDS, DEFAULT_BACKEND, DEFAULT_SEED, LceIndex
from .text import SENTINEL, ChangeRecord, DynamicText

__all__ = [
    "BACKENDS",
    "DEFAULT_BACKEND",
    "DEFAULT_SEED",
    "SENTINEL",
    "ChangeRecord",
    "DynSAError",
    "DynamicSuffixArray",
    "DynamicText",
    "InvariantViolation",
    "LceIndex",
    "PositionError",
    "Probe",
    "QueryBudget",
    "SaRange",
    "SymbolError",
    "VersionError",
]
__version__ = "0.1.0"
