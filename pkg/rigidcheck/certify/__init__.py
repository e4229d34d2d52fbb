"""Per-instance certification of the exact inequality chain and grid sweeps."""

from .checks import (
    MIN_K,
    OVERALL_STATUSES,
    Certificate,
    certify_params,
    certify_tuple,
    hypothesis_check,
    hypothesis_margin,
    min_hypothesis_M,
)
from .config import VerifyConfig
from .results import CheckResult, combine_status, exact_check, exact_str
from .sweep import GridSpec, min_multiple_M, summarize, sweep

__all__ = [
    "Certificate",
    "CheckResult",
    "GridSpec",
    "MIN_K",
    "OVERALL_STATUSES",
    "VerifyConfig",
    "certify_params",
    "certify_tuple",
    "combine_status",
    "exact_check",
    "exact_str",
    "hypothesis_check",
    "hypothesis_margin",
    "min_hypothesis_M",
    "min_multiple_M",
    "summarize",
    "sweep",
]
