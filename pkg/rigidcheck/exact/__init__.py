"""Exact integer and rational arithmetic for degree tuples and slope sequences."""

from .degrees import (
    DegreeSyntaxError,
    DegreeTuple,
    SingularityLevel,
    check_level,
    parse_degrees,
    total_degree,
)
from .slopes import (
    FOUR_THIRDS,
    SlopeSequence,
    binomial,
    cutoff,
    floor_two_log,
    gamma_threshold,
    lemma13_slope_bound,
    printed_count_discrepancy,
    slope_counts,
    slope_product,
    slope_sequence,
    tail_product,
)

__all__ = [
    "FOUR_THIRDS",
    "DegreeSyntaxError",
    "DegreeTuple",
    "SingularityLevel",
    "SlopeSequence",
    "binomial",
    "check_level",
    "cutoff",
    "floor_two_log",
    "gamma_threshold",
    "lemma13_slope_bound",
    "parse_degrees",
    "printed_count_discrepancy",
    "slope_counts",
    "slope_product",
    "slope_sequence",
    "tail_product",
    "total_degree",
]
