"""Hypertangent slope sequences and their tail products, computed exactly."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, floor
from typing import List, Tuple

from ..analytic.intervals import Interval, log
from .degrees import DegreeTuple, SingularityLevel, check_level

FOUR_THIRDS = Fraction(4, 3)

_START_PRECISION = 64
_MAX_PRECISION = 1 << 16


def binomial(n: int, r: int) -> int:
    """C(n, r) for non-negative integers; zero when r > n."""

    if n < 0 or r < 0:
        raise ValueError(f"binomial needs non-negative arguments, got ({n}, {r})")
    return comb(n, r)


@lru_cache(maxsize=None)
def floor_two_log(k: int) -> int:
    """[2 log k] with the natural logarithm, decided on a certified enclosure."""

    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if k == 1:
        return 0
    precision = _START_PRECISION
    while precision <= _MAX_PRECISION:
        enclosure = log(Interval.point(k, precision)) * 2
        low, high = floor(enclosure.lo), floor(enclosure.hi)
        if low == high:
            return low
        precision *= 2
    raise ArithmeticError(f"Could not separate 2 log {k} from an integer")


def cutoff(d: DegreeTuple, l: SingularityLevel) -> int:
    """N_l = M - max([2 log k], l)."""

    check_level(d, l)
    return d.M - max(floor_two_log(d.k), l)


@dataclass(slots=True, frozen=True)
class SlopeSequence:
    slopes: Tuple[Fraction, ...]
    cutoff: int
    level: SingularityLevel
    source: DegreeTuple

    def __len__(self) -> int:
        return len(self.slopes)

    def tail(self) -> Tuple[Fraction, ...]:
        return self.slopes[self.cutoff:]


def slope_counts(d: DegreeTuple, l: SingularityLevel) -> List[Tuple[Fraction, int]]:
    """Run-length form of the slope sequence, largest slope first."""

    check_level(d, l)
    counts: List[Tuple[Fraction, int]] = []
    if d.k - l:
        counts.append((Fraction(2), d.k - l))
    for j in range(2, d.top):
        multiplicity = sum(1 for degree in d if degree > j)
        if multiplicity:
            counts.append((Fraction(j + 1, j), multiplicity))
    return counts


def slope_sequence(d: DegreeTuple, l: SingularityLevel) -> SlopeSequence:
    slopes: List[Fraction] = []
    for slope, multiplicity in slope_counts(d, l):
        slopes.extend([slope] * multiplicity)
    return SlopeSequence(tuple(slopes), cutoff(d, l), l, d)


def slope_product(d: DegreeTuple, l: SingularityLevel, start: int, stop: int) -> Fraction:
    """Product of the slopes at 1-based positions ``start..stop`` inclusive."""

    if start < 1:
        raise ValueError(f"Positions are 1-based, got start={start}")
    numerator, denominator = 1, 1
    position = 0
    for slope, multiplicity in slope_counts(d, l):
        first, last = position + 1, position + multiplicity
        position = last
        exponent = min(last, stop) - max(first, start) + 1
        if exponent > 0:
            numerator *= slope.numerator**exponent
            denominator *= slope.denominator**exponent
    if stop > position:
        raise ValueError(f"Position {stop} is beyond the sequence length {position}")
    return Fraction(numerator, denominator)


def tail_product(d: DegreeTuple, l: SingularityLevel) -> Fraction:
    """beta(l): product of the slopes at positions N_l + 1 .. M - l."""

    return slope_product(d, l, cutoff(d, l) + 1, d.M - l)


def gamma_threshold(d: DegreeTuple, l: SingularityLevel) -> Fraction:
    """gamma_l = (4/3) / beta(l)."""

    return FOUR_THIRDS / tail_product(d, l)


def lemma13_slope_bound(d: DegreeTuple) -> Tuple[Fraction, Fraction]:
    """Largest slope past N_0 against 1 + 1/[M/k]."""

    counts = slope_counts(d, 0)
    n0 = cutoff(d, 0)
    position = 0
    largest = Fraction(1)
    for slope, multiplicity in counts:
        position += multiplicity
        if position > n0:
            largest = slope
            break
    # M >= k, so a >= 1
    return largest, 1 + Fraction(1, d.M // d.k)


def printed_count_discrepancy(d: DegreeTuple, l: SingularityLevel) -> int:
    """Length implied by counting pairs (i, alpha) from alpha = 1, minus M - l."""

    check_level(d, l)
    printed_total = (d.k - l) + sum(degree - 1 for degree in d)
    return printed_total - (d.M - l)
