"""Closed intervals with dyadic endpoints and outward rounding.

Endpoints are exact :class:`fractions.Fraction` values whose denominators are
powers of two. Every operation rounds the lower endpoint down and the upper
endpoint up to ``precision`` significant bits, so the true result of applying
the operation to any points of the inputs lies in the output.

Transcendental functions are evaluated in fixed point at ``precision + 32``
bits with explicit error bounds (counted in units of the last place), then
widened by that bound and rounded outward.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Callable, Dict, Tuple

DEFAULT_PRECISION = 128
GUARD_BITS = 32
# exp() reduces by multiples of ln 2; beyond this the result would not fit memory sensibly.
_EXP_ARGUMENT_LIMIT = 1 << 24

Number = int | Fraction


class IntervalDomainError(ValueError):
    """Raised when an interval operation leaves its mathematical domain."""


def _round_down(x: Fraction, precision: int) -> Fraction:
    if x == 0:
        return Fraction(0)
    n, d = x.numerator, x.denominator
    if d & (d - 1) == 0 and abs(n).bit_length() <= precision:
        return x
    exponent = abs(n).bit_length() - d.bit_length()
    shift = precision - exponent
    if shift >= 0:
        return Fraction((n << shift) // d, 1 << shift)
    return Fraction((n // (d << -shift)) << -shift)


def _round_up(x: Fraction, precision: int) -> Fraction:
    return -_round_down(-x, precision)


def _as_fraction(value: Number | str) -> Fraction:
    if isinstance(value, float):
        raise TypeError("Binary floats are not accepted; pass an int, Fraction or decimal string")
    return Fraction(value)


@dataclass(slots=True, frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    precision: int = DEFAULT_PRECISION

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", _as_fraction(self.lo))
        object.__setattr__(self, "hi", _as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"Interval endpoints out of order: {self.lo} > {self.hi}")
        if self.precision < 8:
            raise ValueError(f"Precision must be at least 8 bits, got {self.precision}")

    # -- construction ---------------------------------------------------------

    @classmethod
    def enclosing(cls, lo: Number | str, hi: Number | str | None = None, precision: int = DEFAULT_PRECISION) -> "Interval":
        """Smallest dyadic interval at ``precision`` bits containing [lo, hi]."""

        lo_q = _as_fraction(lo)
        hi_q = lo_q if hi is None else _as_fraction(hi)
        return cls(_round_down(lo_q, precision), _round_up(hi_q, precision), precision)

    @classmethod
    def point(cls, value: Number | str, precision: int = DEFAULT_PRECISION) -> "Interval":
        return cls.enclosing(value, None, precision)

    def with_precision(self, precision: int) -> "Interval":
        return Interval.enclosing(self.lo, self.hi, precision)

    # -- inspection -----------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def magnitude(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))

    def contains(self, value: Number | "Interval") -> bool:
        if isinstance(value, Interval):
            return self.lo <= value.lo and value.hi <= self.hi
        q = _as_fraction(value)
        return self.lo <= q <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def is_point(self) -> bool:
        return self.lo == self.hi

    def split(self) -> Tuple["Interval", "Interval"]:
        mid = self.midpoint
        return (
            Interval(self.lo, mid, self.precision),
            Interval(mid, self.hi, self.precision),
        )

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi), max(self.precision, other.precision))

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other: object) -> "Interval":
        if isinstance(other, Interval):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Interval.point(other, self.precision)
        return NotImplemented  # type: ignore[return-value]

    def _make(self, lo: Fraction, hi: Fraction, other: "Interval | None" = None) -> "Interval":
        precision = self.precision if other is None else max(self.precision, other.precision)
        return Interval(_round_down(lo, precision), _round_up(hi, precision), precision)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo, self.precision)

    def __abs__(self) -> "Interval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(Fraction(0), max(-self.lo, self.hi), self.precision)

    def __add__(self, other: object) -> "Interval":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self._make(self.lo + rhs.lo, self.hi + rhs.hi, rhs)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Interval":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self._make(self.lo - rhs.hi, self.hi - rhs.lo, rhs)

    def __rsub__(self, other: object) -> "Interval":
        lhs = self._coerce(other)
        if lhs is NotImplemented:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "Interval":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        products = (self.lo * rhs.lo, self.lo * rhs.hi, self.hi * rhs.lo, self.hi * rhs.hi)
        return self._make(min(products), max(products), rhs)

    __rmul__ = __mul__

    def reciprocal(self) -> "Interval":
        if self.lo <= 0 <= self.hi:
            raise IntervalDomainError(f"Division by an interval containing zero: [{self.lo}, {self.hi}]")
        return self._make(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: object) -> "Interval":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self * rhs.reciprocal()

    def __rtruediv__(self, other: object) -> "Interval":
        lhs = self._coerce(other)
        if lhs is NotImplemented:
            return NotImplemented
        return lhs * self.reciprocal()

    def __pow__(self, exponent: int) -> "Interval":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (self ** -exponent).reciprocal()
        if exponent == 0:
            return Interval(Fraction(1), Fraction(1), self.precision)
        lo_p, hi_p = self.lo ** exponent, self.hi ** exponent
        if exponent % 2 == 1 or self.lo >= 0:
            return self._make(lo_p, hi_p)
        if self.hi <= 0:
            return self._make(hi_p, lo_p)
        return self._make(Fraction(0), max(lo_p, hi_p))


def minimum(a: Interval, b: Interval) -> Interval:
    return Interval(min(a.lo, b.lo), min(a.hi, b.hi), max(a.precision, b.precision))


def maximum(a: Interval, b: Interval) -> Interval:
    return Interval(max(a.lo, b.lo), max(a.hi, b.hi), max(a.precision, b.precision))


# -- fixed-point kernels --------------------------------------------------------
#
# Each kernel returns (value, error) as integers scaled by 2**wp, with the true
# result inside [value - error, value + error] / 2**wp.


def _atanh_fixed(z: Fraction, wp: int) -> Tuple[int, int]:
    # 0 <= z <= 1/3: sum z^(2n+1)/(2n+1)
    Z = (z.numerator << wp) // z.denominator
    Z2 = (Z * Z) >> wp
    term = Z
    total = 0
    n = 0
    while term:
        total += term // (2 * n + 1)
        term = (term * Z2) >> wp
        n += 1
    return total, 6 * (n + 1) + 8


def _atan_inv_fixed(m: int, wp: int) -> Tuple[int, int]:
    # atan(1/m) for integer m >= 2
    m2 = m * m
    term = (1 << wp) // m
    total = 0
    n = 0
    while term:
        piece = term // (2 * n + 1)
        total += -piece if n % 2 else piece
        term //= m2
        n += 1
    return total, 2 * (n + 1) + 2


@lru_cache(maxsize=64)
def _ln2_fixed(wp: int) -> Tuple[int, int]:
    value, err = _atanh_fixed(Fraction(1, 3), wp)
    return 2 * value, 2 * err


@lru_cache(maxsize=64)
def _pi_fixed(wp: int) -> Tuple[int, int]:
    a, ea = _atan_inv_fixed(5, wp)
    b, eb = _atan_inv_fixed(239, wp)
    return 16 * a - 4 * b, 16 * ea + 4 * eb


def _floor_log2(x: Fraction) -> int:
    e = x.numerator.bit_length() - x.denominator.bit_length()
    scale = Fraction(2) ** e
    if x < scale:
        e -= 1
    elif x >= 2 * scale:
        e += 1
    return e


def _log_point(x: Fraction, wp: int) -> Tuple[Fraction, Fraction]:
    if x <= 0:
        raise IntervalDomainError(f"log of non-positive value {x}")
    if x == 1:
        return Fraction(0), Fraction(0)
    e = _floor_log2(x)
    m = x / Fraction(2) ** e
    series, err = _atanh_fixed((m - 1) / (m + 1), wp)
    value, err = 2 * series, 2 * err + 6
    if e:
        ln2, ln2_err = _ln2_fixed(wp)
        value += e * ln2
        err += abs(e) * ln2_err
    scale = 1 << wp
    return Fraction(value - err, scale), Fraction(value + err, scale)


def _exp_series(r: Fraction, wp: int) -> Tuple[int, int]:
    # |r| < 1/2: sum r^i / i!
    R = (r.numerator << wp) // r.denominator
    one = 1 << wp
    term = one
    total = one
    i = 1
    while term:
        term = ((term * R) >> wp) // i
        total += term
        i += 1
    return total, 3 * (i + 1) + 6


def _exp_point(x: Fraction, wp: int) -> Tuple[Fraction, Fraction]:
    if x == 0:
        return Fraction(1), Fraction(1)
    if abs(x) > _EXP_ARGUMENT_LIMIT:
        raise IntervalDomainError(f"exp argument {float(x):.3e} is out of range")
    n = round(x / Fraction(6931471805599453, 10**16))
    guard = wp + abs(n).bit_length() + 4
    ln2, ln2_err = _ln2_fixed(guard)
    scale = 1 << guard
    ln2_lo, ln2_hi = Fraction(ln2 - ln2_err, scale), Fraction(ln2 + ln2_err, scale)
    if n >= 0:
        r_lo, r_hi = x - n * ln2_hi, x - n * ln2_lo
    else:
        r_lo, r_hi = x - n * ln2_lo, x - n * ln2_hi
    lo_value, lo_err = _exp_series(r_lo, wp)
    hi_value, hi_err = _exp_series(r_hi, wp)
    power = Fraction(2) ** n
    unit = 1 << wp
    return (
        Fraction(lo_value - lo_err, unit) * power,
        Fraction(hi_value + hi_err, unit) * power,
    )


def _sqrt_point(x: Fraction, wp: int) -> Tuple[Fraction, Fraction]:
    if x < 0:
        raise IntervalDomainError(f"sqrt of negative value {x}")
    if x == 0:
        return Fraction(0), Fraction(0)
    w = wp - _floor_log2(x) // 2
    scaled = x * Fraction(4) ** w
    N = scaled.numerator // scaled.denominator
    s = isqrt(N)
    unit = Fraction(2) ** w
    upper = s if s * s == scaled else s + 1
    return Fraction(s) / unit, Fraction(upper) / unit


# -- interval functions --------------------------------------------------------


def log(x: Interval) -> Interval:
    if x.lo <= 0:
        raise IntervalDomainError(f"log of an interval touching zero: [{x.lo}, {x.hi}]")
    wp = x.precision + GUARD_BITS
    lo, _ = _log_point(x.lo, wp)
    _, hi = _log_point(x.hi, wp)
    return Interval.enclosing(lo, hi, x.precision)


def exp(x: Interval) -> Interval:
    wp = x.precision + GUARD_BITS
    lo, _ = _exp_point(x.lo, wp)
    _, hi = _exp_point(x.hi, wp)
    return Interval.enclosing(lo, hi, x.precision)


def sqrt(x: Interval) -> Interval:
    if x.lo < 0:
        raise IntervalDomainError(f"sqrt of an interval reaching below zero: [{x.lo}, {x.hi}]")
    wp = x.precision + GUARD_BITS
    lo, _ = _sqrt_point(x.lo, wp)
    _, hi = _sqrt_point(x.hi, wp)
    return Interval.enclosing(lo, hi, x.precision)


def power(base: Interval, exponent: Interval) -> Interval:
    """base ** exponent for a positive base, as exp(exponent * log(base))."""

    return exp(exponent * log(base))


@lru_cache(maxsize=32)
def ln2_interval(precision: int = DEFAULT_PRECISION) -> Interval:
    wp = precision + GUARD_BITS
    value, err = _ln2_fixed(wp)
    return Interval.enclosing(Fraction(value - err, 1 << wp), Fraction(value + err, 1 << wp), precision)


@lru_cache(maxsize=32)
def pi_interval(precision: int = DEFAULT_PRECISION) -> Interval:
    wp = precision + GUARD_BITS
    value, err = _pi_fixed(wp)
    return Interval.enclosing(Fraction(value - err, 1 << wp), Fraction(value + err, 1 << wp), precision)


@lru_cache(maxsize=32)
def e_interval(precision: int = DEFAULT_PRECISION) -> Interval:
    return exp(Interval.point(1, precision))


_TRANSCENDENTALS: Dict[str, Callable[[Interval], Interval]] = {
    "log": log,
    "exp": exp,
    "sqrt": sqrt,
}


def iv_transcendental(fn: str, x: Interval, precision: int | None = None) -> Interval:
    """Evaluate ``log``, ``exp`` or ``sqrt`` on ``x`` at ``precision`` bits."""

    try:
        func = _TRANSCENDENTALS[fn]
    except KeyError:
        raise KeyError(f"Unknown transcendental {fn!r}; expected one of {sorted(_TRANSCENDENTALS)}") from None
    if precision is not None and precision != x.precision:
        x = x.with_precision(precision)
    return func(x)


def dyadic_to_decimal(value: Fraction) -> str:
    """Exact decimal expansion of a dyadic rational, or ``p/q`` otherwise."""

    d = value.denominator
    if d & (d - 1):
        return f"{value.numerator}/{d}"
    q = d.bit_length() - 1
    if q == 0:
        return str(value.numerator)
    digits = abs(value.numerator) * 5**q
    sign = "-" if value < 0 else ""
    text = str(digits).rjust(q + 1, "0")
    whole, frac = text[:-q], text[-q:].rstrip("0")
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"


def interval_to_strings(x: Interval) -> Tuple[str, str]:
    return dyadic_to_decimal(x.lo), dyadic_to_decimal(x.hi)
