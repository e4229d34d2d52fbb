from fractions import Fraction

import mpmath
import pytest

from rigidcheck.analytic import (
    Interval,
    IntervalDomainError,
    dyadic_to_decimal,
    e_interval,
    exp,
    iv_transcendental,
    ln2_interval,
    log,
    pi_interval,
    power,
    sqrt,
)


def _mp(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def _encloses(interval: Interval, reference) -> bool:
    return _mp(interval.lo) <= reference <= _mp(interval.hi)


@pytest.fixture(autouse=True)
def high_precision_oracle():
    mpmath.mp.dps = 120
    yield
    mpmath.mp.dps = 15


def test_constants_enclose_reference_values():
    assert _encloses(pi_interval(128), mpmath.pi)
    assert _encloses(ln2_interval(128), mpmath.log(2))
    assert _encloses(e_interval(128), mpmath.e)
    for constant in (pi_interval(128), ln2_interval(128), e_interval(128)):
        assert 0 < constant.width < Fraction(1, 2**120)


def test_ln2_and_ln10_at_256_bits():
    ln2 = ln2_interval(256)
    ln10 = log(Interval.point(10, 256))
    assert _encloses(ln2, mpmath.log(2))
    assert _encloses(ln10, mpmath.log(10))
    for constant in (ln2, ln10):
        assert 0 < constant.width < Fraction(1, 2**200)


@pytest.mark.parametrize("value", [2, 3, 20, 21, 480, Fraction(1, 3), Fraction(25, 24)])
def test_log_encloses_mpmath(value):
    enclosure = log(Interval.point(value, 128))
    assert _encloses(enclosure, mpmath.log(_mp(Fraction(value))))
    assert enclosure.width < Fraction(1, 2**100)


@pytest.mark.parametrize("value", [Fraction(1, 4), 1, -3, 40, Fraction(-7, 2)])
def test_exp_encloses_mpmath(value):
    enclosure = exp(Interval.point(value, 128))
    assert _encloses(enclosure, mpmath.exp(_mp(Fraction(value))))


def test_sqrt_and_power():
    assert _encloses(sqrt(Interval.point(2, 128)), mpmath.sqrt(2))
    two = Interval.point(2, 128)
    assert _encloses(power(two, Interval.point(Fraction(1, 2), 128)), mpmath.sqrt(2))


def test_domain_errors():
    with pytest.raises(IntervalDomainError):
        log(Interval(Fraction(0), Fraction(1)))
    with pytest.raises(IntervalDomainError):
        sqrt(Interval(Fraction(-1), Fraction(1)))
    with pytest.raises(IntervalDomainError):
        Interval(Fraction(-1), Fraction(1)).reciprocal()
    with pytest.raises(IntervalDomainError):
        1 / Interval(Fraction(-1), Fraction(2))
    with pytest.raises(ValueError):
        Interval(Fraction(2), Fraction(1))


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        Interval.point(0.5)


def test_decimal_strings_are_exact():
    x = Interval.enclosing("0.5", "0.75")
    assert (x.lo, x.hi) == (Fraction(1, 2), Fraction(3, 4))
    third = Interval.point(Fraction(1, 3), 64)
    assert third.contains(Fraction(1, 3))
    assert not third.is_point()


def test_arithmetic_contains_sampled_results(rng):
    for _ in range(200):
        a_lo, a_hi = sorted(Fraction(int(v), 1000) for v in rng.integers(-5000, 5000, size=2))
        b_lo, b_hi = sorted(Fraction(int(v), 1000) for v in rng.integers(1, 5000, size=2))
        a, b = Interval(a_lo, a_hi, 64), Interval(b_lo, b_hi, 64)
        x = a_lo + (a_hi - a_lo) * Fraction(int(rng.integers(0, 101)), 100)
        y = b_lo + (b_hi - b_lo) * Fraction(int(rng.integers(0, 101)), 100)
        assert (a + b).contains(x + y)
        assert (a - b).contains(x - y)
        assert (a * b).contains(x * y)
        assert (a / b).contains(x / y)
        assert (a**2).contains(x * x)
        assert abs(a).contains(abs(x))


def test_mixed_operands_and_powers():
    x = Interval(Fraction(-2), Fraction(3))
    assert x**2 == Interval(Fraction(0), Fraction(9))
    assert x**3 == Interval(Fraction(-8), Fraction(27))
    assert (1 - x) == Interval(Fraction(-2), Fraction(3))
    assert (x * Fraction(1, 2)).hi == Fraction(3, 2)
    assert -x == Interval(Fraction(-3), Fraction(2))


def test_split_and_hull():
    x = Interval(Fraction(2), Fraction(24))
    low, high = x.split()
    assert low.hi == high.lo == 13
    assert low.hull(high) == x
    assert x.contains(low) and x.contains(high)


def test_dyadic_rendering():
    assert dyadic_to_decimal(Fraction(3, 8)) == "0.375"
    assert dyadic_to_decimal(Fraction(-5, 4)) == "-1.25"
    assert dyadic_to_decimal(Fraction(7)) == "7"
    assert dyadic_to_decimal(Fraction(1, 3)) == "1/3"
    assert dyadic_to_decimal(Fraction(1, 1024)) == "0.0009765625"


def test_transcendental_lookup():
    x = Interval.point(3, 64)
    assert iv_transcendental("log", x, 128).precision == 128
    with pytest.raises(KeyError):
        iv_transcendental("sin", x)
