from fractions import Fraction

import mpmath
import pytest

from rigidcheck.exact import (
    FOUR_THIRDS,
    binomial,
    cutoff,
    floor_two_log,
    gamma_threshold,
    lemma13_slope_bound,
    parse_degrees,
    printed_count_discrepancy,
    slope_counts,
    slope_product,
    slope_sequence,
    tail_product,
    total_degree,
)


def test_flagship_tail_product(flagship):
    beta = tail_product(flagship, 0)
    assert beta == Fraction(9765625, 7962624)
    assert beta < FOUR_THIRDS


def test_flagship_gamma_threshold(flagship):
    assert gamma_threshold(flagship, 0) == Fraction(10616832, 9765625)
    assert gamma_threshold(flagship, 0) > 1


def test_small_tuple_out_of_hypotheses():
    d = parse_degrees("2,3,3")
    assert tail_product(d, 0) == Fraction(9, 4)
    assert gamma_threshold(d, 0) == Fraction(16, 27)


@pytest.mark.parametrize("k, expected", [(1, 0), (2, 1), (3, 2), (20, 5), (21, 6)])
def test_floor_two_log_known_values(k, expected):
    assert floor_two_log(k) == expected


def test_floor_two_log_matches_mpmath():
    mpmath.mp.dps = 50
    for k in range(2, 400):
        assert floor_two_log(k) == int(mpmath.floor(2 * mpmath.log(k)))


def test_cutoff(flagship):
    assert cutoff(flagship, 0) == 475
    assert cutoff(flagship, 5) == 475
    assert cutoff(flagship, 7) == 473
    assert cutoff(flagship, 20) == 460


def test_sequence_shape(flagship):
    sequence = slope_sequence(flagship, 0)
    assert len(sequence) == 480
    assert sequence.slopes[:20] == (Fraction(2),) * 20
    assert sequence.slopes[20] == Fraction(3, 2)
    assert sequence.tail() == (Fraction(25, 24),) * 5
    assert list(sequence.slopes) == sorted(sequence.slopes, reverse=True)


def test_slope_identity_on_random_tuples(random_tuples):
    for d in random_tuples(500, k_hi=30, d_hi=40):
        assert slope_product(d, 0, 1, d.M) == total_degree(d)


def test_counts_cover_sequence_length(random_tuples):
    for d in random_tuples(50, k_hi=12, d_hi=15):
        for l in range(d.k + 1):
            assert sum(count for _, count in slope_counts(d, l)) == d.M - l
            assert len(slope_sequence(d, l)) == d.M - l


def test_slope_product_matches_sequence(random_tuples):
    for d in random_tuples(30, k_lo=2, k_hi=8, d_lo=3, d_hi=12):
        slopes = slope_sequence(d, 0).slopes
        start, stop = 2, max(2, len(slopes) - 1)
        expected = Fraction(1)
        for slope in slopes[start - 1 : stop]:
            expected *= slope
        assert slope_product(d, 0, start, stop) == expected


def test_slope_product_ranges(flagship):
    assert slope_product(flagship, 0, 10, 9) == 1
    with pytest.raises(ValueError):
        slope_product(flagship, 0, 0, 3)
    with pytest.raises(ValueError):
        slope_product(flagship, 0, 1, 481)


def test_lemma13_slope_bound(flagship):
    largest, ceiling = lemma13_slope_bound(flagship)
    assert largest == Fraction(25, 24)
    assert ceiling == Fraction(25, 24)
    assert largest <= ceiling


def test_printed_count_offset_is_k(random_tuples):
    for d in random_tuples(40, k_hi=10, d_hi=12):
        for l in (0, d.k):
            assert printed_count_discrepancy(d, l) == d.k


def test_tail_product_below_four_thirds_for_equal_degrees():
    for k, M in [(20, 480), (21, 525), (22, 550), (23, 598), (24, 624), (25, 650)]:
        d = parse_degrees(f"{M // k + 1}^{k}")
        for l in range(k + 1):
            assert tail_product(d, l) < FOUR_THIRDS


def test_binomial_guards():
    assert binomial(5, 7) == 0
    assert binomial(462, 2) == 106491
    with pytest.raises(ValueError):
        binomial(-1, 2)


def test_binomial_pascal_and_symmetry():
    for n in range(1, 201):
        assert binomial(n, 0) == binomial(n, n) == 1
        for r in range(1, n + 1):
            assert binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r)
            assert binomial(n, r) == binomial(n, n - r)


def test_tail_product_and_threshold_are_monotone_in_level(random_tuples):
    for d in random_tuples(30, k_hi=25, d_hi=30):
        beta0 = tail_product(d, 0)
        thresholds = [gamma_threshold(d, l) for l in range(d.k + 1)]
        for l in range(d.k + 1):
            assert tail_product(d, l) <= beta0
        assert thresholds == sorted(thresholds), d.label()
