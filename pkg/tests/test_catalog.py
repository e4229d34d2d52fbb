from fractions import Fraction

import pytest

from rigidcheck.bounds import BoundName, closed_form_bound, min_prop22, required_params, thm01_attained_by

FLAGSHIP = {"M": 480, "k": 20}


@pytest.mark.parametrize(
    "name, expected",
    [
        (BoundName.THM31_TARGET, 68900),
        (BoundName.THM04, 68400),
        (BoundName.THM02, 80582),
        (BoundName.THM01, 68400),
        (BoundName.A, 76520),
    ],
)
def test_flagship_bounds(name, expected):
    assert closed_form_bound(name, FLAGSHIP) == expected


def test_prop22_at_top_level_equals_thm02():
    assert closed_form_bound("prop22", {"M": 480, "k": 20, "l": 20}) == 80582
    assert closed_form_bound(BoundName.B_OF, {"k": 20, "l": 20}) == 82
    assert min_prop22(480, 20) == (20, 80582)


def test_prop22_decreases_in_l():
    values = [closed_form_bound(BoundName.PROP22, {"M": 600, "k": 24, "l": l}) for l in range(1, 25)]
    assert values == sorted(values, reverse=True)
    assert len(set(values)) == len(values)


def test_thm01_is_the_smaller_side():
    assert thm01_attained_by(480, 20) is BoundName.THM04
    assert thm01_attained_by(20, 20) is BoundName.THM02
    assert closed_form_bound(BoundName.THM01, {"M": 20, "k": 20}) == 1692


def test_half_integers_stay_exact():
    assert closed_form_bound(BoundName.THM04, {"M": 11, "k": 2}) == Fraction(-1, 2)


def test_parameter_validation():
    with pytest.raises(ValueError):
        closed_form_bound(BoundName.THM02, {"M": 480})
    with pytest.raises(ValueError):
        closed_form_bound(BoundName.THM02, {"M": 480, "k": 20, "l": 3})
    with pytest.raises(KeyError):
        closed_form_bound("thm99", FLAGSHIP)
    assert required_params(BoundName.PROP22) == frozenset({"M", "k", "l"})
    assert required_params("lemma22") == frozenset({"M", "l", "a", "e"})


def test_remaining_catalogue_entries():
    assert closed_form_bound(BoundName.HYP_SINGULAR, FLAGSHIP) == (494 * 495) // 2 + 1
    assert closed_form_bound(BoundName.RANK_LOCUS, {"M": 480, "l": 3, "a": 24}) == (460 * 461) // 2
    assert closed_form_bound(BoundName.LEMMA22, {"M": 480, "l": 3, "a": 24, "e": 5}) == (460 * 461) // 2 - 4


def test_thm02_not_below_thm04_in_hypotheses():
    for k, M in [(20, 480), (21, 525), (25, 650), (40, 1200), (60, 1980)]:
        thm02 = closed_form_bound(BoundName.THM02, {"M": M, "k": k})
        thm04 = closed_form_bound(BoundName.THM04, {"M": M, "k": k})
        assert thm02 >= thm04


def _prop22_by_hand(M, k, l):
    b = max(k + l + 1, 4 * l + 2)
    return (M + 3 - b) * (M + 4 - b) // 2 - (l - 1)


@pytest.mark.slow
def test_prop22_minimum_is_thm02_on_grid():
    for k in range(2, 61):
        for M in range(8 * k, 8 * k + 201):
            l_min, value = min_prop22(M, k)
            expected_value, expected_l = min((_prop22_by_hand(M, k, l), l) for l in range(1, k + 1))
            assert (l_min, value) == (expected_l, expected_value), (k, M)
            assert l_min == k
            assert value == closed_form_bound(BoundName.THM02, {"M": M, "k": k})
