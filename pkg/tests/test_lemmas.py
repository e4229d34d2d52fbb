from fractions import Fraction
from math import factorial

import mpmath
import pytest

from rigidcheck.analytic.intervals import exp
from rigidcheck.analytic.lemmas import (
    LEMMA_NAMES,
    check_lemma_inputs,
    derivative_audit,
    factorial_ratio,
    g1_audit,
    ine1_audit,
    lemma13_check,
    lemma31_regions,
    lemma31_suite,
    lemma32_check,
    lemma33_samples,
    lemma34_suite,
    lemma35_boxes,
    lemma35_suite,
    prop36_samples,
    run_lemma,
    stirling_log_factorial,
)
from rigidcheck.certify import VerifyConfig

ACCEPTANCE_POINTS = [(20, 480), (25, 600), (30, 750), (40, 1200), (50, 1600), (60, 2000)]


def _checks(result):
    return {check.name: check for check in result.checks}


def test_lemma13_chain(config):
    result = lemma13_check(20, 480, config)
    assert result.status == "pass"
    assert result.params["r"] == 5
    assert _checks(result)["lemma13_beta"].value == "9765625/7962624"


def test_lemma31_regions_partition_the_interval():
    left, right, middle = lemma31_regions(20, 480)
    assert left == (Fraction(2), Fraction(25, 2))
    assert right == (Fraction(481, 21), Fraction(24))
    assert middle == (Fraction(25, 2), Fraction(481, 21))


@pytest.mark.slow
def test_lemma31_flagship(config):
    result = lemma31_suite(20, 480, config)
    assert result.status == "pass"
    assert len(result.certificates) == 3
    assert [check.name for check in result.checks] == ["lemma31_region1", "lemma31_region2", "lemma31_region3"]
    assert all(certificate.certified for certificate in result.certificates)


@pytest.mark.slow
@pytest.mark.parametrize("k, M", ACCEPTANCE_POINTS)
def test_lemma31_grid(k, M, config):
    result = lemma31_suite(k, M, config)
    assert result.status == "pass"
    assert all(certificate.certified for certificate in result.certificates)


def test_lemma31_rejects_empty_regions(config):
    with pytest.raises(ValueError):
        lemma31_suite(20, 40, config)


@pytest.mark.slow
def test_ine1_printed_bound_is_refuted(config):
    result = ine1_audit(20, 480, config)
    checks = _checks(result)
    assert checks["ine1_symmetric"].status == "pass"
    assert checks["ine1_printed"].status == "fail"
    assert checks["ine1_printed"].severity == "info"
    assert result.status == "pass"
    assert result.certificates[1].counterexample is not None


def test_derivative_transcription(config):
    result = derivative_audit(20, 480, VerifyConfig(derivative_points=5))
    assert result.status == "pass"
    assert result.params["points"] == 5


def test_lemma32_legs(config):
    result = lemma32_check(20, 480, config)
    checks = _checks(result)
    assert checks["lemma32_exact"].status == "pass"
    assert checks["lemma32_sandwich_lower"].status == "pass"
    assert checks["lemma32_direct"].status == "pass"
    assert checks["lemma32_sandwich_upper"].status == "fail"
    assert checks["lemma32_sandwich_upper"].severity == "info"
    assert result.status == "pass"
    assert result.params["beta3_over_eps3"].startswith("[1.14")


@pytest.mark.parametrize("k, M", ACCEPTANCE_POINTS)
def test_lemma32_at_acceptance_points(k, M, config):
    checks = _checks(lemma32_check(k, M, config))
    assert checks["lemma32_exact"].status == "pass"
    assert checks["lemma32_sandwich_lower"].status == "pass"
    assert checks["lemma32_direct"].status == "pass"
    assert checks["lemma32_sandwich_upper"].status == "fail"
    assert checks["lemma32_sandwich_upper"].severity == "info"


def test_lemma32_uses_rational_a(config):
    result = lemma32_check(60, 2000, config)
    assert result.params["a"] == Fraction(100, 3)
    assert result.status == "pass"
    assert lemma32_check(20, 481, config).status == "pass"


def test_lemma32_rejects_small_a(config):
    with pytest.raises(ValueError):
        lemma32_check(20, 50, config)
    with pytest.raises(ValueError):
        lemma32_check(1, 480, config)


@pytest.mark.parametrize("k", [20, 27, 40])
def test_g1_identity(k):
    M = -(-int(8 * k * mpmath.log(k) + 1) // k) * k
    result = g1_audit(k, M)
    assert result.status == "pass"


def test_stirling_enclosure():
    mpmath.mp.dps = 50
    for n in (1, 3, 10, 443):
        enclosure = stirling_log_factorial(n)
        reference = mpmath.log(factorial(n))
        assert mpmath.mpf(enclosure.lo.numerator) / enclosure.lo.denominator <= reference
        assert reference <= mpmath.mpf(enclosure.hi.numerator) / enclosure.hi.denominator
    with pytest.raises(ValueError):
        stirling_log_factorial(0)


def test_stirling_encloses_every_small_factorial():
    for n in range(1, 201):
        assert exp(stirling_log_factorial(n)).contains(factorial(n)), n


def test_factorial_ratio():
    assert factorial_ratio(462, 2) == 106491
    assert factorial_ratio(2, 3) == 0


def test_lemma33_samples_pass(config):
    result = lemma33_samples(config=config)
    assert [check.name for check in result.checks] == [f"g2_at_{t}" for t in (20, 30, 50, 100, 200)]
    assert all(check.status == "pass" for check in result.checks)
    assert result.status == "pass"


@pytest.mark.slow
def test_lemma34_suite(config):
    result = lemma34_suite(20, 200, config)
    checks = _checks(result)
    assert set(checks) == {"g3_positive", "h1_nonnegative", "h2_margin"}
    assert all(check.status == "pass" for check in checks.values())
    assert result.status == "pass"
    assert len(result.certificates) == 3


def test_lemma35_box_layout():
    boxes = lemma35_boxes(20, 60, 10, 128)
    assert [name for name, _ in boxes][:2] == ["g4_lower_20_30", "g4_upper_20_30"]
    assert len(boxes) == 8
    _, upper = boxes[1]
    assert upper["s"].lo == 400 and upper["s"].hi == 3600


@pytest.mark.slow
def test_lemma35_suite(config):
    result = lemma35_suite(20, 40, 10, config)
    assert result.status == "pass"
    assert len(result.certificates) == 4


@pytest.mark.slow
def test_prop36_samples(config):
    result = prop36_samples((20, 30, 50), config)
    checks = _checks(result)
    assert set(checks) == {f"{name}_{t}" for name in ("g6_at", "g7_positive") for t in (20, 30, 50)}
    assert all(check.status == "pass" for check in checks.values())
    assert result.status == "pass"


def test_entries_are_json_ready(config):
    entry = lemma13_check(20, 480, config).to_entry()
    assert entry["name"] == "lemma1.3"
    assert entry["status"] == "pass"
    assert set(entry["detail"]) == {"params", "checks", "certificates"}
    assert entry["detail"]["params"]["k"] == "20"


def test_dispatch(config):
    assert LEMMA_NAMES[0] == "1.3"
    assert [result.name for result in run_lemma("1.3", 20, 480, config)] == ["lemma1.3"]
    with pytest.raises(ValueError):
        run_lemma("3.2", None, None, config)
    with pytest.raises(KeyError):
        run_lemma("9.9", 20, 480, config)


@pytest.mark.parametrize(
    "name, k, M",
    [
        ("1.3", None, 480),
        ("1.3", 30, 20),
        ("3.1", 20, 40),
        ("3.1", 1, 480),
        ("3.2", 20, 50),
    ],
)
def test_lemma_inputs_are_validated_up_front(name, k, M):
    with pytest.raises(ValueError):
        check_lemma_inputs(name, k, M)


def test_lemma_inputs_accept_valid_points():
    check_lemma_inputs("3.1", 60, 2000)
    check_lemma_inputs("3.2", 20, 481)
    check_lemma_inputs("3.4", None, None)
    with pytest.raises(KeyError):
        check_lemma_inputs("2.7", 20, 480)
