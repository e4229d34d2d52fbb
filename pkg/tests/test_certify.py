import pytest

from rigidcheck.certify import (
    Certificate,
    VerifyConfig,
    certify_params,
    certify_tuple,
    hypothesis_check,
    min_hypothesis_M,
)
from rigidcheck.exact import DegreeTuple, parse_degrees


@pytest.mark.parametrize("k, M, expected", [(20, 480, True), (20, 479, False), (19, 10**6, False), (21, 512, True)])
def test_hypothesis_check(k, M, expected):
    ok, margin = hypothesis_check(k, M)
    assert ok is expected
    assert not margin.contains(0)


def test_min_hypothesis_M():
    assert min_hypothesis_M(20) == 480
    assert min_hypothesis_M(21) == 512
    assert min_hypothesis_M(1) == 1


def test_flagship_certificate_passes(flagship_certificate):
    assert flagship_certificate.hypothesis_ok
    assert flagship_certificate.overall == "pass"
    assert flagship_certificate.levels == tuple(range(21))
    failing = [check for check in flagship_certificate.checks if check.severity == "error" and not check.passed]
    assert failing == []


def test_flagship_values(flagship_certificate):
    cert = flagship_certificate
    assert cert.check("tail_product", 0).value == "9765625/7962624"
    assert cert.check("tail_product", 0).bound == "4/3"
    assert cert.check("gamma_threshold", 0).value == "10616832/9765625"
    gamma = cert.check("gamma_min", 0)
    assert (gamma.value, gamma.bound) == ("106491", "68900")
    assert cert.check("prop34").value == cert.check("prop34").bound == "106491"
    assert cert.check("prop36").value == "142506"
    assert cert.check("prop36").bound == "76520"
    assert cert.check("thm04").value == "68400"
    assert cert.check("thm02").value == "80582"
    assert cert.check("thm01").value == "68400"
    assert cert.check("prop22_min_value").value == "80582"
    assert cert.check("prop22_argmin").value == "20"
    assert cert.check("slope_identity").value == str(25**20)
    assert cert.check("printed_count_offset").value == "20"


def test_check_order_is_fixed(flagship_certificate):
    names = [check.name for check in flagship_certificate.checks]
    assert names[:5] == ["hypothesis_k", "hypothesis_M", "slope_identity", "printed_count_offset", "lemma13_slope_bound"]
    assert names[-3:] == ["prop22_min_value", "prop22_argmin", "thm02_ge_thm04"]
    with pytest.raises(KeyError):
        flagship_certificate.check("tail_product", 99)


def test_small_tuple_is_out_of_hypotheses():
    cert = certify_tuple(parse_degrees("2,3,3"))
    assert cert.overall == "out_of_hypotheses"
    tail = cert.check("tail_product", 0)
    assert tail.value == "9/4"
    assert tail.status == "fail"
    assert tail.severity == "info"
    assert cert.check("gamma_threshold", 0).value == "16/27"


def test_single_degree_still_evaluates():
    cert = certify_tuple(DegreeTuple((5,)))
    assert cert.overall == "out_of_hypotheses"
    assert (cert.k, cert.M) == (1, 4)
    assert cert.check("slope_identity").passed


def test_selected_levels_only():
    cert = certify_tuple(parse_degrees("25^20"), VerifyConfig(levels=(0, 3)))
    assert cert.levels == (0, 3)
    assert {check.level for check in cert.checks if check.name == "tail_product"} == {0, 3}


def test_star_shaped_params():
    cert = certify_params(20, 485)
    assert cert.degrees == DegreeTuple((25,) * 15 + (26,) * 5)
    assert cert.overall == "pass"
    assert cert.check("prop34").bound == cert.check("prop34").value


def test_certificate_round_trip(flagship_certificate):
    data = flagship_certificate.to_dict()
    assert data["overall"] == "pass"
    assert data["params"] == {"k": 20, "M": 480, "degrees": "25^20"}
    assert Certificate.from_dict(data) == flagship_certificate


def test_tampered_status_is_rejected(flagship_certificate):
    data = flagship_certificate.to_dict()
    data["overall"] = "fail"
    with pytest.raises(ValueError):
        Certificate.from_dict(data)


def test_certification_is_deterministic(flagship, flagship_certificate):
    assert certify_tuple(flagship).to_dict() == flagship_certificate.to_dict()


@pytest.mark.parametrize(
    "kwargs",
    [
        {"precision": 16},
        {"max_precision": 64},
        {"max_depth": 0},
        {"workers": 0},
        {"levels": (-1,)},
        {"levels": ()},
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        VerifyConfig(**kwargs)


def test_config_levels_are_normalised():
    config = VerifyConfig(levels=(3, 1, 1))
    assert config.levels == (1, 3)
    assert config.levels_for(2) == (1,)
    assert VerifyConfig().levels_for(2) == (0, 1, 2)


def test_flagship_plus_reduction_checks(flagship_certificate):
    prop32 = flagship_certificate.check("prop32")
    assert (prop32.value, prop32.bound) == ("97461", "68900")
    assert prop32.passed
    assert "24^20" in prop32.paper_anchor
    bridge = flagship_certificate.check("prop32_bridge")
    assert (bridge.value, bridge.bound) == ("68900", "68900")
    assert bridge.passed
    assert "M⁺ = 460" in bridge.paper_anchor


def test_plus_reduction_checks_on_random_tuples(random_tuples):
    config = VerifyConfig(levels=(0, 1))
    for d in random_tuples(12, k_lo=20, k_hi=20, d_lo=25, d_hi=40):
        cert = certify_tuple(d, config)
        assert cert.hypothesis_ok, d.label()
        assert cert.check("prop32").passed, d.label()
        assert cert.check("prop32").severity == "error"
        assert cert.check("prop32_bridge").passed, d.label()


def test_plus_reduction_checks_are_informational_out_of_hypotheses():
    cert = certify_tuple(parse_degrees("2,3,3"))
    assert cert.check("prop32").severity == "info"
    assert cert.check("prop32_bridge").severity == "info"
