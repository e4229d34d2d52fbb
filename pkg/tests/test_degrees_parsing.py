import pytest

from rigidcheck.exact import DegreeSyntaxError, DegreeTuple, check_level, parse_degrees, total_degree


def test_power_notation_expands(flagship):
    assert flagship.degrees == (25,) * 20
    assert flagship.k == 20
    assert flagship.M == 480
    assert flagship.is_equal_degree


def test_mixed_notation():
    d = parse_degrees("2^3,5")
    assert d.degrees == (2, 2, 2, 5)
    assert (d.k, d.M) == (4, 7)


def test_comma_list_is_sorted():
    assert parse_degrees(" 3, 2 ,3").degrees == (2, 3, 3)


@pytest.mark.parametrize("text", ["1,3", "", "   ", "2,,3", "2^0", "a", "2^", "-2"])
def test_malformed_or_small_degrees_rejected(text):
    with pytest.raises(DegreeSyntaxError):
        parse_degrees(text)


def test_syntax_error_is_a_value_error():
    with pytest.raises(ValueError):
        parse_degrees("1,2")


def test_degree_tuple_guards():
    with pytest.raises(ValueError):
        DegreeTuple((3, 2))
    with pytest.raises(ValueError):
        DegreeTuple(())
    with pytest.raises(ValueError):
        DegreeTuple((1, 2))
    with pytest.raises(ValueError):
        DegreeTuple.equal(3, 0)


@pytest.mark.parametrize(
    "degrees, label",
    [((2, 2, 2, 5), "2^3,5"), ((25,) * 20, "25^20"), ((2, 3, 3), "2,3^2"), ((7,), "7")],
)
def test_label_uses_power_notation(degrees, label):
    d = DegreeTuple(degrees)
    assert d.label() == label
    assert parse_degrees(label) == d


def test_total_degree_is_exact(flagship):
    assert total_degree(flagship) == 25**20
    assert total_degree(parse_degrees("2,3,3")) == 18


def test_check_level_bounds():
    d = parse_degrees("2,3,3")
    assert check_level(d, 3) == 3
    with pytest.raises(ValueError):
        check_level(d, 4)
    with pytest.raises(ValueError):
        check_level(d, -1)
