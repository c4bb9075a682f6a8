import pytest

from cy5bps.rational import Rat, format_rational, is_integer, parse_rational, rational_pair


def test_lowest_terms_and_sign():
    x = Rat(-4, 6)
    assert (x.numerator, x.denominator) == (-2, 3)
    assert Rat(3, -9) == Rat(-1, 3)


def test_exact_addition_large_magnitudes():
    a = Rat(10**40 + 1, 10**40)
    b = Rat(-1, 10**40)
    assert a + b == 1
    assert Rat(1, 3) + Rat(1, 6) == Rat(1, 2)


@pytest.mark.parametrize(
    "text,expected",
    [("3", Rat(3)), ("-7", Rat(-7)), ("3/4", Rat(3, 4)), ("-6/8", Rat(-3, 4)), (" 5/10 ", Rat(1, 2))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "x", "1/2/3", "1.5", "3/0", "1/ 2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Rat(5)) == "5"
    assert format_rational(Rat(-3, 7)) == "-3/7"
    assert format_rational(Rat(6, 3)) == "2"


def test_round_trip_parse_format():
    for text in ["0", "-12", "22/7", "-9/4"]:
        assert format_rational(parse_rational(text)) == text


def test_pair_and_integrality():
    assert rational_pair(Rat(-3, 7)) == (-3, 7)
    assert is_integer(Rat(8, 2))
    assert not is_integer(Rat(1, 2))
