import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbral.poly import CliffPoly, random_poly
from umbral.textform import PolyParseError, parse_poly, print_poly


@pytest.mark.parametrize("text,n", [
    ("3/2 x1^2 x2 e[1,3]", 3),
    ("x1^3 - 3 x1^2 + 2 x1", 1),
    ("-1/2 e[1]", 2),
    ("1/2 x1 - 1/2 x2 e[1,2]", 2),
    ("x1 e[1] + x2 e[2]", 2),
    ("0", 2),
])
def test_canonical_roundtrip(text, n):
    assert print_poly(parse_poly(text, n)) == text


@pytest.mark.parametrize("text,expected", [
    ("x2 + x1", "x1 + x2"),
    ("x1 + -x1", "0"),
    ("x1 - -x1", "2 x1"),
    ("2*x1*x2", "2 x1 x2"),
    ("e[2] e[1]", "-e[1,2]"),
    ("e[1]*e[1]", "-1"),
    ("x1 x1", "x1^2"),
    ("  3 / 4  x2 ", "3/4 x2"),
    ("1 + e[1] + e[2] + e[1,2]", "1 + e[1] + e[2] + e[1,2]"),
    ("e[1,2] + x1", "x1 + e[1,2]"),
    ("-x1", "-x1"),
    ("1 e[1] - 1", "-1 + e[1]"),
])
def test_normalisation(text, expected):
    assert print_poly(parse_poly(text, 2)) == expected


@pytest.mark.parametrize("text,pos", [
    ("e[2,1]", 5),
    ("x3", 2),
    ("x1 +", 5),
    ("x1 +* x2", 5),
    ("x0", 2),
    ("1/0", 3),
    ("x1^0", 4),
    ("e[]", 3),
    ("x1 $ x2", 4),
    ("", 1),
    ("x1 x2)", 6),
    ("e[1", 4),
])
def test_errors_carry_position(text, pos):
    with pytest.raises(PolyParseError) as info:
        parse_poly(text, 2)
    assert info.value.position == pos
    assert f"position {pos}" in str(info.value)


def test_parse_requires_dimension():
    with pytest.raises(ValueError):
        parse_poly("x1", 0)


def test_random_roundtrip():
    rng = random.Random(9)
    for n in (1, 2, 3, 4):
        for _ in range(100):
            p = random_poly(rng, n, 5)
            assert parse_poly(print_poly(p), n) == p


@settings(max_examples=200)
@given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=1, max_value=4))
def test_print_is_a_fixed_point(seed, n):
    p = random_poly(seed, n, 4)
    text = print_poly(p)
    assert print_poly(parse_poly(text, n)) == text
    assert str(p) == text


def test_zero_poly_prints_zero():
    assert print_poly(CliffPoly.zero(3)) == "0"
