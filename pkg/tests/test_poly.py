import random
from math import comb

import pytest
import sympy as sp
from oracles import blade_product, from_sym, symbols, to_sym

from umbral.clifford import Multivector
from umbral.poly import (
    CliffPoly,
    homogeneous_parts,
    mul_var,
    multi_indices,
    partial,
    poly_arith,
    random_poly,
)
from umbral.rational import rational
from umbral.textform import parse_poly


def P(text, n=2):
    return parse_poly(text, n)


def test_constructors():
    n = 3
    assert CliffPoly.zero(n).is_zero()
    assert CliffPoly.constant(n, 2, (1, 3)) == P("2 e[1,3]", n)
    assert CliffPoly.monomial(n, (1, 0, 2), rational(1, 2), (2,)) == P("1/2 x1 x3^2 e[2]", n)
    assert CliffPoly.variable(n, 2) == P("x2", n)
    mv = Multivector(n, {(): 1, (1,): -1})
    assert CliffPoly(n, {(1, 0, 0): mv}) == P("x1 - x1 e[1]", n)


def test_bad_multi_index():
    with pytest.raises(ValueError):
        CliffPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        CliffPoly(2, {(1, -1): 1})
    with pytest.raises(ValueError):
        CliffPoly.variable(2, 3)


def test_degree_and_parts():
    p = P("x1^3 + x1 x2 e[1] - 4")
    assert p.degree == 3
    assert CliffPoly.zero(2).degree == float("-inf")
    assert [m for m, _ in homogeneous_parts(p)] == [0, 2, 3]
    assert p.homogeneous_part(2) == P("x1 x2 e[1]")
    assert p.evaluate_at_zero() == Multivector.scalar(2, -4)
    assert p.grades() == {0, 1}
    assert p.grade_part(1) == P("x1 x2 e[1]")
    assert not p.is_scalar_valued()
    assert P("x1 - x2").is_scalar_valued()


def test_terms_view_is_ordered():
    p = P("x2 + x1^2 e[2] + x1 + 3 x1^2")
    assert list(p.terms) == [(2, 0), (1, 0), (0, 1)]
    assert p.terms[(2, 0)] == Multivector(2, {(): 3, (2,): 1})
    assert next(iter(p.items())) == (((2, 0), ()), 3)
    assert p.coefficient((2, 0), (2,)) == 1


def test_left_coefficient_product_order():
    # (e1 x1) (e2 x2) = e1 e2 x1 x2
    assert P("x1 e[1]") * P("x2 e[2]") == P("x1 x2 e[1,2]")
    assert P("x2 e[2]") * P("x1 e[1]") == P("-x1 x2 e[1,2]")
    e1 = Multivector.generator(2, 1)
    assert e1 * P("x1 e[2]") == P("x1 e[1,2]")
    assert P("x1 e[2]") * e1 == P("-x1 e[1,2]")


def test_left_mul_generator_matches_product():
    rng = random.Random(3)
    for _ in range(30):
        p = random_poly(rng, 3, 3)
        for j in (1, 2, 3):
            assert p.left_mul_generator(j) == Multivector.generator(3, j) * p


def test_product_against_sympy_oracle():
    rng = random.Random(4)
    for _ in range(20):
        p, q = random_poly(rng, 2, 3), random_poly(rng, 2, 3)
        sp_, sq = to_sym(p), to_sym(q)
        prod = {}
        for a, ea in sp_.items():
            for b, eb in sq.items():
                s, c = blade_product(a, b)
                prod[c] = prod.get(c, 0) + s * ea * eb
        assert p * q == from_sym(prod, 2)


def test_arith_dispatch_and_scalars():
    p, q = P("x1 + e[2]"), P("x2")
    assert poly_arith("add", p, q) == P("x1 + x2 + e[2]")
    assert poly_arith("sub", p, q) == P("x1 - x2 + e[2]")
    assert poly_arith("mul", p, q) == P("x1 x2 + x2 e[2]")
    assert poly_arith("scalar_mul", p, rational(1, 2)) == P("1/2 x1 + 1/2 e[2]")
    assert 2 * p == p + p
    assert p - p == CliffPoly.zero(2)
    assert 1 + q == P("x2 + 1")
    with pytest.raises(ValueError):
        poly_arith("div", p, q)
    with pytest.raises(ValueError):
        P("x1") + P("x1", 3)


def test_heisenberg_relation():
    rng = random.Random(5)
    for _ in range(50):
        p = random_poly(rng, 3, 5)
        for j in (1, 2, 3):
            assert partial(j, mul_var(j, p)) - mul_var(j, partial(j, p)) == p


def test_partial_against_sympy():
    rng = random.Random(6)
    xs = symbols(2)
    for _ in range(20):
        p = random_poly(rng, 2, 4)
        expected = {b: sp.diff(e, xs[1]) for b, e in to_sym(p).items()}
        assert partial(2, p) == from_sym(expected, 2)


@pytest.mark.parametrize("n,d", [(1, 4), (2, 3), (3, 4), (4, 2)])
def test_multi_indices(n, d):
    idx = list(multi_indices(n, d))
    assert len(idx) == comb(d + n - 1, n - 1)
    assert len(set(idx)) == len(idx)
    assert all(sum(a) == d and len(a) == n for a in idx)
    assert idx == sorted(idx, reverse=True)


def test_random_poly_contract():
    a = random_poly(11, 3, 4)
    b = random_poly(11, 3, 4)
    assert a == b
    rng = random.Random(1)
    for _ in range(200):
        p = random_poly(rng, 2, 3)
        assert len(p) <= 8
        assert p.degree <= 3
        for c in p._c.values():
            # sums of up to 8 draws stay small; each draw is k/1, k/2 or k/3
            assert (c * 6).denominator == 1
    assert random_poly(2, 2, 3, blades=False).is_scalar_valued()


def test_hash_and_eq():
    assert hash(P("x1 + x2")) == hash(P("x2 + x1"))
    assert P("2") == 2
    assert P("0") == 0
