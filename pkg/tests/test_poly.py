import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepform.arith import PrimeField
from sepform.errors import InexactDivisionError, NotInvertibleError
from sepform.poly import (NEG_INF, Poly, exact_div, gcd_monic,
                          invert_mod_univar, reduce_bivar_mod_univar,
                          reduce_mod_prime, squarefree_degree, squarefree_part)

X = Poly.var("X")
Y = Poly.var("Y")
ONE = Poly.const(1)

F101 = PrimeField(101)


def _rand_poly(rng, max_deg=3, max_coeff=9, vars=("X", "Y")):
    terms = {}
    for _ in range(rng.randint(1, 6)):
        e = tuple(rng.randint(0, max_deg) for _ in vars)
        terms[e] = rng.randint(-max_coeff, max_coeff)
    return Poly.from_terms(terms.items(), vars)


small_ints = st.integers(min_value=-8, max_value=8)


@st.composite
def polys(draw):
    n_terms = draw(st.integers(min_value=1, max_value=5))
    terms = {}
    for _ in range(n_terms):
        e = (draw(st.integers(min_value=0, max_value=3)),
             draw(st.integers(min_value=0, max_value=3)))
        terms[e] = draw(small_ints)
    return Poly.from_terms(terms.items(), ("X", "Y"))


@given(polys(), polys(), polys())
@settings(max_examples=150)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a - a == Poly.zero()


@given(polys(), polys())
@settings(max_examples=100)
def test_evaluation_is_a_homomorphism(a, b):
    x0, y0 = 3, -2
    va = a.evaluate_all({"X": x0, "Y": y0})
    vb = b.evaluate_all({"X": x0, "Y": y0})
    assert (a * b).evaluate_all({"X": x0, "Y": y0}) == va * vb
    assert (a + b).evaluate_all({"X": x0, "Y": y0}) == va + vb


@given(polys(), polys())
@settings(max_examples=100)
def test_reduction_mod_prime_is_a_homomorphism(a, b):
    ra, rb = reduce_mod_prime(a, F101), reduce_mod_prime(b, F101)
    assert reduce_mod_prime(a * b, F101) == ra * rb
    assert reduce_mod_prime(a + b, F101) == ra + rb


def test_degree_bookkeeping():
    p = X * X * Y + Y - ONE
    assert p.degree("X") == 2
    assert p.degree("Y") == 1
    assert p.total_degree() == 3
    assert Poly.zero().degree("X") is NEG_INF
    assert Poly.const(5).total_degree() == 0


def test_bitsize_is_max_coefficient_bitsize():
    assert (X.scale(1024) * Y).bitsize() == 11
    assert (X + Y).bitsize() == 1


@given(polys(), polys())
@settings(max_examples=100)
def test_exact_div_inverts_multiplication(a, b):
    if a.is_zero() or b.is_zero():
        return
    assert exact_div(a * b, b) == a


def test_exact_div_rejects_inexact():
    with pytest.raises(InexactDivisionError):
        exact_div(X * X + ONE, X)


def test_derivative_product_rule():
    rng = random.Random(5)
    for _ in range(30):
        a, b = _rand_poly(rng), _rand_poly(rng)
        lhs = (a * b).derivative("Y")
        rhs = a.derivative("Y") * b + a * b.derivative("Y")
        assert lhs == rhs


def test_substitute_composes():
    p = X * X + Y
    assert p.substitute("X", Y + ONE) == (Y + ONE) * (Y + ONE) + Y


# -- univariate gcd / squarefree machinery --------------------------------


def _upoly(coeffs, field=None):
    # coeffs low-to-high in X
    p = Poly.zero(("X",), field)
    for k, c in enumerate(coeffs):
        p = p + Poly.var("X", field=field).__pow__(k).scale(c)
    return p


def test_gcd_known_factorization_over_q():
    f = (X - ONE) * (X + ONE)
    g = (X - ONE) * (X + Poly.const(2))
    assert gcd_monic(f, g) == X - ONE


def test_gcd_known_factorization_over_field():
    to = lambda p: reduce_mod_prime(p, F101)
    f = to((X - ONE) * (X + ONE))
    g = to((X - ONE) * (X + Poly.const(2)))
    assert gcd_monic(f, g) == to(X - ONE)


@given(st.lists(small_ints, min_size=1, max_size=4),
       st.lists(small_ints, min_size=1, max_size=4),
       st.lists(small_ints, min_size=1, max_size=3))
@settings(max_examples=100)
def test_gcd_divides_both_and_absorbs_common_factor(fa, fb, fc):
    a, b, c = _upoly(fa), _upoly(fb), _upoly(fc)
    if a.is_zero() or b.is_zero() or c.is_zero():
        return
    g = gcd_monic(a * c, b * c)
    exact_div(a * c, g)  # raises InexactDivisionError on failure
    exact_div(b * c, g)
    if not c.is_constant():
        assert gcd_monic(g, _monic(c)) == _monic(c)


def _monic(p):
    lead = p.coeffs[max(p.coeffs)]
    return p.scale(Fraction(1, Fraction(lead)))


def test_squarefree_part_strips_multiplicity():
    f = (X - ONE) * (X - ONE) * (X + Poly.const(3))
    sq = squarefree_part(f)
    assert sq == (X - ONE) * (X + Poly.const(3))
    assert squarefree_degree(f) == 2


def test_squarefree_part_over_field():
    to = lambda p: reduce_mod_prime(p, F101)
    f = to((X - ONE) * (X - ONE) * X)
    assert squarefree_part(f) == to((X - ONE) * X)


def test_invert_mod_univar():
    A = X * X * X - Poly.const(2)  # irreducible over Q
    c = X + ONE
    inv = invert_mod_univar(c, A)
    prod = reduce_bivar_mod_univar(inv * c, A, var_y="Y")
    assert prod == ONE


def test_invert_mod_univar_rejects_common_factor():
    A = (X - ONE) * (X + ONE)
    with pytest.raises(NotInvertibleError):
        invert_mod_univar(X - ONE, A)


def test_reduce_bivar_mod_univar():
    A = X * X - Poly.const(2)
    B = X * X * Y + X  # X^2 == 2 mod A
    assert reduce_bivar_mod_univar(B, A, var_y="Y") == Y.scale(2) + X
