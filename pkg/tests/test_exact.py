import pytest
import sympy
from hypothesis import given, settings, strategies as st

from sos3.exact import (
    Poly,
    Q,
    euclid_divmod,
    format_poly,
    is_perfect_square_poly,
    parse_poly,
    poly_gcd,
    poly_sqrt,
    poly_xgcd,
    rational_is_square,
    rational_sqrt,
    resultant,
    squarefree_decomposition,
    sturm_count_real_roots,
    sylvester_resultant,
)

rationals = st.tuples(st.integers(-30, 30), st.integers(1, 6)).map(
    lambda t: Q(*t))
polys = st.lists(rationals, max_size=6).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert a - a == Poly()


@given(polys, nonzero_polys)
def test_euclid_divmod(a, b):
    q, r = euclid_divmod(a, b)
    assert a == q * b + r
    assert r.degree < b.degree


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert euclid_divmod(a, g)[1].is_zero()
    assert euclid_divmod(b, g)[1].is_zero()
    assert g.lc() == 1


@given(nonzero_polys, nonzero_polys)
def test_xgcd_identity(a, b):
    g, s, t = poly_xgcd(a, b)
    assert s * a + t * b == g
    assert g == poly_gcd(a, b)


@given(nonzero_polys)
def test_squarefree_decomposition_reconstructs(a):
    dec = squarefree_decomposition(a)
    prod = Poly.const(dec.unit)
    for part, mult in dec.parts:
        assert part.lc() == 1
        assert poly_gcd(part, part.derivative()).degree == 0
        prod = prod * part ** mult
    for i, (p1, _) in enumerate(dec.parts):
        for p2, _ in dec.parts[i + 1:]:
            assert poly_gcd(p1, p2).degree == 0
    assert prod == a


@settings(deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_resultant_matches_sylvester(a, b):
    assert resultant(a, b) == sylvester_resultant(a, b)


@settings(deadline=None)
@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_resultant_multiplicative(a, b, c):
    assert resultant(a, b * c) == resultant(a, b) * resultant(a, c)


@given(nonzero_polys)
def test_square_roundtrip(p):
    sq = p * p
    assert is_perfect_square_poly(sq)
    root = poly_sqrt(sq)
    assert root * root == sq


def test_square_detects_nonsquares():
    x = Poly.x()
    assert not is_perfect_square_poly(x)
    assert not is_perfect_square_poly(2 * x * x)
    assert is_perfect_square_poly(2 * x * x, "over-C")
    assert not is_perfect_square_poly(x * (x - Poly.const(1)), "over-C")


@given(st.integers(-10**6, 10**6), st.integers(1, 10**4))
def test_rational_square_oracle(n, d):
    q = Q(n, d)
    if rational_is_square(q):
        r = rational_sqrt(q)
        assert r * r == q
    else:
        assert sympy.sqrt(sympy.Rational(n, d)).is_rational is not True


@settings(deadline=None, max_examples=40)
@given(nonzero_polys)
def test_sturm_against_sympy(p):
    if poly_gcd(p, p.derivative()).degree > 0 or p.is_constant():
        return
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * x ** i
               for i, c in enumerate(p.coeffs))
    assert sturm_count_real_roots(p) == len(sympy.real_roots(expr))


@given(polys)
def test_parse_format_roundtrip(p):
    assert parse_poly(format_poly(p)) == p


def test_parse_examples():
    p = parse_poly("x^2 + 14063/22*x + 196743825/1936")
    assert p.coeff(1) == Q(14063, 22)
    with pytest.raises(ValueError):
        parse_poly("x^2 + oops")
