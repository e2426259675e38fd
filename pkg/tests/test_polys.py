from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mahler_lab.exact import RationalPoly, cyclotomic, to_fraction

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(small, max_size=6).map(RationalPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def P(*c):
    return RationalPoly(c)


def test_normalisation_drops_trailing_zeros():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).is_zero() and P().degree == -1


def test_to_fraction_rejects_floats_and_decimal_strings():
    assert to_fraction("3/4") == Fraction(3, 4)
    with pytest.raises(TypeError):
        to_fraction(0.5)
    with pytest.raises(ValueError):
        to_fraction("0.5")


def test_pretty_and_valuation():
    p = P(0, 1, -1, 0, 2)
    assert p.pretty() == "2*z^4 - z^2 + z"
    assert p.valuation() == 1


def test_compose_power_and_reversal():
    assert P(1, 1).compose_power(3) == P(1, 0, 0, 1)
    assert P(1, 2, 3).reversed() == P(3, 2, 1)
    assert P(1, 1).scale_variable(2) == P(1, 2)


def test_cyclotomic_values():
    assert cyclotomic(1) == P(-1, 1)
    assert cyclotomic(3) == P(1, 1, 1)
    assert cyclotomic(4) == P(1, 0, 1)
    assert cyclotomic(5).eval_at_one() == 5
    assert cyclotomic(8) == P(1, 0, 0, 0, 1)


@pytest.mark.parametrize("m", [1, 2, 6, 12, 15, 16])
def test_cyclotomic_product_is_zm_minus_one(m):
    prod = RationalPoly([1])
    for d in range(1, m + 1):
        if m % d == 0:
            prod = prod * cyclotomic(d)
    assert prod == RationalPoly.monomial(m) - 1


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()


@given(polys, nonzero_polys)
def test_division_identity(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(a, b):
    g = a.gcd(b)
    assert (a % g).is_zero() and (b % g).is_zero()
    assert g.lead == 1


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=5))
def test_squarefree_decomposition_reassembles(roots):
    p = RationalPoly.from_roots(roots)
    prod = RationalPoly([1])
    for f, mult in p.squarefree_decomposition():
        prod = prod * f**mult
    assert prod == p.monic()
    assert p.squarefree_part().degree == len(set(roots))


@given(polys, small)
def test_horner_matches_naive_evaluation(p, x):
    assert p(x) == sum(c * x**i for i, c in enumerate(p.coeffs))


@given(polys, st.integers(1, 4))
def test_eval_at_one_is_invariant_under_z_to_zk(p, k):
    assert p.compose_power(k).eval_at_one() == p.eval_at_one()
