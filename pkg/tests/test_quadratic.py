from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from mahler_lab.errors import MixedFields, NotQuadratic
from mahler_lab.exact import QuadraticNumber as Q
from mahler_lab.exact import RationalPoly, quadratic_from_poly, squarefree_split

PHI = Q(Fraction(1, 2), Fraction(1, 2), 5)
rat = st.fractions(min_value=-10, max_value=10, max_denominator=8)
field5 = st.builds(lambda a, b: Q(a, b, 5), rat, rat)


def test_golden_ratio_identities():
    assert PHI * PHI == PHI + 1
    assert PHI**2 == Q(Fraction(3, 2), Fraction(1, 2), 5)
    assert PHI.norm() == -1
    assert PHI * PHI.conjugate() == -1
    assert PHI.minimal_polynomial() == RationalPoly([-1, -1, 1])


def test_squarefree_split():
    assert squarefree_split(20) == (2, 5)
    assert squarefree_split(49) == (7, 1)
    assert squarefree_split(2 * 3**2 * 101**2) == (303, 2)


def test_non_squarefree_radicand_is_normalised():
    assert Q(0, 1, 20) == Q(0, 2, 5)
    assert Q(1, 1, 9) == 4


def test_mixed_fields_raise():
    with pytest.raises(MixedFields):
        Q(0, 1, 2) + Q(0, 1, 3)


def test_quadratic_from_poly():
    assert quadratic_from_poly(RationalPoly([-1, -1, 1])) == PHI
    assert quadratic_from_poly(RationalPoly([1, -3, 1])) == PHI**2
    assert quadratic_from_poly(RationalPoly([-6, 2])) == 3
    with pytest.raises(NotQuadratic):
        quadratic_from_poly(RationalPoly([1, 0, 1]))
    with pytest.raises(NotQuadratic):
        quadratic_from_poly(RationalPoly([1, 0, 0, 1]))


def test_nth_root():
    assert (PHI**2).nth_root(2) == PHI
    assert (PHI**6).nth_root(3) == PHI**2
    assert (PHI + 1).nth_root(2) == PHI
    assert (PHI + 2).nth_root(2) is None
    assert Q(8).nth_root(3) == 2
    assert Q(2).nth_root(2) is None
    assert (-PHI).nth_root(2) is None


@given(field5, field5)
def test_field_operations(x, y):
    assume(y != 0)
    assert (x * y) / y == x
    assert (x + y) - y == x
    assert (x * y).norm() == x.norm() * y.norm()


@given(field5)
def test_sign_matches_float(x):
    f = float(x)
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)


@given(field5, st.integers(1, 5))
def test_nth_root_inverts_power(x, e):
    assume(x.sign() > 0)
    assert (x**e).nth_root(e) == x


@given(rat)
def test_rationals_hash_like_fractions(a):
    assert hash(Q(a)) == hash(a)
    assert Q(a) == a
