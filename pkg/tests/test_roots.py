from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mahler_lab.exact import (
    QuadraticNumber,
    RationalPoly,
    exact_real_root,
    isolate_real_roots,
    roots_inside_radius,
    schur_stable,
)

PHI = QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 5)


def test_golden_polynomial():
    iso = isolate_real_roots(RationalPoly([-1, -1, 1]))
    assert len(iso) == 2 and iso.complex_count == 0
    assert exact_real_root(iso[1]) == PHI
    assert exact_real_root(iso[0]) == PHI.conjugate()


def test_multiplicities_and_zero():
    iso = isolate_real_roots(RationalPoly([0, 0, 1]))
    assert len(iso) == 1 and iso[0].multiplicity == 2 and iso[0].exact
    iso = isolate_real_roots(RationalPoly.from_roots([2, 2, 2, -1]))
    assert [(float(r), r.multiplicity) for r in iso] == [(-1.0, 1), (2.0, 3)]


def test_complex_roots_are_counted_and_bounded():
    iso = isolate_real_roots(RationalPoly([1, 0, 1]) * RationalPoly([-2, 1]))
    assert len(iso) == 1 and iso.complex_count == 2
    lo, hi = iso.complex_modulus_bounds
    assert lo <= 1 <= hi


def test_isolation_width():
    iso = isolate_real_roots(RationalPoly([-2, 0, 1]), precision=30)
    r = iso[1]
    assert r.width <= Fraction(1, 10**30)
    assert r.lo**2 < 2 < r.hi**2


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=6).filter(lambda c: c[-1] != 0))
def test_real_root_count_matches_numeric_oracle(coeffs):
    p = RationalPoly(coeffs)
    iso = isolate_real_roots(p)
    with mpmath.workdps(50):
        num = mpmath.polyroots([mpmath.mpf(c) for c in reversed(coeffs)], maxsteps=200, extraprec=200)
    real = sorted(float(z.real) for z in num if abs(mpmath.im(z)) < 1e-20)
    mine = sorted(float(r) for r in iso for _ in range(r.multiplicity))
    assert len(real) == len(mine)
    assert all(abs(a - b) < 1e-6 for a, b in zip(real, mine))
    assert sum(r.multiplicity for r in iso) + iso.complex_count == p.degree


def test_schur_stability():
    assert schur_stable(RationalPoly([Fraction(1, 4), 1]))
    assert not schur_stable(RationalPoly([2, 1]))
    assert schur_stable(RationalPoly([Fraction(1, 6), Fraction(-5, 6), 1]))  # roots 1/2, 1/3
    assert not schur_stable(RationalPoly([1, 0, 1]))  # roots on the circle
    assert roots_inside_radius(RationalPoly([-3, 0, 1]), Fraction(2))
    assert not roots_inside_radius(RationalPoly([-3, 0, 1]), Fraction(17, 10))


def test_exact_root_returns_none_for_cubic_irrationals():
    iso = isolate_real_roots(RationalPoly([-2, 0, 0, 1]))
    assert exact_real_root(iso[0]) is None
