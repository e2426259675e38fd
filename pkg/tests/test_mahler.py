import dataclasses
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mahler_lab import catalog
from mahler_lab.errors import (
    AmbiguousMatch,
    CoefficientVanishesAtXi,
    InconsistentSeed,
    InvalidInput,
    NoConvergence,
    NoMatchingRoot,
    PoleOnPath,
    UnderdeterminedSeries,
)
from mahler_lab.exact import QuadraticNumber, RationalPoly
from mahler_lab.mahler import (
    MahlerEquation,
    characteristic_polynomial,
    epsilon_bracket,
    evaluate,
    evaluate_with_error,
    oscillation_profile,
    radial_fit,
    resolve_eigenvalue,
    select_eigenvalue,
    series_sum,
    solve_coefficients,
)

PHI = QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 5)
LOG2_3 = math.log2(3)


def P(*c):
    return RationalPoly(c)


# -- equations ----------------------------------------------------------------


def test_json_round_trip(stern):
    eq = stern.mahler_equation
    assert MahlerEquation.from_json(eq.to_json()) == eq
    text = '{ "k": 2, "coeffs": [["0","1"], ["-1","-1","-1"]], "seed": ["0","1"] }'
    assert MahlerEquation.from_json(text) == eq


@pytest.mark.parametrize("bad", [
    '{"k": 1, "coeffs": [["1"], ["1"]]}',
    '{"k": 2, "coeffs": [["1"]]}',
    '{"k": 2, "coeffs": [[], ["1"]]}',
    '{"k": 2, "coeffs": [["1"], ["0.5"]]}',
    '{"k": 2.0, "coeffs": [["1"], ["1"]]}',
    '{"coeffs": [["1"], ["1"]]}',
])
def test_invalid_equations(bad):
    with pytest.raises(InvalidInput):
        MahlerEquation.from_json(bad)


# -- characteristic polynomial ------------------------------------------------


def test_charpoly_catalog_examples(stern, baum_sweet):
    s = characteristic_polynomial(stern.mahler_equation)
    assert s.p == P(-3, 1) and s.eigenvalue == 3 and s.eigenvalue_status == "exists"
    b = characteristic_polynomial(baum_sweet.mahler_equation)
    assert b.p == P(-1, -1, 1) and b.eigenvalue_status == "pending" and b.distinct_roots
    t = characteristic_polynomial(catalog.get("thue-morse").mahler_equation)
    assert t.p == P(0, 1) and t.eigenvalue_status == "degenerate-zero" and t.degenerate_zero


@pytest.mark.parametrize(
    "entry", [e for e in catalog.standard_entries() if e.mahler_equation is not None], ids=lambda e: e.name,
)
def test_charpoly_is_substitution_exact(entry):
    eq = entry.mahler_equation
    p = characteristic_polynomial(eq).p
    for x in (Fraction(-2), Fraction(1, 3), Fraction(5)):
        expected = sum(a(Fraction(1)) * x ** (eq.d - i) for i, a in enumerate(eq.coeffs))
        assert p(x) == expected


def test_zero_root_with_other_roots_is_flagged():
    eq = MahlerEquation(2, (P(1), P(-1, -1), P(-1, 1)), (1,))
    rep = characteristic_polynomial(eq)
    assert rep.degenerate_zero and rep.eigenvalue_status == "pending"
    assert [float(r) for r in rep.roots.real] == [0.0, 2.0]


# -- coefficients ---------------------------------------------------------------


def test_solve_coefficients_examples(stern, baum_sweet, geometric):
    assert solve_coefficients(stern.mahler_equation, 8) == [0, 1, 1, 2, 1, 3, 2, 3, 1]
    assert solve_coefficients(geometric.mahler_equation, 50) == [1] * 51
    assert solve_coefficients(baum_sweet.mahler_equation, 7) == [1, 1, 0, 1, 1, 0, 0, 1]


def test_underdetermined_and_inconsistent():
    stern_eq = P(0, 1), P(-1, -1, -1)
    with pytest.raises(UnderdeterminedSeries):
        solve_coefficients(MahlerEquation(2, stern_eq), 5)
    with pytest.raises(UnderdeterminedSeries):
        solve_coefficients(MahlerEquation(2, stern_eq, (0,)), 5)
    with pytest.raises(InconsistentSeed):
        solve_coefficients(MahlerEquation(2, stern_eq, (1, 1)), 5)
    with pytest.raises(InconsistentSeed):
        solve_coefficients(MahlerEquation(2, (P(1), P(-1, -1)), (1, 2)), 5)


def test_rational_coefficients():
    # F(z) = (1 + z/2) F(z^2): product of (1 + z^(2^n)/2)
    eq = MahlerEquation(2, (P(1), P(-1, Fraction(-1, 2))), (1,))
    assert solve_coefficients(eq, 3) == [1, Fraction(1, 2), Fraction(1, 2), Fraction(1, 4)]


# -- evaluation -----------------------------------------------------------------


def test_geometric_value(geometric):
    assert abs(evaluate(geometric.mahler_equation, Fraction(1, 2), 40) - 2) < mpmath.mpf(10) ** -40


def test_stern_half_against_direct_sum(stern):
    eq = stern.mahler_equation
    direct = series_sum(eq, Fraction(1, 2), 200, 50)
    assert abs(evaluate(eq, Fraction(1, 2), 30) - direct) < mpmath.mpf(10) ** -20


@pytest.mark.slow
def test_stern_minus_point_nine_against_direct_sum(stern):
    eq = stern.mahler_equation
    z = Fraction(-9, 10)
    direct = series_sum(eq, z, 10**4, 40)
    assert abs(evaluate(eq, z, 30) - direct) < mpmath.mpf(10) ** -10


@pytest.mark.slow
def test_pullback_against_long_direct_sum(stern):
    eq = stern.mahler_equation
    with mpmath.workdps(60):
        z = mpmath.mpf(0.5) ** (mpmath.mpf(2) ** -10)
        direct = series_sum(eq, z, 2**18, 50)
        assert abs(evaluate(eq, z, 40) - direct) < mpmath.mpf(10) ** -30
        assert abs(direct - mpmath.mpf("76550.9436850994398")) < 1e-12


def test_error_bound_is_reported(stern):
    ev = evaluate_with_error(stern.mahler_equation, Fraction(9, 10), 30)
    assert ev.error_bound <= mpmath.mpf(10) ** -30


def test_pole_on_path_is_reported():
    # F = 1/(1 - z) solves this; a_0 vanishes at 3/4
    eq = MahlerEquation(2, (P(3, -4), P(-3, 1, 4)), (1,))
    assert solve_coefficients(eq, 5) == [1] * 6
    with pytest.raises(PoleOnPath) as info:
        evaluate(eq, Fraction(3, 4), 20)
    assert abs(info.value.point - mpmath.mpf(0.75)) < 1e-15


def test_outside_disc_rejected(stern):
    with pytest.raises(ValueError):
        evaluate(stern.mahler_equation, 1, 20)


@given(
    st.floats(0.05, 0.95),
    st.floats(0, 2 * math.pi),
    st.sampled_from(["stern", "baum-sweet", "dilcher-stolarsky", "cyclotomic:5"]),
)
def test_functional_equation_holds_pointwise(r, theta, name):
    eq = catalog.get(name).mahler_equation
    z = mpmath.mpc(r * math.cos(theta), r * math.sin(theta))
    with mpmath.workdps(40):
        lhs = sum(
            a.eval_mp(z) * evaluate(eq, z ** (eq.k**i), 30)
            for i, a in enumerate(eq.coeffs)
            if not a.is_zero()
        )
        scale = max(abs(evaluate(eq, z, 30)), 1)
        assert abs(lhs) < mpmath.mpf(10) ** -25 * scale * 10


# -- radial asymptotics -----------------------------------------------------------


def test_geometric_exponent_is_one(geometric):
    fit = radial_fit(geometric.mahler_equation)
    assert abs(fit.gamma - 1) < 1e-6
    assert abs(fit.lambda_estimate - 2) < 1e-6


def test_stern_and_baum_sweet_growth(stern, baum_sweet):
    s = radial_fit(stern.mahler_equation, z0=Fraction(1, 2), depth=40, precision=60)
    assert abs(s.lambda_estimate - 3) <= 1e-2
    assert s.residual < 1e-6
    b = radial_fit(baum_sweet.mahler_equation)
    assert abs(b.lambda_estimate - 1.6180339887) <= 1e-2


def test_samples_follow_kth_roots(stern):
    fit = radial_fit(stern.mahler_equation, depth=12)
    zs = [s.z for s in fit.samples]
    assert all(a < b for a, b in zip(zs, zs[1:]))
    with mpmath.workdps(60):
        assert all(abs(b**2 - a) < mpmath.mpf(10) ** -50 for a, b in zip(zs, zs[1:]))


@pytest.mark.parametrize("n,index", [(1, 1), (2, 1), (2, 3)])
def test_root_of_unity_integrality(stern, n, index):
    fit = radial_fit(stern.mahler_equation, n, index, reference_exponent=LOG2_3)
    assert fit.integrality_distance < 0.05
    assert fit.m_xi == 0


def test_coefficient_vanishing_at_xi(geometric):
    with pytest.raises(CoefficientVanishesAtXi):
        radial_fit(geometric.mahler_equation, 1, 1)


def test_xi_must_be_primitive(stern):
    with pytest.raises(ValueError):
        radial_fit(stern.mahler_equation, 2, 2)


def test_no_convergence_with_impossible_tolerance(stern):
    with pytest.raises(NoConvergence):
        radial_fit(stern.mahler_equation, tolerance=1e-30)


def test_depth_precondition(stern):
    with pytest.raises(ValueError):
        radial_fit(stern.mahler_equation, depth=7)


# -- eigenvalue selection -------------------------------------------------------


def test_selection_examples(stern, baum_sweet, dilcher_stolarsky):
    rep, _ = resolve_eigenvalue(stern.mahler_equation)
    assert rep.eigenvalue == 3
    rep, fit = resolve_eigenvalue(baum_sweet.mahler_equation)
    assert rep.eigenvalue == PHI and fit is not None
    rep, _ = resolve_eigenvalue(dilcher_stolarsky.mahler_equation)
    assert rep.eigenvalue == PHI**2


def test_base_two_dilcher_stolarsky_is_ambiguous_but_agrees(dilcher_stolarsky):
    k2 = catalog.get("dilcher-stolarsky-k2")
    report = characteristic_polynomial(k2.mahler_equation)
    assert report.p == P(1, 0, -3, 0, 1)
    with pytest.raises(NoConvergence):
        radial_fit(k2.mahler_equation)
    fit2 = radial_fit(k2.mahler_equation, stride=2)
    fit4 = radial_fit(dilcher_stolarsky.mahler_equation)
    assert abs(fit2.gamma - fit4.gamma) < 1e-9
    with pytest.raises(AmbiguousMatch) as info:
        select_eigenvalue(report, fit2)
    assert info.value.measured == pytest.approx(1.618033988749895)
    assert sorted(info.value.root_moduli)[-1] == pytest.approx(1.618033988749895)


def test_no_matching_root(baum_sweet):
    report = characteristic_polynomial(baum_sweet.mahler_equation)
    fit = radial_fit(baum_sweet.mahler_equation)
    fake = dataclasses.replace(fit, lambda_estimate=10.0)
    with pytest.raises(NoMatchingRoot) as info:
        select_eigenvalue(report, fake)
    assert info.value.measured == 10.0


# -- oscillation and brackets -----------------------------------------------------


def test_geometric_oscillation_is_flat(geometric):
    prof = oscillation_profile(geometric.mahler_equation, exponent=1.0, depth=20)
    assert all(abs(c - 1) < 1e-12 for c in prof.values)


def test_stern_oscillation_constant(stern):
    half = oscillation_profile(stern.mahler_equation, Fraction(1, 2))
    third = oscillation_profile(stern.mahler_equation, Fraction(1, 3))
    assert half.tail_spread < 1e-4 and third.tail_spread < 1e-4
    # frozen from this pipeline; the value it rests on is checked against a
    # direct sum in test_pullback_against_long_direct_sum
    assert half.limit == pytest.approx(0.72519090451, abs=1e-9)
    assert third.limit == pytest.approx(0.72518581418, abs=1e-9)
    assert 0 < third.limit < half.limit
    assert half.limit - third.limit > 100 * (half.tail_spread + third.tail_spread)


@pytest.mark.parametrize("name,exponent", [("stern", LOG2_3), ("baum-sweet", math.log2((1 + 5**0.5) / 2))])
@pytest.mark.parametrize("eps", [0.1, 0.05])
def test_epsilon_bracket(name, exponent, eps):
    checks = epsilon_bracket(catalog.get(name).mahler_equation, exponent, eps)
    assert len(checks) == 31
    assert all(c.holds for c in checks)


def test_literal_bracket_orientation_is_empty(stern):
    # with the exponents the other way round the lower bound exceeds the upper
    for c in epsilon_bracket(stern.mahler_equation, LOG2_3, 0.05):
        literal_lower = c.one_minus_z ** -(LOG2_3 + 0.05)
        literal_upper = c.one_minus_z ** -(LOG2_3 - 0.05)
        assert literal_lower > literal_upper
        assert not literal_lower <= c.value <= literal_upper
