"""Mahler functional equations.

A k-Mahler equation ``a_0(z)F(z) + a_1(z)F(z^k) + ... + a_d(z)F(z^(k^d)) = 0``
is stored with exact rational polynomial coefficients. This module computes
its characteristic polynomial, solves for the power-series coefficients,
evaluates F inside the unit disc to a guaranteed absolute accuracy, and
measures the radial growth of F(xi*z) as z -> 1^- for xi = 1 and for roots of
unity of order k^n.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

import mpmath

from .errors import (
    AmbiguousMatch,
    CoefficientVanishesAtXi,
    InconsistentSeed,
    InvalidInput,
    NoConvergence,
    NoMatchingRoot,
    PoleOnPath,
    PrecisionLoss,
    UnderdeterminedSeries,
)
from .exact import (
    QuadraticNumber,
    RationalPoly,
    RealRoot,
    RootIsolation,
    cyclotomic,
    exact_real_root,
    isolate_real_roots,
    to_fraction,
)

DEFAULT_PRECISION = 60
DEFAULT_DEPTH = 40
DEFAULT_Z0 = Fraction(1, 2)
ROOT_MATCH_TOLERANCE = 1e-2
INTEGRALITY_TOLERANCE = 0.05
CONVERGENCE_TOLERANCE = 1e-3
PULLBACK_RADIUS = 0.5
GROWTH_FIT_TERMS = 512


@dataclass(frozen=True)
class MahlerEquation:
    k: int
    coeffs: tuple[RationalPoly, ...]
    initial_coeffs: Optional[tuple[Fraction, ...]] = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        coeffs = tuple(c if isinstance(c, RationalPoly) else RationalPoly(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if self.initial_coeffs is not None:
            object.__setattr__(
                self, "initial_coeffs", tuple(to_fraction(c) for c in self.initial_coeffs)
            )
        if int(self.k) != self.k or self.k < 2:
            raise InvalidInput(f"k must be an integer >= 2, got {self.k}")
        if len(coeffs) < 2:
            raise InvalidInput("a Mahler equation needs at least a_0 and a_1")
        if coeffs[0].is_zero() or coeffs[-1].is_zero():
            raise InvalidInput("a_0 and a_d must be nonzero polynomials")

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    def pretty(self, fname: str = "F") -> str:
        parts = []
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            arg = "z" if i == 0 else f"z^{self.k ** i}"
            parts.append(f"({a.pretty()})*{fname}({arg})")
        return " + ".join(parts) + " = 0"

    def to_json(self) -> dict:
        out = {"k": self.k, "coeffs": [a.to_json() for a in self.coeffs]}
        if self.initial_coeffs is not None:
            out["seed"] = [str(c) for c in self.initial_coeffs]
        return out

    @classmethod
    def from_json(cls, data: Union[str, dict], name: str = "") -> "MahlerEquation":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            k = data["k"]
            if not isinstance(k, int):
                raise InvalidInput("k must be an integer")
            coeffs = tuple(RationalPoly(to_fraction(c) for c in row) for row in data["coeffs"])
            seed = data.get("seed")
            seed = None if seed is None else tuple(to_fraction(c) for c in seed)
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"bad Mahler equation JSON: {exc}") from exc
        return cls(k, coeffs, seed, name=name)


# ---------------------------------------------------------------------------
# characteristic polynomial and eigenvalue
# ---------------------------------------------------------------------------

Eigenvalue = Union[QuadraticNumber, RealRoot]


@dataclass(frozen=True)
class CharPolyReport:
    k: int
    d: int
    p: RationalPoly
    distinct_roots: bool
    roots: Optional[RootIsolation]
    eigenvalue: Optional[Eigenvalue]
    eigenvalue_status: str  # exists | degenerate-zero | ambiguous | pending
    degenerate_zero: bool = False
    notes: tuple[str, ...] = ()

    def root_moduli(self) -> list[float]:
        if self.roots is None:
            return []
        return [abs(float(r)) for r in self.roots]

    def eigenvalue_float(self) -> Optional[float]:
        return None if self.eigenvalue is None else float(self.eigenvalue)

    def to_json(self) -> dict:
        ev = self.eigenvalue
        if isinstance(ev, QuadraticNumber):
            ev_json = ev.to_json()
        elif isinstance(ev, RealRoot):
            ev_json = ev.to_json()
        else:
            ev_json = None
        return {
            "charpoly": self.p.to_json(),
            "charpoly_pretty": self.p.pretty("x"),
            "distinct_roots": self.distinct_roots,
            "roots": None if self.roots is None else self.roots.to_json(),
            "eigenvalue": ev_json,
            "eigenvalue_status": self.eigenvalue_status,
            "degenerate_zero": self.degenerate_zero,
            "notes": list(self.notes),
        }


def _exact_or_interval(root: RealRoot) -> Eigenvalue:
    q = exact_real_root(root)
    return q if q is not None else root


def characteristic_polynomial(eq: MahlerEquation) -> CharPolyReport:
    """``p(x) = a_0(1) x^d + a_1(1) x^(d-1) + ... + a_d(1)``, exactly.

    When 0 is a root the report carries ``degenerate_zero``; the status is
    ``degenerate-zero`` if no nonzero root exists. With one distinct nonzero
    root the eigenvalue is immediate; otherwise it stays ``pending`` until
    :func:`select_eigenvalue` matches a measured radial growth rate.
    """
    d = eq.d
    p = RationalPoly([eq.coeffs[d - j].eval_at_one() for j in range(d + 1)])
    if p.is_zero():
        return CharPolyReport(eq.k, d, p, False, None, None, "degenerate-zero", True,
                              ("all a_i(1) vanish",))
    roots = isolate_real_roots(p)
    distinct = p.degree == d and p.is_squarefree()
    zero_root = p[0] == 0
    nonzero_real = [r for r in roots if not (r.exact and r.lo == 0)]
    notes = []
    if p.degree < d:
        notes.append(f"a_0(1) = 0: characteristic polynomial has degree {p.degree} < d = {d}")
    if zero_root:
        notes.append("0 is a root of the characteristic polynomial; log_k of it is undefined")
    if zero_root and not nonzero_real and roots.complex_count == 0:
        return CharPolyReport(eq.k, d, p, distinct, roots, None, "degenerate-zero", True, tuple(notes))
    if distinct and p.degree == 1:
        return CharPolyReport(eq.k, d, p, distinct, roots, _exact_or_interval(roots[0]), "exists",
                              zero_root, tuple(notes))
    return CharPolyReport(eq.k, d, p, distinct, roots, None, "pending", zero_root, tuple(notes))


# ---------------------------------------------------------------------------
# series coefficients
# ---------------------------------------------------------------------------


class _CoefficientSolver:
    """Incremental exact solver for f(0), f(1), ... of a Mahler series.

    The coefficient of ``z^(n+v)`` (v = valuation of a_0) gives one linear
    equation whose only unknown is f(n) once n >= v; smaller indices and
    singular pivots are taken from the seed.
    """

    def __init__(self, eq: MahlerEquation):
        self.eq = eq
        self.v = eq.coeffs[0].valuation()
        self.terms = []  # (power k^i, j, a_ij) for every nonzero coefficient
        for i, a in enumerate(eq.coeffs):
            for j, c in enumerate(a.coeffs):
                if c:
                    self.terms.append((eq.k**i, j, c if c.denominator != 1 else c.numerator))
        self.seed = list(eq.initial_coeffs or ())
        self.values: list = []
        self.checked_upto = -1

    def _equation(self, N: int, known: int):
        """Return (pivot coefficient of f(n), rest, future) for equation N."""
        n = N - self.v
        pivot = 0
        rest = 0
        future = False
        vals = self.values
        for q, j, c in self.terms:
            t = N - j
            if t < 0 or t % q:
                continue
            idx = t // q
            if idx == n:
                pivot += c
            elif idx < known:
                rest += c * vals[idx]
            else:
                future = True
        return pivot, rest, future

    def extend(self, n_max: int) -> None:
        vals = self.values
        while len(vals) <= n_max:
            n = len(vals)
            pivot, rest, future = self._equation(n + self.v, n)
            if pivot != 0 and not future:
                val = Fraction(-rest, 1) / pivot if not isinstance(rest, int) or not isinstance(pivot, int) else Fraction(-rest, pivot)
                if val.denominator == 1:
                    val = val.numerator
                if n < len(self.seed) and self.seed[n] != val:
                    raise InconsistentSeed(
                        f"seed f({n}) = {self.seed[n]} but the equation forces {val}"
                    )
                vals.append(val)
            elif n < len(self.seed):
                s = self.seed[n]
                vals.append(s.numerator if s.denominator == 1 else s)
            else:
                raise UnderdeterminedSeries(
                    f"f({n}) is not determined by the equation; supply at least {n + 1} seed values"
                )
        self._check(n_max)

    def _check(self, n_max: int) -> None:
        # every equation whose referenced indices are all known must hold
        for N in range(self.checked_upto + 1, n_max + self.v + 1):
            total = 0
            ok = True
            for q, j, c in self.terms:
                t = N - j
                if t < 0 or t % q:
                    continue
                idx = t // q
                if idx > n_max:
                    ok = False
                    break
                total += c * self.values[idx]
            if not ok:
                return
            if total != 0:
                raise InconsistentSeed(f"coefficient of z^{N} does not vanish; the seed is inconsistent")
            self.checked_upto = N


@lru_cache(maxsize=64)
def _solver(eq: MahlerEquation) -> _CoefficientSolver:
    return _CoefficientSolver(eq)


def solve_coefficients(eq: MahlerEquation, n_max: int) -> list[Fraction]:
    """Exact series coefficients f(0..n_max) of the solution fixed by the seed."""
    s = _solver(eq)
    s.extend(n_max)
    return [Fraction(x) for x in s.values[: n_max + 1]]


def _coefficients_raw(eq: MahlerEquation, n_max: int) -> list:
    s = _solver(eq)
    s.extend(n_max)
    return s.values


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrowthBound:
    """|f(n)| <= A * n**B for 1 <= n <= certified_upto."""

    A: float
    B: float
    certified_upto: int


@lru_cache(maxsize=64)
def coefficient_growth_bound(eq: MahlerEquation, fit_terms: int = GROWTH_FIT_TERMS) -> GrowthBound:
    """Fit A, B on f(1..fit_terms) and certify on the next fit_terms."""
    vals = _coefficients_raw(eq, 2 * fit_terms)
    mags = [abs(float(x)) for x in vals[: 2 * fit_terms + 1]]
    lo = fit_terms // 2
    B = 0.0
    for n in range(max(2, lo), fit_terms + 1):
        if mags[n] > 1:
            B = max(B, math.log(mags[n]) / math.log(n))
    B = math.ceil(B * 4 + 1) / 4  # quarter steps plus a margin
    for _ in range(12):
        A = max((mags[n] / n**B for n in range(1, fit_terms + 1)), default=0.0)
        A = max(A, 1e-300) * 1.01
        if all(mags[n] <= A * n**B for n in range(fit_terms + 1, 2 * fit_terms + 1)):
            return GrowthBound(A, B, 2 * fit_terms)
        B += 0.5
    raise PrecisionLoss("coefficients do not admit a polynomial growth bound on the fitted window")


def _series_eval(eq: MahlerEquation, w, tol):
    """Sum the power series at |w| <= 1/2; returns (value, error bound)."""
    gb = coefficient_growth_bound(eq)
    r = abs(w)
    if r == 0:
        return mpmath.mpf(_coefficients_raw(eq, 0)[0]), mpmath.mpf(0)
    # smallest N whose certified tail is below tol
    N = 16
    while True:
        q = r * (1 + mpmath.mpf(1) / (N + 1)) ** gb.B
        if q < 1:
            tail = gb.A * mpmath.mpf(N + 1) ** gb.B * r ** (N + 1) / (1 - q)
            if tail <= tol:
                break
        N = int(N * 1.25) + 1
        if N > 200000:
            raise PrecisionLoss(f"series tail at |w|={mpmath.nstr(r, 5)} cannot reach {tol}")
    vals = _coefficients_raw(eq, N)
    acc = mpmath.mpf(0)
    absacc = mpmath.mpf(0)
    for n in range(N, -1, -1):
        c = vals[n]
        cm = mpmath.mpf(c) if isinstance(c, int) else mpmath.mpf(c.numerator) / c.denominator
        acc = acc * w + cm
        absacc = absacc * r + abs(cm)
    rounding = absacc * mpmath.mpf(10) ** (-mpmath.mp.dps + 2) * N
    return acc, tail + rounding


def _chain_eval(eq: MahlerEquation, point, tol):
    """Evaluate F at point(0) where point(i) = point(0)^(k^i).

    Walks outward-in: finds the first index with |point| <= 1/2, sums the
    series there and pulls values back through the functional equation while
    propagating a worst-case error bound.
    """
    d = eq.d
    pts = []
    i = 0
    while True:
        w = point(i)
        pts.append(w)
        if abs(w) <= PULLBACK_RADIUS:
            break
        i += 1
        if i > 10000:
            raise PrecisionLoss("pullback chain does not reach the inner disc")
    N = len(pts) - 1
    for j in range(1, d):
        pts.append(point(N + j))
    vals = [None] * len(pts)
    errs = [None] * len(pts)
    for idx in range(N, len(pts)):
        vals[idx], errs[idx] = _series_eval(eq, pts[idx], tol)
    eps = mpmath.mpf(10) ** (-mpmath.mp.dps + 3)
    a0 = eq.coeffs[0]
    for idx in range(N - 1, -1, -1):
        w = pts[idx]
        den = a0.eval_mp(w)
        if den == 0:
            raise PoleOnPath(w)
        num = 0
        num_err = 0
        mag = 0
        for j in range(1, d + 1):
            aj = eq.coeffs[j]
            if aj.is_zero():
                continue
            c = aj.eval_mp(w)
            num += c * vals[idx + j]
            num_err += abs(c) * errs[idx + j]
            mag += abs(c) * abs(vals[idx + j])
        vals[idx] = -num / den
        errs[idx] = (num_err + eps * mag) / abs(den) + eps * abs(vals[idx])
    return vals[0], errs[0]


def _to_mp(z):
    if isinstance(z, Fraction):
        return mpmath.mpf(z.numerator) / z.denominator
    if isinstance(z, complex):
        return mpmath.mpc(z.real, z.imag)
    return mpmath.mpmathify(z)


@dataclass(frozen=True)
class Evaluation:
    value: object  # mpmath number
    error_bound: object
    dps: int


def evaluate_with_error(eq: MahlerEquation, z, precision: int = DEFAULT_PRECISION) -> Evaluation:
    target = mpmath.mpf(10) ** (-precision)
    dps = precision + 15
    for _ in range(4):
        with mpmath.workdps(dps):
            zz = _to_mp(z)
            if abs(zz) >= 1:
                raise ValueError("evaluation point must lie inside the unit disc")
            k = eq.k
            val, err = _chain_eval(eq, lambda i: zz ** (k**i), target / 10 ** 5)
        if err <= target:
            return Evaluation(val, err, dps)
        dps += int(mpmath.log10(err / target)) + 10
    raise PrecisionLoss(f"could not reach absolute error 1e-{precision} (last bound {mpmath.nstr(err, 5)})")


def evaluate(eq: MahlerEquation, z, precision: int = DEFAULT_PRECISION):
    """F(z) for |z| < 1 with absolute error at most ``10**-precision``."""
    ev = evaluate_with_error(eq, z, precision)
    with mpmath.workdps(precision + 5):
        return +ev.value


def series_sum(eq: MahlerEquation, z, n_terms: int, dps: int = DEFAULT_PRECISION):
    """Plain truncated sum of the first ``n_terms`` exact coefficients."""
    vals = _coefficients_raw(eq, n_terms - 1)
    with mpmath.workdps(dps):
        zz = _to_mp(z)
        acc = mpmath.mpf(0)
        for n in range(n_terms - 1, -1, -1):
            c = vals[n]
            acc = acc * zz + (mpmath.mpf(c) if isinstance(c, int) else mpmath.mpf(c.numerator) / c.denominator)
        return +acc


# ---------------------------------------------------------------------------
# radial asymptotics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadialSample:
    m: int
    z: object  # z_m = z0^(k^-m)
    value: object  # F(xi * z_m)
    error_bound: object
    C: float  # |F(xi z_m)| (1 - z_m)^gamma


@dataclass(frozen=True)
class AsymptoticFit:
    k: int
    gamma: float
    lambda_estimate: float
    samples: tuple[RadialSample, ...]
    residual: float
    xi: complex
    xi_degree: int
    xi_index: int
    m_xi: int = 0
    integrality_distance: float = 0.0
    reference_exponent: Optional[float] = None
    z0: Fraction = DEFAULT_Z0
    depth: int = DEFAULT_DEPTH
    precision: int = DEFAULT_PRECISION
    gammas: tuple[float, ...] = ()
    stride: int = 1

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma,
            "lambda_estimate": self.lambda_estimate,
            "residual": self.residual,
            "xi": [self.xi.real, self.xi.imag],
            "xi_degree": self.xi_degree,
            "xi_index": self.xi_index,
            "m_xi": self.m_xi,
            "integrality_distance": self.integrality_distance,
            "reference_exponent": self.reference_exponent,
            "z0": str(self.z0),
            "depth": self.depth,
            "precision": self.precision,
            "stride": self.stride,
            "C_last": self.samples[-1].C if self.samples else None,
        }


def _check_xi(eq: MahlerEquation, n: int, index: int) -> Fraction:
    """Validate the root of unity exp(2 pi i index / k^n); return index/k^n."""
    if n < 0:
        raise ValueError("xi degree must be nonnegative")
    K = eq.k**n
    if n == 0:
        return Fraction(0)
    if math.gcd(index, eq.k) != 1:
        raise ValueError(f"xi index {index} is not coprime to k={eq.k}; xi would not be primitive")
    phi = cyclotomic(K)
    for i, a in enumerate(eq.coeffs):
        if not a.is_zero() and (a % phi).is_zero():
            raise CoefficientVanishesAtXi(
                f"a_{i}(xi) = 0 for xi a primitive {K}-th root of unity; increase the degree n"
            )
    return Fraction(index % K, K)


def _radial_points(eq: MahlerEquation, turn: Fraction, log_z0, m: int):
    """point(i) = (xi z_m)^(k^i), built from exact rotation and radius data."""
    k = eq.k

    def point(i):
        t = (turn * k**i) % 1
        radius = mpmath.exp(log_z0 * mpmath.mpf(k) ** (i - m))
        if t == 0:
            return radius
        rot = mpmath.mpc(mpmath.cospi(2 * mpmath.mpf(t.numerator) / t.denominator),
                         mpmath.sinpi(2 * mpmath.mpf(t.numerator) / t.denominator))
        return rot * radius

    return point


def radial_samples(eq: MahlerEquation, xi_degree: int, xi_index: int, z0, depth: int,
                   precision: int = DEFAULT_PRECISION):
    """[(z_m, F(xi z_m), error)] for m = 0..depth with z_m = z0^(k^-m)."""
    z0 = to_fraction(z0)
    if not 0 < z0 < 1:
        raise ValueError("z0 must lie in (0, 1)")
    turn = _check_xi(eq, xi_degree, xi_index)
    out = []
    with mpmath.workdps(precision):
        log_z0 = mpmath.log(mpmath.mpf(z0.numerator) / z0.denominator)
        tol = mpmath.mpf(10) ** (-precision + 5)
        for m in range(depth + 1):
            zm = mpmath.exp(log_z0 / mpmath.mpf(eq.k) ** m)
            val, err = _chain_eval(eq, _radial_points(eq, turn, log_z0, m), tol)
            out.append((zm, val, err))
    return out


def radial_fit(
    eq: MahlerEquation,
    xi_degree: int = 0,
    xi_index: int = 0,
    z0=DEFAULT_Z0,
    depth: int = DEFAULT_DEPTH,
    precision: int = DEFAULT_PRECISION,
    tolerance: float = CONVERGENCE_TOLERANCE,
    reference_exponent: Optional[float] = None,
    stride: int = 1,
) -> AsymptoticFit:
    """Growth exponent of F(xi z) along z_m = z0^(k^-m) -> 1.

    Because the oscillating factor satisfies C(z) = C(z^k) it is constant on
    this sequence, so consecutive samples isolate the power of (1 - z):
    gamma_m = log|F_{m+1}/F_m| / log((1 - z_m)/(1 - z_{m+1})). The last
    estimate is reported; the residual is the largest relative change of the
    ratio estimates over the final quarter of the samples.

    ``stride`` compares z_m with z_{m+stride}. It is needed when the
    oscillating factor is only invariant under z -> z^(k^stride), as for an
    equation written in base k that really lives in base k^stride.
    """
    if depth < 8:
        raise ValueError("depth must be at least 8")
    if stride < 1 or 4 * stride > depth:
        raise ValueError("stride must be between 1 and depth/4")
    z0 = to_fraction(z0)
    raw = radial_samples(eq, xi_degree, xi_index, z0, depth, precision)
    k = eq.k
    gammas = []
    with mpmath.workdps(precision):
        for (za, fa, _), (zb, fb, _) in zip(raw, raw[stride:]):
            if fa == 0 or fb == 0:
                raise NoConvergence("F vanishes at a sample point")
            gammas.append(float(mpmath.log(abs(fb) / abs(fa)) / mpmath.log((1 - za) / (1 - zb))))
    gamma = gammas[-1]
    ratios = [k**g for g in gammas]
    start = len(ratios) - max(2, len(ratios) // 4)
    tail = ratios[start:]
    residual = max(abs(b - a) / abs(a) for a, b in zip(tail, tail[1:]))
    if not math.isfinite(gamma) or residual > tolerance:
        raise NoConvergence(f"ratio estimates did not settle (residual {residual:.3g} > {tolerance})")
    samples = []
    with mpmath.workdps(precision):
        for m, (zm, fm, em) in enumerate(raw):
            C = float(abs(fm) * (1 - zm) ** gamma)
            samples.append(RadialSample(m, zm, fm, em, C))
    turn = float(Fraction(xi_index, k**xi_degree)) if xi_degree else 0.0
    xi = complex(math.cos(2 * math.pi * turn), math.sin(2 * math.pi * turn))
    m_xi, dist = 0, 0.0
    if xi_degree > 0:
        if reference_exponent is None:
            reference_exponent = radial_fit(eq, 0, 0, z0, depth, precision, tolerance,
                                            stride=stride).gamma
        diff = reference_exponent - gamma
        m_xi = round(diff)
        dist = abs(diff - m_xi)
    return AsymptoticFit(
        k=k,
        gamma=gamma,
        lambda_estimate=k**gamma,
        samples=tuple(samples),
        residual=residual,
        xi=xi,
        xi_degree=xi_degree,
        xi_index=xi_index,
        m_xi=m_xi,
        integrality_distance=dist,
        reference_exponent=reference_exponent,
        z0=z0,
        depth=depth,
        precision=precision,
        gammas=tuple(gammas),
        stride=stride,
    )


def select_eigenvalue(report: CharPolyReport, fit: AsymptoticFit,
                      tolerance: float = ROOT_MATCH_TOLERANCE) -> CharPolyReport:
    """Pick the root of p whose modulus matches the measured growth k^gamma."""
    measured = fit.lambda_estimate
    moduli = report.root_moduli()
    if report.roots is None:
        raise NoMatchingRoot("characteristic polynomial has no roots", measured, moduli)
    matches = [r for r in report.roots if abs(abs(float(r)) - measured) <= tolerance * measured]
    complex_possible = False
    if report.roots.complex_count and report.roots.complex_modulus_bounds is not None:
        lo, hi = report.roots.complex_modulus_bounds
        complex_possible = float(lo) * (1 - tolerance) <= measured <= float(hi) * (1 + tolerance)
    if not matches and not complex_possible:
        raise NoMatchingRoot("no root of the characteristic polynomial matches", measured, moduli)
    if len(matches) > 1 or (matches and complex_possible) or not matches:
        raise AmbiguousMatch("more than one root could match", measured, moduli)
    ev = _exact_or_interval(matches[0])
    notes = report.notes + (
        f"eigenvalue selected by radial growth: k^gamma = {measured:.12g} (relative tolerance {tolerance})",
    )
    return CharPolyReport(report.k, report.d, report.p, report.distinct_roots, report.roots, ev,
                          "exists", report.degenerate_zero, notes)


def eigenvalue_exponent(report: CharPolyReport) -> float:
    """log_k |lambda_F| for a report with an eigenvalue."""
    if report.eigenvalue is None:
        raise ValueError("no eigenvalue selected")
    return math.log(abs(float(report.eigenvalue))) / math.log(report.k)


def resolve_eigenvalue(eq: MahlerEquation, z0=DEFAULT_Z0, depth: int = DEFAULT_DEPTH,
                       precision: int = DEFAULT_PRECISION,
                       stride: int = 1) -> tuple[CharPolyReport, Optional[AsymptoticFit]]:
    """Characteristic polynomial plus, when needed, radial selection of lambda_F."""
    report = characteristic_polynomial(eq)
    if report.eigenvalue_status != "pending":
        return report, None
    fit = radial_fit(eq, 0, 0, z0, depth, precision, stride=stride)
    return select_eigenvalue(report, fit), fit


@dataclass(frozen=True)
class OscillationProfile:
    exponent: float
    values: tuple[float, ...]  # C_m for m = 0..depth
    minimum: float
    maximum: float
    tail_spread: float  # max - min over the last ten samples
    limit: float

    def to_json(self) -> dict:
        return {
            "exponent": self.exponent,
            "C": list(self.values),
            "min": self.minimum,
            "max": self.maximum,
            "tail_spread": self.tail_spread,
            "limit": self.limit,
        }


def oscillation_profile(eq: MahlerEquation, z0=DEFAULT_Z0, depth: int = DEFAULT_DEPTH,
                        exponent: Optional[float] = None,
                        precision: int = DEFAULT_PRECISION) -> OscillationProfile:
    """C_m = F(z_m) (1 - z_m)^(log_k lambda_F) along z_m = z0^(k^-m)."""
    if exponent is None:
        report, _ = resolve_eigenvalue(eq, z0, depth, precision)
        exponent = eigenvalue_exponent(report)
    raw = radial_samples(eq, 0, 0, z0, depth, precision)
    with mpmath.workdps(precision):
        cs = [float(mpmath.re(f) * (1 - z) ** exponent) for z, f, _ in raw]
    tail = cs[-10:]
    return OscillationProfile(exponent, tuple(cs), min(cs), max(cs), max(tail) - min(tail), cs[-1])


@dataclass(frozen=True)
class BracketCheck:
    m: int
    one_minus_z: float
    value: float
    lower: float
    upper: float

    @property
    def holds(self) -> bool:
        return self.lower <= self.value <= self.upper


def epsilon_bracket(eq: MahlerEquation, exponent: float, eps: float, z0=DEFAULT_Z0,
                    depth: int = DEFAULT_DEPTH, m_min: int = 10,
                    precision: int = DEFAULT_PRECISION) -> list[BracketCheck]:
    """Compare F(z_m) with (1-z_m)^-(exponent -+ eps) for m_min <= m <= depth.

    The bracket is ``(1-z)^-(exponent-eps) <= F(z) <= (1-z)^-(exponent+eps)``:
    on (0, 1) a larger exponent gives the larger power, so this is the only
    orientation in which the bracket is non-empty.
    """
    raw = radial_samples(eq, 0, 0, z0, depth, precision)
    out = []
    with mpmath.workdps(precision):
        for m, (z, f, _) in enumerate(raw):
            if m < m_min:
                continue
            t = 1 - z
            out.append(BracketCheck(
                m,
                float(t),
                float(mpmath.re(f)),
                float(t ** (-(exponent - eps))),
                float(t ** (-(exponent + eps))),
            ))
    return out


def parse_z0(text: Union[str, Fraction, int]) -> Fraction:
    z = to_fraction(text)
    if not 0 < z < 1:
        raise InvalidInput("z0 must be a rational in (0, 1)")
    return z


def load_equation(path: str) -> MahlerEquation:
    with open(path, encoding="utf-8") as fh:
        return MahlerEquation.from_json(json.load(fh), name=path)


__all__: Sequence[str] = [
    "AsymptoticFit",
    "CharPolyReport",
    "MahlerEquation",
    "OscillationProfile",
    "characteristic_polynomial",
    "coefficient_growth_bound",
    "epsilon_bracket",
    "evaluate",
    "evaluate_with_error",
    "oscillation_profile",
    "radial_fit",
    "resolve_eigenvalue",
    "select_eigenvalue",
    "series_sum",
    "solve_coefficients",
]
