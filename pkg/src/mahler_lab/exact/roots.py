"""Certified real-root isolation for rational polynomials.

Real roots are isolated with Sturm sequences and refined by bisection on
rational endpoints. Non-real roots are only counted and bounded in modulus;
the Schur-Cohn test answers "are all roots inside radius rho" exactly, which
is what the dominance checks downstream need.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .polys import RationalPoly
from .quadratic import QuadraticNumber

DEFAULT_PRECISION = 50


@dataclass(frozen=True)
class RealRoot:
    lo: Fraction
    hi: Fraction
    multiplicity: int
    factor: RationalPoly = field(repr=False, compare=False)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self) -> float:
        return float(self.mid)

    def to_mpf(self, dps: int = 60):
        import mpmath

        with mpmath.workdps(dps + 5):
            v = mpmath.mpf(self.mid.numerator) / self.mid.denominator
        return +v

    def to_json(self) -> dict:
        return {
            "lo": str(self.lo),
            "hi": str(self.hi),
            "approx": float(self.mid),
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class RootIsolation:
    """Real roots (sorted) plus a summary of the non-real ones."""

    real: tuple[RealRoot, ...]
    complex_count: int
    complex_modulus_bounds: Optional[tuple[Fraction, Fraction]]
    degree: int

    def __iter__(self) -> Iterator[RealRoot]:
        return iter(self.real)

    def __len__(self) -> int:
        return len(self.real)

    def __getitem__(self, i: int) -> RealRoot:
        return self.real[i]

    @property
    def distinct(self) -> bool:
        return all(r.multiplicity == 1 for r in self.real)

    def to_json(self) -> dict:
        return {
            "real": [r.to_json() for r in self.real],
            "complex_count": self.complex_count,
            "complex_modulus_bounds": (
                None
                if self.complex_modulus_bounds is None
                else [float(x) for x in self.complex_modulus_bounds]
            ),
        }


def sturm_sequence(f: RationalPoly) -> list[RationalPoly]:
    seq = [f, f.derivative()]
    while seq[-1]:
        r = seq[-2] % seq[-1]
        if not r:
            break
        seq.append(-r)
    return seq


def _variations(seq: list[RationalPoly], x: Fraction) -> int:
    signs = [s for s in (p.sign_at(x) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(f: RationalPoly) -> Fraction:
    """Every complex root has modulus strictly below this value."""
    lead = abs(f.lead)
    return 1 + max((abs(c) / lead for c in f.coeffs[:-1]), default=Fraction(0))


def _split_point(f: RationalPoly, a: Fraction, b: Fraction) -> Fraction:
    for num, den in ((1, 2), (3, 7), (4, 7), (2, 5), (3, 5), (5, 11), (6, 11)):
        x = a + (b - a) * num / den
        if f(x) != 0:
            return x
    raise AssertionError("polynomial vanishes at too many rational points")


def _isolate_squarefree(f: RationalPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi) with exactly one root each."""
    if f.degree <= 0:
        return []
    seq = sturm_sequence(f)
    B = cauchy_bound(f)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-B, B)]
    while stack:
        a, b = stack.pop()
        n = _variations(seq, a) - _variations(seq, b)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        # split points are never roots, so every endpoint has a nonzero sign
        m = _split_point(f, a, b)
        stack.extend([(a, m), (m, b)])
    return sorted(out)


def _refine(f: RationalPoly, a: Fraction, b: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    if a == b:
        return a, b
    fb = f.sign_at(b)
    if fb == 0:
        return b, b
    fa = f.sign_at(a)
    while b - a > width:
        m = (a + b) / 2
        fm = f.sign_at(m)
        if fm == 0:
            return m, m
        if fm == fa:
            a, fa = m, fm
        else:
            b, fb = m, fm
    return a, b


def isolate_real_roots(p: RationalPoly, precision: int = DEFAULT_PRECISION) -> RootIsolation:
    """Isolate every real root of ``p`` to width at most ``10**-precision``.

    Multiplicities come from the square-free decomposition; each factor is
    isolated separately so multiple roots never confuse the Sturm counts.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    width = Fraction(1, 10**precision)
    roots: list[RealRoot] = []
    complex_count = 0
    for factor, mult in p.squarefree_decomposition():
        ivs = _isolate_squarefree(factor)
        complex_count += mult * (factor.degree - len(ivs))
        for a, b in ivs:
            lo, hi = _refine(factor, a, b, width)
            roots.append(RealRoot(lo, hi, mult, factor))
    roots.sort(key=lambda r: r.lo)
    bounds = None
    if complex_count:
        sf = p.squarefree_part()
        upper = cauchy_bound(sf)
        lower = Fraction(0)
        if sf[0] != 0:
            lower = 1 / cauchy_bound(sf.reversed())
        bounds = (lower, upper)
    return RootIsolation(tuple(roots), complex_count, bounds, p.degree)


def schur_stable(p: RationalPoly) -> bool:
    """True iff every root of ``p`` lies strictly inside the unit circle.

    Schur-Cohn recursion: with ``a0 = p(0)`` and ``an`` the leading coefficient,
    ``p`` is stable iff ``|a0| < |an|`` and ``(an*p - a0*p_rev)/z`` is stable.
    """
    c = list(p.coeffs)
    if not c:
        raise ValueError("zero polynomial")
    while len(c) > 1:
        a0, an = c[0], c[-1]
        if abs(a0) >= abs(an):
            return False
        n = len(c) - 1
        c = [an * c[i] - a0 * c[n - i] for i in range(1, n + 1)]
    return True


def roots_inside_radius(p: RationalPoly, rho: Fraction) -> bool:
    """Exact test: all roots of ``p`` have modulus < rho (rho > 0 rational)."""
    return schur_stable(p.scale_variable(rho))


def exact_real_root(root: RealRoot, max_den: int = 10**18) -> Optional[QuadraticNumber]:
    """Identify an isolated real root as a rational or real quadratic number.

    Candidates are found by rationalising interval midpoints and are then
    verified exactly against the root's square-free factor, so a non-None
    result is certain.
    """
    f = root.factor
    if root.exact:
        return QuadraticNumber(root.lo, 0, 1)
    c = root.mid.limit_denominator(max_den)
    if root.lo <= c <= root.hi and f(c) == 0:
        return QuadraticNumber(c, 0, 1)
    if f.degree < 2:
        return None
    others = [iv for iv in _isolate_squarefree(f)]
    width = root.width
    for a, b in others:
        lo, hi = _refine(f, a, b, width)
        if lo == root.lo and hi == root.hi:
            continue
        beta = (lo + hi) / 2
        s = (root.mid + beta).limit_denominator(max_den)
        prod = (root.mid * beta).limit_denominator(max_den)
        q = RationalPoly([prod, -s, 1])
        if f % q:
            continue
        disc = s * s - 4 * prod
        if disc <= 0:
            continue
        for cand in (_quad_root(q, +1), _quad_root(q, -1)):
            if cand >= root.lo and cand <= root.hi:
                return cand
    return None


def _quad_root(q: RationalPoly, sign: int) -> QuadraticNumber:
    from .quadratic import quadratic_from_poly

    big = quadratic_from_poly(q)
    return big if sign > 0 else big.conjugate()
