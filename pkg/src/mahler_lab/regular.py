"""k-regular sequences given by linear representations.

A representation ``(w, A_0, ..., A_{k-1}, v)`` defines
``f(n) = w^T A_{i_0} A_{i_1} ... A_{i_s} v`` where ``i_0`` is the least
significant base-k digit of n. The empty product gives ``f(0) = w^T v``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

import mpmath

from . import kernels
from .errors import InvalidInput, NoDominantRealRoot, NotNonnegative
from .exact import (
    QuadraticNumber,
    RationalPoly,
    RealRoot,
    RecurrenceFit,
    berlekamp_massey,
    exact_real_root,
    isolate_real_roots,
    roots_inside_radius,
)

MAX_TERMS = 2**22
DEFAULT_R_MAX = 16

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def _int_entry(x) -> int:
    if isinstance(x, bool):
        raise InvalidInput("booleans are not integers")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            pass
    raise InvalidInput(f"representation entries must be integers, got {x!r}")


@dataclass(frozen=True)
class LinearRepresentation:
    k: int
    w: Vector
    v: Vector
    matrices: tuple[Matrix, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        w = tuple(_int_entry(x) for x in self.w)
        v = tuple(_int_entry(x) for x in self.v)
        mats = tuple(tuple(tuple(_int_entry(x) for x in row) for row in A) for A in self.matrices)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "matrices", mats)
        if not isinstance(self.k, int) or self.k < 2:
            raise InvalidInput(f"k must be an integer >= 2, got {self.k!r}")
        dim = len(w)
        if dim < 1 or len(v) != dim:
            raise InvalidInput("w and v must be nonempty and of equal length")
        if len(mats) != self.k:
            raise InvalidInput(f"expected {self.k} matrices, got {len(mats)}")
        for i, A in enumerate(mats):
            if len(A) != dim or any(len(row) != dim for row in A):
                raise InvalidInput(f"A_{i} is not {dim}x{dim}")

    @property
    def dim(self) -> int:
        return len(self.w)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "dim": self.dim,
            "w": [str(x) for x in self.w],
            "v": [str(x) for x in self.v],
            "matrices": [[[str(x) for x in row] for row in A] for A in self.matrices],
        }

    @classmethod
    def from_json(cls, data: Union[str, dict], name: str = "") -> "LinearRepresentation":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            rep = cls(data["k"], data["w"], data["v"], data["matrices"], name=name)
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"bad linear representation JSON: {exc}") from exc
        if "dim" in data and data["dim"] != rep.dim:
            raise InvalidInput(f"dim {data['dim']} does not match vectors of length {rep.dim}")
        return rep


def _matvec(A: Matrix, x: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def _vecmat(x: Sequence[int], A: Matrix) -> list[int]:
    n = len(x)
    return [sum(x[i] * A[i][j] for i in range(n)) for j in range(n)]


def _dot(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


def digits(n: int, k: int) -> list[int]:
    """Base-k digits of n, least significant first (empty for 0)."""
    out = []
    while n:
        n, r = divmod(n, k)
        out.append(r)
    return out


def eval_term(rep: LinearRepresentation, n: int) -> int:
    """Exact f(n) from the digit-matrix product."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    u = list(rep.v)
    # the most significant digit's matrix touches v first
    for d in reversed(digits(n, rep.k)):
        u = _matvec(rep.matrices[d], u)
    return _dot(rep.w, u)


def terms(rep: LinearRepresentation, count: int) -> list[int]:
    """f(0), ..., f(count-1) in one pass."""
    if count > MAX_TERMS + 1:
        raise ValueError(f"at most {MAX_TERMS + 1} terms are supported")
    return kernels.regular_terms(rep.k, rep.w, rep.v, rep.matrices, count)


def power_subsequence(rep: LinearRepresentation, l_max: int) -> list[int]:
    """f(k^0), ..., f(k^l_max) as ``w^T A_0^l A_1 v``."""
    if l_max < 0:
        raise ValueError("l_max must be nonnegative")
    tail = _matvec(rep.matrices[1], rep.v)
    row = list(rep.w)
    out = []
    for _ in range(l_max + 1):
        out.append(_dot(row, tail))
        row = _vecmat(row, rep.matrices[0])
    return out


def fast_sums_applicable(rep: LinearRepresentation) -> bool:
    """A_0 v = v makes padding with leading zero digits harmless."""
    return tuple(_matvec(rep.matrices[0], rep.v)) == rep.v


def _sigma_fast(rep: LinearRepresentation, r_max: int) -> list[int]:
    k, dim = rep.k, rep.dim
    M = tuple(
        tuple(sum(A[i][j] for A in rep.matrices) for j in range(dim)) for i in range(dim)
    )
    powers = power_subsequence(rep, r_max)
    out = []
    u = list(rep.v)
    for r in range(r_max + 1):
        # every n < k^r is a length-r digit string once padded with zeros
        out.append(_dot(rep.w, u) + powers[r])
        u = _matvec(M, u)
    return out


def _sigma_naive(rep: LinearRepresentation, r_max: int) -> list[int]:
    top = rep.k**r_max
    if top > MAX_TERMS:
        raise ValueError(f"naive summation needs k^r_max <= {MAX_TERMS}")
    vals = terms(rep, top + 1)
    out = []
    s = 0
    nxt = 1
    for n, x in enumerate(vals):
        s += x
        if n == nxt:
            out.append(s)
            nxt *= rep.k
    return out


def partial_sums_sigma(rep: LinearRepresentation, r_max: int, method: str = "auto") -> list[int]:
    """sigma(r) = sum of f(n) for n <= k^r, r = 0..r_max.

    ``method`` is ``auto`` (matrix powers when A_0 v = v, else direct
    summation), ``fast`` or ``naive``. The matrix-power route is cross-checked
    against direct summation on small r.
    """
    if r_max < 0:
        raise ValueError("r_max must be nonnegative")
    if method not in ("auto", "fast", "naive"):
        raise ValueError(f"unknown method {method!r}")
    use_fast = method == "fast" or (method == "auto" and fast_sums_applicable(rep))
    if method == "fast" and not fast_sums_applicable(rep):
        raise ValueError("matrix-power sums need A_0 v = v")
    if not use_fast:
        return _sigma_naive(rep, r_max)
    out = _sigma_fast(rep, r_max)
    small = min(r_max, 8)
    if _sigma_naive(rep, small) != out[: small + 1]:
        raise AssertionError("matrix-power partial sums disagree with direct summation")
    return out


Alpha = Union[QuadraticNumber, RealRoot]


@dataclass(frozen=True)
class GrowthReport:
    alpha: Alpha
    m: int
    sigma_recurrence: RecurrenceFit
    exponent: float
    sigma: tuple[int, ...]
    alpha_exact: bool

    @property
    def alpha_float(self) -> float:
        return float(self.alpha)

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha.to_json(),
            "alpha_exact": self.alpha_exact,
            "m": self.m,
            "exponent": self.exponent,
            "sigma": [str(s) for s in self.sigma],
            "sigma_recurrence": self.sigma_recurrence.to_json(),
            "sigma_charpoly_pretty": self.sigma_recurrence.charpoly.pretty("x"),
        }


def check_nonnegative(rep: LinearRepresentation, window: int) -> None:
    """Nonnegative and not eventually zero on f(0..window-1)."""
    vals = terms(rep, window)
    neg = next((n for n, x in enumerate(vals) if x < 0), None)
    if neg is not None:
        raise NotNonnegative(f"f({neg}) = {vals[neg]} < 0")
    if not any(vals[window // 2:]):
        raise NotNonnegative(f"f vanishes on [{window // 2}, {window}); looks eventually zero")


def _dominant(charpoly: RationalPoly) -> tuple[Alpha, int, bool]:
    iso = isolate_real_roots(charpoly)
    positives = [r for r in iso if r.lo > 0]
    if not positives:
        raise NoDominantRealRoot(f"{charpoly.pretty('x')} has no positive real root")
    top = positives[-1]
    exact = exact_real_root(top)
    if exact is not None:
        minpoly = exact.minimal_polynomial()
        if not exact.is_rational and abs(exact.conjugate()) >= exact:
            raise NoDominantRealRoot("the conjugate of alpha has the same modulus")
        rest = charpoly.monic().exact_div(minpoly**top.multiplicity)
        if rest.degree > 0 and not roots_inside_radius(rest, top.lo):
            raise NoDominantRealRoot(
                f"another root of {charpoly.pretty('x')} reaches the modulus of alpha"
            )
        return exact, top.multiplicity, True
    # degree > 2: fall back to numerical roots of the remaining factor
    with mpmath.workdps(60):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(charpoly.coeffs)]
        roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=200)
        a = top.to_mpf(60)
        close = [z for z in roots if abs(z - a) < mpmath.mpf(10) ** -20]
        others = [z for z in roots if abs(z - a) >= mpmath.mpf(10) ** -20]
        if any(abs(z) >= a * (1 - mpmath.mpf(10) ** -30) for z in others):
            raise NoDominantRealRoot("a non-real or negative root ties with alpha")
    return top, max(top.multiplicity, len(close)), False


def growth_constants(rep: LinearRepresentation, r_max: int = DEFAULT_R_MAX,
                     check_window: int = 2**12) -> GrowthReport:
    """alpha and m with sum_{n <= N} f(n) of order N^(log_k alpha) log^m N.

    Berlekamp-Massey finds the minimal recurrence of sigma(0..r_max); alpha is
    its unique dominant positive real root, identified exactly when it is
    rational or quadratic, and m + 1 is its multiplicity.
    """
    check_nonnegative(rep, min(check_window, MAX_TERMS))
    sigma = partial_sums_sigma(rep, r_max)
    fit = berlekamp_massey(sigma)
    alpha, mult, exact = _dominant(fit.charpoly)
    if float(alpha) < 1:
        raise NoDominantRealRoot(f"dominant root {float(alpha)} is below 1")
    return GrowthReport(
        alpha=alpha,
        m=mult - 1,
        sigma_recurrence=fit,
        exponent=math.log(float(alpha)) / math.log(rep.k),
        sigma=tuple(sigma),
        alpha_exact=exact,
    )


@dataclass(frozen=True)
class WeightedTrace:
    Ns: tuple[int, ...]
    values: tuple[float, ...]
    exponent: float
    m: int

    @property
    def minimum(self) -> float:
        return min(self.values)

    @property
    def maximum(self) -> float:
        return max(self.values)


def weighted_sum_trace(rep: LinearRepresentation, n_min: int, n_max: int,
                       growth: Optional[GrowthReport] = None) -> WeightedTrace:
    """S(N) / (N^(log_k alpha) log^m N) for n_min <= N <= n_max."""
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    if n_max > MAX_TERMS:
        raise ValueError(f"n_max must not exceed {MAX_TERMS}")
    if growth is None:
        growth = growth_constants(rep)
    if growth.m and n_min < 2:
        raise ValueError("log weights need n_min >= 2")
    vals = terms(rep, n_max + 1)
    Ns, ws = kernels.weighted_trace(vals, n_min, n_max, growth.exponent, growth.m)
    return WeightedTrace(tuple(Ns), tuple(ws), growth.exponent, growth.m)


def octave_profile(trace: WeightedTrace, octave_start: int, k: int, grid: int = 256) -> list[float]:
    """Sample a trace on [K, kK) at K * k^(j/grid), j = 0..grid-1.

    Positions are rounded down to an integer N, so two octaves are compared
    at the same relative position on a log scale. The trace must cover the
    octave with consecutive N.
    """
    first = trace.Ns[0]
    out = []
    for j in range(grid):
        N = int(octave_start * k ** (j / grid))
        out.append(trace.values[N - first])
    return out


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    checked: int
    first_mismatch: Optional[int] = None
    expected: Optional[int] = None
    got: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_representation(rep: LinearRepresentation, oracle: Sequence) -> VerificationResult:
    """Compare f(0..len(oracle)-1) with exact oracle values."""
    got = terms(rep, len(oracle))
    for n, (a, b) in enumerate(zip(got, oracle)):
        if a != b:
            return VerificationResult(False, n, n, b, a)
    return VerificationResult(True, len(oracle))


def load_representation(path: str) -> LinearRepresentation:
    with open(path, encoding="utf-8") as fh:
        return LinearRepresentation.from_json(json.load(fh), name=path)
