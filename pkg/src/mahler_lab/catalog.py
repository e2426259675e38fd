"""Built-in examples, each in every form that applies.

Every entry carries an exact term oracle built from defining recurrences or
products, independent of both the Mahler equation and the linear
representation, so the three forms can be cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Optional

from .errors import InvalidInput, NotCoprime, NotOddPrime, UnknownEntry
from .exact import QuadraticNumber, RationalPoly, cyclotomic
from .mahler import MahlerEquation
from .regular import LinearRepresentation

PHI = QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 5)
PHI_SQUARED = QuadraticNumber(Fraction(3, 2), Fraction(1, 2), 5)


@dataclass(frozen=True)
class Expected:
    eigenvalue: Optional[QuadraticNumber] = None
    eigenvalue_status: str = "exists"
    alpha: Optional[QuadraticNumber] = None
    m: Optional[int] = None
    provenance: str = ""

    def to_json(self) -> dict:
        return {
            "eigenvalue": None if self.eigenvalue is None else str(self.eigenvalue),
            "eigenvalue_status": self.eigenvalue_status,
            "alpha": None if self.alpha is None else str(self.alpha),
            "m": self.m,
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    k: int
    oracle: Callable[[int], list[int]]
    expected: Expected
    mahler_equation: Optional[MahlerEquation] = None
    representation: Optional[LinearRepresentation] = None
    notes: tuple[str, ...] = field(default=())
    # stride for radial fits when the equation lives in base k^stride
    radial_stride: int = 1

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "k": self.k,
            "mahler_equation": None if self.mahler_equation is None else self.mahler_equation.to_json(),
            "representation": None if self.representation is None else self.representation.to_json(),
            "expected": self.expected.to_json(),
            "notes": list(self.notes),
        }


def _P(*coeffs) -> RationalPoly:
    return RationalPoly(coeffs)


# -- oracles ------------------------------------------------------------------


def stern_oracle(count: int) -> list[int]:
    """s(0)=0, s(1)=1, s(2n)=s(n), s(2n+1)=s(n)+s(n+1)."""
    s = [0, 1][:count]
    for n in range(2, count):
        h = n // 2
        s.append(s[h] if n % 2 == 0 else s[h] + s[h + 1])
    return s


def baum_sweet_oracle(count: int) -> list[int]:
    """b(0)=1, b(4n)=b(2n+1)=b(n), b(4n+2)=0."""
    b = []
    for n in range(count):
        if n == 0:
            b.append(1)
        elif n % 2 == 1:
            b.append(b[n // 2])
        elif n % 4 == 0:
            b.append(b[n // 4])
        else:
            b.append(0)
    return b


def baum_sweet_by_blocks(n: int) -> int:
    """1 iff the binary expansion of n has no block of zeros of odd length."""
    if n == 0:
        return 1
    bits = bin(n)[2:]
    return int(all(len(block) % 2 == 0 for block in bits.split("1")))


def thue_morse_oracle(count: int) -> list[int]:
    """Signed Thue-Morse: t(0)=1, t(2n)=t(n), t(2n+1)=-t(n)."""
    t = []
    for n in range(count):
        t.append(1 if n == 0 else (t[n // 2] if n % 2 == 0 else -t[n // 2]))
    return t


def dilcher_stolarsky_oracle(count: int) -> list[int]:
    """f(0)=1, f(4m)=f(m)-[m = 1 mod 4]f((m-1)/4), f(4m+1)=f(4m+2)=f(m), f(4m+3)=0."""
    f = []
    for n in range(count):
        m, r = divmod(n, 4)
        if n == 0:
            f.append(1)
        elif r == 0:
            f.append(f[m] - (f[(m - 1) // 4] if m % 4 == 1 else 0))
        elif r in (1, 2):
            f.append(f[m])
        else:
            f.append(0)
    return f


def ones_oracle(count: int) -> list[int]:
    return [1] * count


def product_oracle(factor: RationalPoly, k: int, count: int) -> list[int]:
    """Coefficients of prod_{n>=0} factor(z^(k^n)) below z^count (factor(0) = 1)."""
    out = [0] * count
    out[0] = 1
    step = 1
    coeffs = [int(c) for c in factor.coeffs]
    while step < count:
        new = [0] * count
        for i, a in enumerate(out):
            if a:
                for j, c in enumerate(coeffs):
                    idx = i + j * step
                    if idx >= count:
                        break
                    if c:
                        new[idx] += a * c
        out = new
        step *= k
    return out


# -- entries ------------------------------------------------------------------


def _stern() -> CatalogEntry:
    eq = MahlerEquation(2, (_P(0, 1), _P(-1, -1, -1)), (0, 1), name="stern")
    rep = LinearRepresentation(2, (1, 0), (0, 1), (((1, 0), (1, 1)), ((1, 1), (0, 1))), name="stern")
    return CatalogEntry(
        "stern", 2, stern_oracle,
        Expected(QuadraticNumber(3), "exists", QuadraticNumber(3), 0, "lambda = alpha = 3, m = 0"),
        eq, rep,
        ("representation re-derived and checked against the recurrence oracle; "
         "w = v = e_1 with both matrices transposed would give s(n+1)",),
    )


def _baum_sweet() -> CatalogEntry:
    eq = MahlerEquation(2, (_P(1), _P(0, -1), _P(-1)), (1,), name="baum-sweet")
    rep = LinearRepresentation(2, (1, 0), (1, 1), (((0, 1), (1, 0)), ((1, 0), (0, 0))), name="baum-sweet")
    return CatalogEntry(
        "baum-sweet", 2, baum_sweet_oracle,
        Expected(PHI, "exists", PHI, 0, "lambda = (1+sqrt 5)/2; alpha confirmed by growth_constants"),
        eq, rep,
        ("state (b(n), b(2n)); A_0 swaps the pair, A_1 keeps b(n)",),
    )


def _thue_morse() -> CatalogEntry:
    eq = MahlerEquation(2, (_P(1), _P(-1, 1)), (1,), name="thue-morse")
    rep = LinearRepresentation(2, (1,), (1,), (((1,),), ((-1,),)), name="thue-morse")
    return CatalogEntry(
        "thue-morse", 2, thue_morse_oracle,
        Expected(None, "degenerate-zero", None, None, "a_1(1) = 0 forces the characteristic polynomial x"),
        eq, rep,
        ("signed sequence: growth constants do not apply (not nonnegative)",),
    )


def _dilcher_stolarsky() -> CatalogEntry:
    eq = MahlerEquation(4, (_P(1), _P(-1, -1, -1), _P(0, 0, 0, 0, 1)), (1,), name="dilcher-stolarsky")
    rep = LinearRepresentation(
        4, (1, 0), (1, 0),
        (((1, -1), (0, 0)), ((1, 0), (1, 0)), ((1, 0), (0, 0)), ((0, 0), (0, 0))),
        name="dilcher-stolarsky",
    )
    return CatalogEntry(
        "dilcher-stolarsky", 4, dilcher_stolarsky_oracle,
        Expected(PHI_SQUARED, "exists", PHI_SQUARED, 0,
                 "dominant root (3+sqrt 5)/2 confirmed by the radial fit"),
        eq, rep,
        ("state (f(m), [m = 1 mod 4] f((m-1)/4)); 0/1 coefficients checked on the computed prefix only",),
    )


def _dilcher_stolarsky_k2() -> CatalogEntry:
    eq = MahlerEquation(
        2, (_P(1), _P(0), _P(-1, -1, -1), _P(0), _P(0, 0, 0, 0, 1)), (1,), name="dilcher-stolarsky-k2"
    )
    return CatalogEntry(
        "dilcher-stolarsky-k2", 2, dilcher_stolarsky_oracle,
        Expected(None, "ambiguous", None, None,
                 "roots +-phi and +-1/phi: growth matches two roots of equal modulus"),
        eq, None,
        ("same series as dilcher-stolarsky written as a degree-4 equation in base 2; "
         "its growth exponent must agree with the base-4 form",),
        radial_stride=2,
    )


def _geometric() -> CatalogEntry:
    eq = MahlerEquation(2, (_P(1), _P(-1, -1)), (1,), name="geometric")
    rep = LinearRepresentation(2, (1,), (1,), (((1,),), ((1,),)), name="geometric")
    return CatalogEntry(
        "geometric", 2, ones_oracle,
        Expected(QuadraticNumber(2), "exists", QuadraticNumber(2), 0, "F = 1/(1-z), a rational function"),
        eq, rep,
        ("eigenvalue equals k: multiplicatively dependent, so no transcendence claim follows",),
    )


def all_ones(k: int = 2) -> CatalogEntry:
    if k < 2:
        raise InvalidInput("k must be at least 2")
    rep = LinearRepresentation(k, (1,), (1,), tuple(((1,),) for _ in range(k)), name=f"all-ones:{k}")
    return CatalogEntry(
        f"all-ones:{k}" if k != 2 else "all-ones", k, ones_oracle,
        Expected(None, "exists", QuadraticNumber(k), 0, "sigma(r) = k^r + 1"),
        None, rep,
    )


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def cyclotomic_representation(p: int, k: int) -> LinearRepresentation:
    """Linear representation of the coefficients of prod Phi_p(z^(k^n)).

    With c = floor((p-1)/k) and L = 2c the state is (f(m), ..., f(m-L)) and
    f(km + r) = sum of f(m - t) over t >= 0 with r + kt <= p - 1.
    """
    c = (p - 1) // k
    L = 2 * c
    dim = L + 1
    mats = []
    for r in range(k):
        A = [[0] * dim for _ in range(dim)]
        for s in range(dim):
            q, rr = divmod(r - s, k)
            t = 0
            while rr + k * t <= p - 1:
                col = -q + t
                if col >= dim:
                    raise AssertionError("state too short for the representation")
                A[s][col] += 1
                t += 1
        mats.append(tuple(tuple(row) for row in A))
    e0 = tuple(int(i == 0) for i in range(dim))
    return LinearRepresentation(k, e0, e0, tuple(mats), name=f"cyclotomic:{p}:{k}")


def cyclotomic_product(p: int, k: int = 2) -> CatalogEntry:
    """F_p(z) = prod_{n>=0} Phi_p(z^(k^n)) with F_p(z) = Phi_p(z) F_p(z^k)."""
    if p % 2 == 0 or not _is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    if k < 2:
        raise InvalidInput("k must be at least 2")
    if gcd(p, k) != 1:
        raise NotCoprime(f"p={p} and k={k} are not coprime")
    phi = cyclotomic(p)
    eq = MahlerEquation(k, (_P(1), -phi), (1,), name=f"cyclotomic:{p}:{k}")
    return CatalogEntry(
        f"cyclotomic:{p}" if k == 2 else f"cyclotomic:{p}:{k}", k,
        lambda count: product_oracle(phi, k, count),
        Expected(QuadraticNumber(p), "exists", QuadraticNumber(p), 0, f"Phi_{p}(1) = {p}"),
        eq, cyclotomic_representation(p, k),
        ("f(n) counts base-k expansions of n with digits 0..p-1",),
    )


_BUILDERS: dict[str, Callable[[], CatalogEntry]] = {
    "stern": _stern,
    "baum-sweet": _baum_sweet,
    "thue-morse": _thue_morse,
    "dilcher-stolarsky": _dilcher_stolarsky,
    "dilcher-stolarsky-k2": _dilcher_stolarsky_k2,
    "geometric": _geometric,
    "all-ones": all_ones,
}


def names() -> list[str]:
    return sorted(_BUILDERS) + ["cyclotomic:<p>[:<k>]", "all-ones:<k>"]


def get(name: str, k: Optional[int] = None) -> CatalogEntry:
    """Look up an entry. ``cyclotomic:p`` and ``cyclotomic:p:k`` build the
    product family (k defaults to the argument, then 2); ``all-ones:k``
    picks the base."""
    key = name.strip().lower()
    if key.startswith("cyclotomic:") or key.startswith("all-ones:"):
        head, *rest = key.split(":")
        try:
            nums = [int(x) for x in rest]
        except ValueError as exc:
            raise UnknownEntry(name) from exc
        if head == "cyclotomic" and len(nums) in (1, 2):
            return cyclotomic_product(nums[0], nums[1] if len(nums) == 2 else (k or 2))
        if head == "all-ones" and len(nums) == 1:
            return all_ones(nums[0])
        raise UnknownEntry(name)
    if key not in _BUILDERS:
        raise UnknownEntry(name)
    return _BUILDERS[key]()


def standard_entries() -> list[CatalogEntry]:
    """Every named entry plus two members of the cyclotomic family."""
    return [get(n) for n in sorted(_BUILDERS)] + [cyclotomic_product(3, 2), cyclotomic_product(5, 2),
                                                  cyclotomic_product(7, 3)]
