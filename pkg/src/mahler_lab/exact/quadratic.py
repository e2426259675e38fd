"""Exact arithmetic in real quadratic fields Q(sqrt(D))."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from ..errors import MixedFields, NotQuadratic
from .polys import RationalPoly, to_fraction


def squarefree_split(n: int) -> tuple[int, int]:
    """Write a positive integer as ``s**2 * D`` with D square-free.

    Trial division only runs up to the cube root: whatever is left afterwards
    has at most two prime factors, so it is a square exactly when it is a
    perfect square.
    """
    if n <= 0:
        raise ValueError("squarefree_split needs a positive integer")
    s, D = 1, 1
    m = n
    p = 2
    while p * p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            D *= p
        p += 1 if p == 2 else 2
    r = isqrt(m)
    if r * r == m:
        s *= r
    else:
        D *= m
    return s, D


class QuadraticNumber:
    """``a + b*sqrt(D)`` with a, b rational and D a positive square-free integer.

    Elements with ``b == 0`` are plain rationals and mix freely with any field.
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a=0, b=0, D: int = 1):
        D = int(D)
        if D <= 0:
            raise ValueError("D must be positive (real quadratic fields only)")
        a, b = to_fraction(a), to_fraction(b)
        if D != 1:
            s, core = squarefree_split(D)
            if core != D:
                b, D = b * s, core
        if D == 1:
            a, b = a + b, Fraction(0)
        self.a, self.b, self.D = a, b, D

    @classmethod
    def coerce(cls, x) -> "QuadraticNumber":
        if isinstance(x, QuadraticNumber):
            return x
        return cls(to_fraction(x), 0, 1)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def field(self) -> int:
        """The square-free D, or 1 for rationals."""
        return 1 if self.b == 0 else self.D

    def _common(self, other) -> tuple["QuadraticNumber", int]:
        o = QuadraticNumber.coerce(other)
        if self.b and o.b and self.D != o.D:
            raise MixedFields(f"Q(sqrt({self.D})) vs Q(sqrt({o.D}))")
        D = self.D if self.b else o.D
        return o, D

    def __add__(self, other):
        o, D = self._common(other)
        return QuadraticNumber(self.a + o.a, self.b + o.b, D)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.D)

    def __sub__(self, other):
        return self + (-QuadraticNumber.coerce(other))

    def __rsub__(self, other):
        return QuadraticNumber.coerce(other) - self

    def __mul__(self, other):
        o, D = self._common(other)
        return QuadraticNumber(self.a * o.a + self.b * o.b * D, self.a * o.b + self.b * o.a, D)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.D

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self) -> "QuadraticNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in a quadratic field")
        c = self.conjugate()
        return QuadraticNumber(c.a / n, c.b / n, self.D)

    def __truediv__(self, other):
        return self * QuadraticNumber.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QuadraticNumber.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "QuadraticNumber":
        if e < 0:
            return self.inverse() ** (-e)
        result = QuadraticNumber(1, 0, self.D)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 D
        diff = self.a * self.a - self.b * self.b * self.D
        return sa if diff > 0 else (sb if diff < 0 else 0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, QuadraticNumber):
            return NotImplemented
        if self.b == 0 and other.b == 0:
            return self.a == other.a
        return (self.a, self.b, self.D) == (other.a, other.b, other.D)

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b, self.D))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return float(self.to_mpf(30))

    def to_mpf(self, dps: int = 60):
        import mpmath

        with mpmath.workdps(dps + 5):
            v = mpmath.mpf(self.a.numerator) / self.a.denominator
            if self.b:
                v += mpmath.mpf(self.b.numerator) / self.b.denominator * mpmath.sqrt(self.D)
        return +v

    def minimal_polynomial(self) -> RationalPoly:
        if self.b == 0:
            return RationalPoly([-self.a, 1])
        return RationalPoly([self.norm(), -self.trace(), 1])

    def __repr__(self):
        return f"QuadraticNumber({self.a}, {self.b}, {self.D})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*sqrt({self.D})"

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "D": self.D, "approx": float(self)}

    def nth_root(self, e: int) -> "QuadraticNumber | None":
        """Exact positive e-th root inside the same field, or None.

        A numeric guess is rationalised and then checked exactly, so a returned
        root is always correct.
        """
        if e == 1:
            return self
        if self.sign() <= 0:
            return None
        import mpmath

        with mpmath.workdps(80):
            x = mpmath.root(self.to_mpf(80), e)
            if self.b == 0:
                cands = [QuadraticNumber(_rationalize(x), 0, 1)]
            else:
                # the Galois conjugate of a root is a real e-th root of the conjugate
                conj = self.conjugate()
                r = mpmath.root(abs(conj.to_mpf(80)), e)
                if conj.sign() > 0:
                    conj_roots = [r, -r] if e % 2 == 0 else [r]
                elif e % 2 == 1:
                    conj_roots = [-r]
                else:
                    conj_roots = []
                cands = []
                for y in conj_roots:
                    a = _rationalize((x + y) / 2)
                    b = _rationalize((x - y) / (2 * mpmath.sqrt(self.D)))
                    cands.append(QuadraticNumber(a, b, self.D))
        for c in cands:
            if c ** e == self and c.sign() > 0:
                return c
        return None


def _rationalize(x, max_den: int = 10**12) -> Fraction:
    import mpmath

    return Fraction(mpmath.nstr(x, 40, strip_zeros=False)).limit_denominator(max_den)


def quadratic_from_poly(p: RationalPoly) -> QuadraticNumber:
    """Exact (largest real) root of a polynomial of degree 1 or 2."""
    if p.degree == 1:
        c0, c1 = p.coeffs
        return QuadraticNumber(-c0 / c1, 0, 1)
    if p.degree != 2:
        raise NotQuadratic(f"degree {p.degree} polynomial has no quadratic root formula here")
    c, b, a = p.coeffs
    disc = b * b - 4 * a * c
    if disc < 0:
        raise NotQuadratic(f"{p.pretty('x')} has complex roots (discriminant {disc})")
    base = -b / (2 * a)
    if disc == 0:
        return QuadraticNumber(base, 0, 1)
    s, D = squarefree_split(disc.numerator * disc.denominator)
    half = Fraction(s, disc.denominator) / (2 * abs(a))
    return QuadraticNumber(base, half, D)
