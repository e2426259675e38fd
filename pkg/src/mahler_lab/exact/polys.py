"""Dense univariate polynomials over the rationals.

Coefficients are stored in ascending degree order as :class:`fractions.Fraction`
and the list is always normalised (no trailing zeros), so the zero polynomial
is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def to_fraction(x) -> Fraction:
    """Parse an exact rational from an int, Fraction or ``"p/q"`` string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(c in s for c in ".eE"):
            raise ValueError(f"not an exact rational: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class RationalPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors -------------------------------------------------------
    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "RationalPoly":
        return cls([0] * degree + [c])

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "RationalPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-to_fraction(r), 1])
        return p

    # -- basic properties ---------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (order of vanishing at 0)."""
        if not self.coeffs:
            raise ValueError("valuation of the zero polynomial is undefined")
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise AssertionError("unreachable")

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "z") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        return RationalPoly([other])

    def __add__(self, other) -> "RationalPoly":
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return RationalPoly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "RationalPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalPoly":
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "RationalPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = RationalPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "RationalPoly") -> tuple["RationalPoly", "RationalPoly"]:
        o = self._coerce(other)
        if not o.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return RationalPoly(), RationalPoly(rem)
        quot = [Fraction(0)] * (dq + 1)
        lead = o.coeffs[-1]
        for i in range(dq, -1, -1):
            c = rem[i + len(o.coeffs) - 1] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[i + j] -= c * b
        return RationalPoly(quot), RationalPoly(rem[: len(o.coeffs) - 1])

    def __floordiv__(self, other) -> "RationalPoly":
        return self.divmod(other)[0]

    def __mod__(self, other) -> "RationalPoly":
        return self.divmod(other)[1]

    def exact_div(self, other) -> "RationalPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other!r} does not divide {self!r}")
        return q

    def monic(self) -> "RationalPoly":
        if not self.coeffs:
            return self
        return RationalPoly(c / self.lead for c in self.coeffs)

    def derivative(self) -> "RationalPoly":
        return RationalPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def gcd(self, other) -> "RationalPoly":
        a, b = self, self._coerce(other)
        while b:
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self) -> "RationalPoly":
        if self.degree <= 0:
            return self.monic()
        return self.exact_div(self.gcd(self.derivative())).monic()

    def squarefree_decomposition(self) -> list[tuple["RationalPoly", int]]:
        """Yun's algorithm: monic pairwise-coprime factors with multiplicities."""
        if self.degree <= 0:
            return []
        f = self.monic()
        out = []
        g = f.gcd(f.derivative())
        c = f.exact_div(g)
        i = 1
        while c.degree > 0:
            y = c.gcd(g)
            factor = c.exact_div(y)
            if factor.degree > 0:
                out.append((factor, i))
            g = g.exact_div(y)
            c = y
            i += 1
        return out

    def is_squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree <= 0

    def shift_by_monomial(self, k: int) -> "RationalPoly":
        """Multiply by ``z**k``."""
        if not self.coeffs:
            return self
        return RationalPoly([0] * k + list(self.coeffs))

    def compose_power(self, k: int) -> "RationalPoly":
        """Return ``p(z**k)``."""
        out = [Fraction(0)] * ((len(self.coeffs) - 1) * k + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return RationalPoly(out)

    def reversed(self) -> "RationalPoly":
        """``z**deg * p(1/z)``."""
        return RationalPoly(reversed(self.coeffs))

    def scale_variable(self, s: Scalar) -> "RationalPoly":
        """Return ``p(s*z)``."""
        s = to_fraction(s)
        return RationalPoly(c * s**i for i, c in enumerate(self.coeffs))

    # -- evaluation ---------------------------------------------------------
    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_at_one(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    def eval_mp(self, x):
        """Horner evaluation for mpmath (or any numeric) arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + (c.numerator if c.denominator == 1 else _mpq(c))
        return acc

    def sign_at(self, x: Fraction) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def content_free_integer(self) -> list[int]:
        """Integer coefficient list with the same roots (denominators cleared)."""
        from math import gcd, lcm

        if not self.coeffs:
            return []
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return [v // g for v in ints]

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def _mpq(c: Fraction):
    import mpmath

    return mpmath.mpf(c.numerator) / c.denominator


def poly_eval_at_one(p: RationalPoly) -> Fraction:
    """Sum of coefficients, i.e. ``p(1)``."""
    return p.eval_at_one()


def as_poly(obj) -> RationalPoly:
    if isinstance(obj, RationalPoly):
        return obj
    if isinstance(obj, (int, Fraction, str)):
        return RationalPoly([obj])
    return RationalPoly(obj)


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> RationalPoly:
    """The m-th cyclotomic polynomial, by exact division of ``z^m - 1``."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    p = RationalPoly.monomial(m) - 1
    for d in range(1, m):
        if m % d == 0:
            p = p.exact_div(cyclotomic(d))
    return p


def polys_from_json(data: Sequence[Sequence]) -> list[RationalPoly]:
    return [RationalPoly(to_fraction(c) for c in row) for row in data]
