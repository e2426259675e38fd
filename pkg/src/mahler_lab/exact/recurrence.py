"""Exact Berlekamp-Massey over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import InsufficientData
from .polys import RationalPoly, to_fraction


@dataclass(frozen=True)
class RecurrenceFit:
    """Minimal linear recurrence of a finite sequence.

    ``charpoly`` is monic of degree ``order``; with coefficients
    ``x^L + c_1 x^(L-1) + ... + c_L`` every supplied term satisfies
    ``s[n] = -(c_1 s[n-1] + ... + c_L s[n-L])`` for ``n >= L``.
    """

    charpoly: RationalPoly
    order: int
    verified_terms: int

    @property
    def coefficients(self) -> list[Fraction]:
        return list(self.charpoly.coeffs)

    def extend(self, terms: Sequence, count: int) -> list[Fraction]:
        """Continue ``terms`` by ``count`` more values using the recurrence."""
        out = [to_fraction(t) for t in terms]
        L = self.order
        c = self.charpoly.coeffs  # ascending: c[L] == 1
        for _ in range(count):
            out.append(-sum(c[L - i] * out[-i] for i in range(1, L + 1)))
        return out

    def to_json(self) -> dict:
        return {
            "charpoly": self.charpoly.to_json(),
            "order": self.order,
            "verified_terms": self.verified_terms,
        }


def berlekamp_massey(terms: Sequence) -> RecurrenceFit:
    """Minimal-order linear recurrence generating ``terms`` exactly.

    Raises :class:`InsufficientData` when fewer than four terms are given or
    when the order found exceeds half the number of terms, since such a
    recurrence is not pinned down by the data.
    """
    s = [to_fraction(t) for t in terms]
    N = len(s)
    if N < 4:
        raise InsufficientData(f"need at least 4 terms, got {N}")

    C = [Fraction(1)]  # connection polynomial, ascending
    B = [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for n in range(N):
        d = s[n]
        for i in range(1, L + 1):
            if i < len(C):
                d += C[i] * s[n - i]
        if d == 0:
            m += 1
            continue
        coef = d / b
        T = list(C)
        need = len(B) + m
        if len(C) < need:
            C.extend([Fraction(0)] * (need - len(C)))
        for i, bi in enumerate(B):
            C[i + m] -= coef * bi
        if 2 * L <= n:
            L = n + 1 - L
            B, b, m = T, d, 1
        else:
            m += 1

    if 2 * L > N:
        raise InsufficientData(
            f"minimal recurrence has order {L} from only {N} terms; supply at least {2 * L}"
        )
    C = C[: L + 1] + [Fraction(0)] * max(0, L + 1 - len(C))
    charpoly = RationalPoly(reversed(C))
    fit = RecurrenceFit(charpoly=charpoly, order=L, verified_terms=N - L)
    _check(fit, s)
    return fit


def _check(fit: RecurrenceFit, s: list[Fraction]) -> None:
    L = fit.order
    c = fit.charpoly.coeffs
    for n in range(L, len(s)):
        if sum(c[L - i] * s[n - i] for i in range(0, L + 1)) != 0:
            raise AssertionError(f"recurrence fails at index {n}")
