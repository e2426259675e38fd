"""Integer lattices: exact kernels and LLL reduction."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def integer_kernel(matrix: Matrix, reduce: bool = True) -> list[list[int]]:
    """Basis of ``{x in Z^c : M x = 0}`` for an integer matrix M (r x c).

    Row-reduces ``[M^T | I]`` with unimodular integer row operations; rows
    whose left part vanishes carry a lattice basis of the kernel. The basis is
    LLL-reduced afterwards so relations come out short.
    """
    rows = [list(map(int, r)) for r in matrix]
    if not rows:
        return []
    c = len(rows[0])
    if any(len(r) != c for r in rows):
        raise ValueError("ragged matrix")
    r = len(rows)
    # augmented rows: (M^T row j | e_j)
    aug = [[rows[i][j] for i in range(r)] + [int(i == j) for i in range(c)] for j in range(c)]
    pivot_row = 0
    for col in range(r):
        if pivot_row >= c:
            break
        for i in range(pivot_row + 1, c):
            a, b = aug[pivot_row][col], aug[i][col]
            if b == 0:
                continue
            if a == 0:
                aug[pivot_row], aug[i] = aug[i], aug[pivot_row]
                continue
            g, s, t = _xgcd(a, b)
            ag, bg = a // g, b // g
            p, q = aug[pivot_row], aug[i]
            aug[pivot_row] = [s * x + t * y for x, y in zip(p, q)]
            aug[i] = [bg * x - ag * y for x, y in zip(p, q)]
        if aug[pivot_row][col] != 0:
            pivot_row += 1
    basis = [row[r:] for row in aug[pivot_row:] if not any(row[:r])]
    if reduce and basis:
        basis = lll_reduce(basis)
    return [_normalize_sign(v) for v in basis]


def _normalize_sign(v: list[int]) -> list[int]:
    for x in v:
        if x:
            return v if x > 0 else [-y for y in v]
    return v


def matrix_rank(matrix: Matrix) -> int:
    """Rank over Q by fraction-free elimination."""
    m = [list(map(Fraction, r)) for r in matrix]
    if not m:
        return 0
    rank, ncols = 0, len(m[0])
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def _gram_schmidt(b: list[list[int]]):
    n = len(b)
    bstar: list[list[Fraction]] = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    norms: list[Fraction] = []
    for i in range(n):
        v = [Fraction(x) for x in b[i]]
        for j in range(i):
            if norms[j] == 0:
                continue
            mu[i][j] = sum(Fraction(x) * y for x, y in zip(b[i], bstar[j])) / norms[j]
            v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(sum(x * x for x in v))
    return bstar, mu, norms


def lll_reduce(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    """Textbook exact LLL. Intended for the small dimensions used here (< 10)."""
    b = [list(map(int, v)) for v in basis]
    n = len(b)
    if n <= 1:
        return b
    _, mu, norms = _gram_schmidt(b)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                for l in range(j):
                    mu[k][l] -= q * mu[j][l]
                mu[k][j] -= q
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            _, mu, norms = _gram_schmidt(b)
            k = max(k - 1, 1)
    return b


def gram_schmidt_norms(basis: Sequence[Sequence[int]]) -> list[Fraction]:
    """Squared Gram-Schmidt lengths ``|b_i*|^2`` of a basis."""
    return _gram_schmidt([list(map(int, v)) for v in basis])[2]
