"""Reference implementations of the hot loops, in plain Python integers.

These never overflow and define the semantics the compiled kernels must match.
"""

from math import log


def regular_terms(k, w, v, mats, count):
    """f(0), ..., f(count-1) of a linear representation.

    Uses u(n) = A_{n mod k} u(n div k) with u(0) = v, which is the least
    significant digit's matrix leftmost; only parents (n < count/k) are kept.
    """
    if count <= 0:
        return []
    dim = len(v)
    rng = range(dim)
    keep = count // k + 1
    parents = [tuple(v)]
    out = [sum(w[i] * v[i] for i in rng)]
    for n in range(1, count):
        A = mats[n % k]
        p = parents[n // k]
        u = tuple(sum(A[i][j] * p[j] for j in rng) for i in rng)
        if n < keep:
            parents.append(u)
        out.append(sum(w[i] * u[i] for i in rng))
    return out


def weighted_trace(terms, n_min, n_max, exponent, log_power):
    """(N, S(N) / (N**exponent * log(N)**log_power)) for n_min <= N <= n_max,
    where S(N) is the partial sum of terms[0..N]."""
    s = 0
    for n in range(n_min):
        s += terms[n]
    out_n, out_w = [], []
    for n in range(n_min, n_max + 1):
        s += terms[n]
        den = n**exponent
        if log_power:
            den *= log(n) ** log_power
        out_n.append(n)
        out_w.append(s / den)
    return out_n, out_w
