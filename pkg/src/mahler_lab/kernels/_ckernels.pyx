# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 versions of the kernels in ``_pure``.

Arithmetic overflow raises OverflowError; the dispatcher then reruns the
pure-Python kernel, which works with unbounded integers.
"""

from cpython.array cimport array, clone
from libc.math cimport log, pow

cdef extern from *:
    """
    static inline int ml_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int ml_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int ml_mul(long long a, long long b, long long *r) nogil
    int ml_add(long long a, long long b, long long *r) nogil


cdef array _int64_template = array("q", [])
cdef array _double_template = array("d", [])


def regular_terms(int k, w, v, mats, Py_ssize_t count):
    cdef Py_ssize_t dim = len(v)
    cdef Py_ssize_t n, i, j, d, keep
    cdef long long acc, t
    if count <= 0:
        return []
    keep = count // k + 1

    cdef array wa = array("q", [int(x) for x in w])
    cdef array va = array("q", [int(x) for x in v])
    cdef array ma = array("q", [int(mats[d][i][j]) for d in range(k) for i in range(dim) for j in range(dim)])
    cdef array par = clone(_int64_template, keep * dim, zero=True)
    cdef array out = clone(_int64_template, count, zero=True)
    cdef long long[:] W = wa
    cdef long long[:] V = va
    cdef long long[:] M = ma
    cdef long long[:] P = par
    cdef long long[:] O = out
    cdef long long[64] u
    if dim > 64:
        raise OverflowError("dimension too large for the compiled kernel")

    cdef int bad = 0
    with nogil:
        for i in range(dim):
            P[i] = V[i]
        acc = 0
        for i in range(dim):
            bad |= ml_mul(W[i], V[i], &t)
            bad |= ml_add(acc, t, &acc)
        O[0] = acc
        for n in range(1, count):
            d = n % k
            for i in range(dim):
                acc = 0
                for j in range(dim):
                    bad |= ml_mul(M[(d * dim + i) * dim + j], P[(n // k) * dim + j], &t)
                    bad |= ml_add(acc, t, &acc)
                u[i] = acc
            if n < keep:
                for i in range(dim):
                    P[n * dim + i] = u[i]
            acc = 0
            for i in range(dim):
                bad |= ml_mul(W[i], u[i], &t)
                bad |= ml_add(acc, t, &acc)
            O[n] = acc
            if bad:
                break
    if bad:
        raise OverflowError("int64 overflow in regular_terms")
    return out.tolist()


def weighted_trace(terms, Py_ssize_t n_min, Py_ssize_t n_max, double exponent, int log_power):
    cdef Py_ssize_t n
    cdef array ta = array("q", terms[: n_max + 1])
    cdef long long[:] T = ta
    cdef long long s = 0
    cdef int bad = 0
    cdef Py_ssize_t size = n_max - n_min + 1
    cdef array wa = clone(_double_template, size, zero=False)
    cdef double[:] Wt = wa
    cdef double den
    with nogil:
        for n in range(n_min):
            bad |= ml_add(s, T[n], &s)
        for n in range(n_min, n_max + 1):
            bad |= ml_add(s, T[n], &s)
            den = pow(<double>n, exponent)
            if log_power:
                den *= pow(log(<double>n), log_power)
            Wt[n - n_min] = (<double>s) / den
    if bad:
        raise OverflowError("int64 overflow in weighted_trace")
    return list(range(n_min, n_max + 1)), wa.tolist()
