import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mahler_lab import catalog, kernels
from mahler_lab.kernels import _pure

try:
    from mahler_lab.kernels import _ckernels
except ImportError:
    _ckernels = None

needs_compiled = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


@st.composite
def term_args(draw):
    k = draw(st.integers(2, 5))
    dim = draw(st.integers(1, 4))
    entry = st.integers(-3, 3)
    mats = tuple(
        tuple(tuple(draw(entry) for _ in range(dim)) for _ in range(dim)) for _ in range(k)
    )
    w = tuple(draw(entry) for _ in range(dim))
    v = tuple(draw(entry) for _ in range(dim))
    return k, w, v, mats, draw(st.integers(0, 300))


@needs_compiled
@given(term_args())
def test_compiled_terms_equal_pure_terms(args):
    assert kernels.regular_terms(*args) == _pure.regular_terms(*args)


@needs_compiled
@given(
    st.lists(st.integers(0, 10**6), min_size=2, max_size=400),
    st.floats(0.1, 3.0),
    st.integers(0, 2),
)
def test_compiled_trace_matches_pure(vals, exponent, m):
    n_max = len(vals) - 1
    n_min = 2
    if n_min > n_max:
        return
    Ns_c, ws_c = _ckernels.weighted_trace(vals, n_min, n_max, exponent, m)
    Ns_p, ws_p = _pure.weighted_trace(vals, n_min, n_max, exponent, m)
    assert list(Ns_c) == list(Ns_p)
    assert all(abs(a - b) <= 1e-12 * abs(b) for a, b in zip(ws_c, ws_p))


def test_overflow_falls_back_to_exact_integers():
    # f(2^l) = 10^l overflows int64 at l = 19
    k, w, v = 2, (1,), (1,)
    mats = (((10,),), ((1,),))
    vals = kernels.regular_terms(k, w, v, mats, 2**20 + 1)
    assert vals[2**20] == 10**20
    assert vals == _pure.regular_terms(k, w, v, mats, 2**20 + 1)


def test_pure_python_can_be_forced():
    env = dict(os.environ, MAHLER_LAB_PURE_PYTHON="1")
    code = (
        "from mahler_lab import kernels, catalog\n"
        "from mahler_lab.regular import terms\n"
        "print(kernels.BACKEND, terms(catalog.get('stern').representation, 10))"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python [0, 1, 1, 2, 1, 3, 2, 3, 1, 4]"


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")
    if not os.environ.get("MAHLER_LAB_PURE_PYTHON"):
        assert (kernels.BACKEND == "cython") == (_ckernels is not None)


@pytest.mark.parametrize("name", ["stern", "baum-sweet", "dilcher-stolarsky"])
def test_backends_agree_on_catalog(name):
    rep = catalog.get(name).representation
    args = (rep.k, rep.w, rep.v, rep.matrices, 2**12)
    assert kernels.regular_terms(*args) == _pure.regular_terms(*args)
