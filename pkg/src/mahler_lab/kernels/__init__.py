"""Hot loops with a compiled backend and a pure-Python fallback.

The Cython extension is used when it was built and ``MAHLER_LAB_PURE_PYTHON``
is unset. Any int64 overflow in the compiled path transparently reruns the
exact pure-Python kernel.
"""

import os

from . import _pure

try:
    if os.environ.get("MAHLER_LAB_PURE_PYTHON"):
        raise ImportError("pure Python kernels requested")
    from . import _ckernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def _dispatch(name):
    pure = getattr(_pure, name)
    if _compiled is None:
        return pure
    fast = getattr(_compiled, name)

    def run(*args, **kwargs):
        try:
            return fast(*args, **kwargs)
        except OverflowError:
            return pure(*args, **kwargs)

    run.__name__ = name
    run.__doc__ = pure.__doc__
    return run


regular_terms = _dispatch("regular_terms")
weighted_trace = _dispatch("weighted_trace")

__all__ = ["BACKEND", "regular_terms", "weighted_trace"]
