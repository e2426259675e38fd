"""Compare the compiled and pure-Python kernels on catalog representations.

    python benchmarks/bench_kernels.py --log2n 20 --repeat 3
"""

import argparse
import json
import math
import time

from mahler_lab import catalog
from mahler_lab.kernels import _pure

try:
    from mahler_lab.kernels import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def bench(name, count, repeat):
    rep = catalog.get(name).representation
    args = (rep.k, rep.w, rep.v, rep.matrices, count)
    rows = []
    t_py, terms_py = best_of(lambda: _pure.regular_terms(*args), repeat)
    row = {"entry": name, "kernel": "regular_terms", "n": count, "python_s": t_py}
    if _ckernels is not None:
        t_c, terms_c = best_of(lambda: _ckernels.regular_terms(*args), repeat)
        assert terms_c == terms_py, "backends disagree"
        row.update(cython_s=t_c, speedup=t_py / t_c)
    rows.append(row)

    expo = math.log(3) / math.log(2)
    lo, hi = count // 2, count - 1
    t_py, trace_py = best_of(lambda: _pure.weighted_trace(terms_py, lo, hi, expo, 0), repeat)
    row = {"entry": name, "kernel": "weighted_trace", "n": hi - lo + 1, "python_s": t_py}
    if _ckernels is not None:
        t_c, trace_c = best_of(lambda: _ckernels.weighted_trace(terms_py, lo, hi, expo, 0), repeat)
        assert trace_c[0] == trace_py[0]
        assert max(abs(a - b) / abs(b) for a, b in zip(trace_c[1], trace_py[1]) if b) < 1e-12
        row.update(cython_s=t_c, speedup=t_py / t_c)
    rows.append(row)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--log2n", type=int, default=18)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--entries", nargs="+", default=["stern", "baum-sweet", "dilcher-stolarsky"])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = []
    for name in args.entries:
        rows += bench(name, 2**args.log2n, args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    if _ckernels is None:
        print("compiled kernels not built; showing pure Python timings only")
    print(f"{'entry':<20}{'kernel':<16}{'n':>9}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for r in rows:
        c = f"{r['cython_s']:>11.4f}{r['speedup']:>9.1f}" if "cython_s" in r else ""
        print(f"{r['entry']:<20}{r['kernel']:<16}{r['n']:>9}{r['python_s']:>11.4f}{c}")


if __name__ == "__main__":
    main()
