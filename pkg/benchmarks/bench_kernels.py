"""Benchmark the compiled integer kernels against the pure-Python ones.

Run:  python benchmarks/bench_kernels.py

Times the three hot loops on their real workloads: short-vector
enumeration on the order lattice (roots and the n<=4 shells), the 147456
signed block-permutation metric filter, and the 240^2 unit closure check.
"""

import sys
import time

from okubo_e8._kernels import _pykernels, prepare_enumeration

try:
    from okubo_e8 import _ckernels
except ImportError:
    _ckernels = None

from okubo_e8.algebras import OCT_TABLE
from okubo_e8.orders import cd_gram, units240
from okubo_e8.stabilizer import conductor_gram


def timed(fn, *args, repeat=3):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def bench_enum(bound):
    g = [list(r) for r in cd_gram()]
    plan = prepare_enumeration(g, bound)
    args_py = (plan.n, plan.weights, plan.pivots, plan.offsets, plan.bound_scaled)
    t_py, res_py = timed(_pykernels.enum_core, *args_py)
    row = [f"enumeration bound {bound}", f"{len(res_py)} vectors", f"{t_py:.4f}s"]
    if _ckernels is not None:
        args_c = (plan.n, list(plan.weights), list(plan.pivots),
                  [list(r) for r in plan.offsets], plan.bound_scaled)
        t_c, res_c = timed(_ckernels.enum_core, *args_c)
        assert sorted(res_c) == sorted(res_py)
        row += [f"{t_c:.4f}s", f"{t_py / t_c:.1f}x"]
    return row


def bench_metric():
    g = [list(r) for r in conductor_gram()]
    t_py, res_py = timed(_pykernels.metric_filter, g)
    row = ["metric filter (147456)", f"{len(res_py)} survivors", f"{t_py:.4f}s"]
    if _ckernels is not None:
        t_c, res_c = timed(_ckernels.metric_filter, g)
        assert sorted(res_c) == sorted(res_py)
        row += [f"{t_c:.4f}s", f"{t_py / t_c:.1f}x"]
    return row


def bench_closure():
    els, _ = units240()
    vecs2 = sorted(tuple(int(2 * c.rat) for c in e.coords) for e in els)
    t_py, res_py = timed(
        _pykernels.closure_check, vecs2, OCT_TABLE.idx, OCT_TABLE.sgn, repeat=1
    )
    row = ["unit closure (240^2)", f"failures {res_py}", f"{t_py:.4f}s"]
    if _ckernels is not None:
        t_c, res_c = timed(
            _ckernels.closure_check, vecs2, OCT_TABLE.idx, OCT_TABLE.sgn
        )
        assert res_c == res_py
        row += [f"{t_c:.4f}s", f"{t_py / t_c:.1f}x"]
    return row


def main():
    if _ckernels is None:
        print("compiled kernels unavailable; timing the Python backend only")
        header = ["workload", "result", "python"]
    else:
        header = ["workload", "result", "python", "cython", "speedup"]
    rows = [
        bench_enum(2),
        bench_enum(8),
        bench_metric(),
        bench_closure(),
    ]
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    for row in [header] + rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
