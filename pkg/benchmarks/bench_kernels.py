"""Compare the compiled and pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 3]

Each workload runs on both backends; outputs are checked for equality
before timings are reported.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from biquandles import _pykernels as pure
from biquandles.braids import word_ops
from biquandles.catalog import builtin
from biquandles.core import identity_table

try:
    from biquandles import _kernels as compiled
except ImportError:          # extension not built
    compiled = None


def _best(fn, repeat: int):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads():
    pair = builtin("bigelow-pair").pair
    tables = pair.tables()
    b1, b2 = builtin("b1"), builtin("b2")
    yield ("solve_up, trivial down, n=5", lambda k: k.solve_up(identity_table(5)), len)
    yield ("admissible_downs n=3", lambda k: k.admissible_downs(3), len)
    yield ("count_fixed b1, 4^5 tuples", lambda k: k.count_fixed(tables, word_ops(b1, 5), 4, 5), int)
    yield ("count_fixed b2, 4^6 tuples", lambda k: k.count_fixed(tables, word_ops(b2, 6), 4, 6), int)
    X0 = np.random.default_rng(0).integers(0, 4, size=(20000, 6))
    ops = word_ops(b2, 6)

    def apply(k):
        X = X0.copy()
        k.apply_ops(X, tables, ops)
        return X
    yield ("apply_ops b2 on 20000 rows", apply, lambda X: X.tobytes())


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--heavy", action="store_true", help="add n=4 down scan and n=6 rack search")
    args = ap.parse_args()
    if compiled is None:
        print("compiled extension not available; only the pure kernels can run")
    rows = list(workloads())
    if args.heavy:
        rows.append(("admissible_downs n=4", lambda k: k.admissible_downs(4), len))
        rows.append(("solve_up, trivial down, n=6", lambda k: k.solve_up(identity_table(6)), len))
    print(f"{'workload':34s} {'pure [s]':>10s} {'compiled [s]':>13s} {'speedup':>8s}")
    for label, fn, digest in rows:
        tp, op = _best(lambda: fn(pure), args.repeat)
        if compiled is None:
            print(f"{label:34s} {tp:10.4f} {'-':>13s} {'-':>8s}")
            continue
        tc, oc = _best(lambda: fn(compiled), args.repeat)
        if digest(op) != digest(oc):
            raise SystemExit(f"backends disagree on {label}")
        print(f"{label:34s} {tp:10.4f} {tc:13.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
