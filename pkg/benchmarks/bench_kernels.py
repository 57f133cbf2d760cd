"""Compare the compiled and pure-Python table kernels on real workloads.

Run as:  python3 benchmarks/bench_kernels.py
"""

import time
from array import array

from isgkit import kernels
from isgkit.core import symmetric_inverse_monoid


def _time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench(n):
    semigroup, _ = symmetric_inverse_monoid(n)
    m = len(semigroup)
    flat = semigroup._flat
    inv = semigroup._inv_arr
    rows = []
    for name in ("pure", "compiled"):
        try:
            impl = kernels.get_impl(name)
        except (ImportError, ValueError):
            continue
        assoc = _time(lambda: kernels.assoc_violation(flat, m, impl=impl))
        inverses = _time(lambda: kernels.inverse_table(flat, m, impl=impl))
        order = _time(lambda: kernels.order_matrix(flat, inv, m, impl=impl))

        def closure():
            parent = array("i", range(m))
            kernels.saturate(flat, m, parent, [(0, m - 1)], impl=impl)

        sat = _time(closure)
        rows.append((name, assoc, inverses, order, sat))
    print(f"\n|I_{n}| = {m}")
    print(f"{'backend':10s} {'assoc':>10s} {'inverses':>10s} {'order':>10s} {'saturate':>10s}")
    for name, assoc, inverses, order, sat in rows:
        print(
            f"{name:10s} {assoc * 1e3:9.2f}ms {inverses * 1e3:9.2f}ms"
            f" {order * 1e3:9.2f}ms {sat * 1e3:9.2f}ms"
        )
    if len(rows) == 2:
        speedups = [rows[0][i] / rows[1][i] for i in range(1, 5)]
        print(
            "speedup    "
            + " ".join(f"{s:9.1f}x" for s in speedups)
        )


if __name__ == "__main__":
    print(f"active backend: {kernels.BACKEND}")
    for n in (3, 4):
        bench(n)
