"""Compare the compiled Laurent kernel against the pure-Python fallback.

Workloads mirror the hot paths: dense polynomial products, exact
division chains, and Bareiss determinants of presentation-matrix minors
(the step that dominates 11-crossing elementary-ideal computations).

Run:  python3 benchmarks/bench_kernel.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from quandlekit import _kernel_py

try:
    from quandlekit import _speedups
except ImportError:
    _speedups = None

from quandlekit.alexander import presentation_matrix
from quandlekit.diagram import catalog_get


def random_poly(rng, span, coeff=9):
    coeffs = [rng.randint(-coeff, coeff) for _ in range(span)]
    coeffs[0] = coeffs[0] or 1
    coeffs[-1] = coeffs[-1] or 1
    return (rng.randint(-3, 3), coeffs)


def bench_mul(impl, rng, repeat):
    polys = [random_poly(rng, rng.randint(3, 14)) for _ in range(200)]
    t0 = time.perf_counter()
    for _ in range(repeat):
        for i in range(0, len(polys) - 1):
            a, b = polys[i], polys[i + 1]
            impl.poly_mul(a[0], a[1], b[0], b[1])
    return time.perf_counter() - t0


def bench_divexact(impl, rng, repeat):
    pairs = []
    for _ in range(100):
        a = random_poly(rng, rng.randint(2, 8))
        b = random_poly(rng, rng.randint(2, 8))
        prod = _kernel_py.poly_mul(a[0], a[1], b[0], b[1])
        pairs.append((prod, b))
    t0 = time.perf_counter()
    for _ in range(repeat):
        for prod, b in pairs:
            impl.poly_divexact(prod[0], list(prod[1]), b[0], b[1])
    return time.perf_counter() - t0


def minor_entries(n_arcs=11, seed=5):
    """All corank-1 minors of an 11-crossing presentation matrix."""
    m = presentation_matrix(catalog_get("conway"))
    dense = [[m.entry(i, j).to_dense() for j in range(m.cols)]
             for i in range(m.rows)]
    minors = []
    size = m.cols - 1
    from itertools import combinations

    for rs in combinations(range(m.rows), size):
        for cs in combinations(range(m.cols), size):
            minors.append([dense[i][j] for i in rs for j in cs])
    return size, minors


def bench_minors(impl, size, minors, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        for entries in minors:
            impl.bareiss_det(size, entries)
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    impls = [("python", _kernel_py)]
    if _speedups is not None:
        impls.append(("c", _speedups))
    else:
        print("compiled kernel unavailable; timing the fallback only")

    rng_seed = 12345
    size, minors = minor_entries()
    print(f"workloads (repeat={args.repeat}): 200 poly products, "
          f"100 exact divisions, {len(minors)} minors of size {size}")
    results = {}
    for name, impl in impls:
        t_mul = bench_mul(impl, random.Random(rng_seed), args.repeat)
        t_div = bench_divexact(impl, random.Random(rng_seed), args.repeat)
        t_det = bench_minors(impl, size, minors, args.repeat)
        results[name] = (t_mul, t_div, t_det)
        print(f"{name:>7}: mul {t_mul * 1e3:8.1f} ms   "
              f"divexact {t_div * 1e3:8.1f} ms   "
              f"minors {t_det * 1e3:8.1f} ms")
    if len(results) == 2:
        py = results["python"]
        cc = results["c"]
        print("speedup: mul {:.1f}x   divexact {:.1f}x   minors {:.1f}x"
              .format(py[0] / cc[0], py[1] / cc[1], py[2] / cc[2]))


if __name__ == "__main__":
    main()
