"""Compare the compiled and pure-python row-reduction kernels.

Usage: python3 benchmarks/bench_rref.py [--repeats N]

Matrices are random over the default prime at shapes typical of the
derivative-space pipeline (rows = variables x current rank, columns =
monomial count of the next degree down).
"""

import argparse
import time

import numpy as np

from apolarity_lab.field import DEFAULT_PRIME
from apolarity_lab.linalg import KERNELS, rref

SHAPES = [(30, 60), (80, 200), (150, 500), (300, 1200), (400, 3000)]


def best_of(fn, repeats):
    out = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        out.append(time.perf_counter() - t0)
    return min(out)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    kernels = [name for name, impl in KERNELS.items() if impl is not None]
    print(f"kernels: {', '.join(kernels)}")
    header = f"{'shape':>12}  " + "  ".join(f"{k:>12}" for k in kernels)
    if len(kernels) == 2:
        header += f"  {'speedup':>8}"
    print(header)

    rng = np.random.default_rng(0)
    for rows, cols in SHAPES:
        mat = rng.integers(0, DEFAULT_PRIME, size=(rows, cols), dtype=np.int64)
        times = {}
        ranks = set()
        for name in kernels:
            times[name] = best_of(
                lambda: ranks.add(rref(mat, DEFAULT_PRIME, kernel=name).rank),
                args.repeats,
            )
        assert len(ranks) == 1, "kernels disagree on rank"
        line = f"{f'{rows}x{cols}':>12}  " + "  ".join(
            f"{times[k] * 1e3:>10.2f}ms" for k in kernels
        )
        if len(kernels) == 2:
            line += f"  {times['python'] / times['compiled']:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
