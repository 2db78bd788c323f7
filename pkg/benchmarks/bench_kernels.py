"""
Numba vs numpy timings for the permutation / word statistic kernels.

    python3 benchmarks/bench_kernels.py [--n 9] [--repeat 5]

Both backends are checked for identical output before timing.  The numba
numbers exclude the first (compiling) call.
"""

import argparse
import timeit

import numpy as np

from zerohecke import _kernels


def workloads(n: int, k: int):
    perms = _kernels.perm_array(n)
    words = _kernels.word_array(n - 2, k)
    yield "inversions", perms, ()
    yield "descent_masks", perms, ()
    yield "inverse_rows", perms, ()
    yield "prime_counts", words, (k,)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("--n", type=int, default=9)
    parser.add_argument("--k", type=int, default=4)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if _kernels.numba_kernels is None:
        raise SystemExit("numba backend unavailable (ZEROHECKE_DISABLE_NUMBA set or numba missing)")

    print(f"{'kernel':<15}{'rows':>10}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for name, rows, extra in workloads(args.n, args.k):
        np_fn = _kernels.numpy_kernels[name]
        nb_fn = _kernels.numba_kernels[name]
        expected = np_fn(rows, *extra)
        if not np.array_equal(nb_fn(rows, *extra), expected):
            raise SystemExit(f"{name}: backends disagree")
        t_np = min(timeit.repeat(lambda: np_fn(rows, *extra), number=1, repeat=args.repeat))
        t_nb = min(timeit.repeat(lambda: nb_fn(rows, *extra), number=1, repeat=args.repeat))
        print(f"{name:<15}{len(rows):>10}{t_np * 1e3:>12.2f}{t_nb * 1e3:>12.2f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
