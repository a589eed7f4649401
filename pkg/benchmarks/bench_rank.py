"""Benchmark the compiled elimination kernel against the pure-Python one.

Run from the repository root:

    python3 benchmarks/bench_rank.py [--size N] [--trials T]

Both kernels compute integer matrix rank by Bareiss fraction-free
elimination on the same random inputs; the script reports wall time per
call and the speedup of the compiled path.
"""

import argparse
import random
import time

from novikov import _elim_pure

try:
    from novikov import _elim
except ImportError:
    _elim = None


def bench(fn, matrices, ncols):
    start = time.perf_counter()
    ranks = [fn(m, ncols) for m in matrices]
    return time.perf_counter() - start, ranks


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=60, help="matrix dimension")
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    n = args.size
    matrices = [[[rng.randint(-50, 50) for _ in range(n)] for _ in range(n)]
                for _ in range(args.trials)]

    t_pure, r_pure = bench(_elim_pure.rank_int, matrices, n)
    print(f"pure-python: {t_pure / args.trials * 1000:8.2f} ms/call "
          f"({args.trials} calls, {n}x{n})")
    if _elim is None:
        print("cython kernel not built; only the fallback was timed")
        return
    t_cy, r_cy = bench(_elim.rank_int, matrices, n)
    assert r_pure == r_cy, "kernels disagree on ranks"
    print(f"cython:      {t_cy / args.trials * 1000:8.2f} ms/call")
    print(f"speedup:     {t_pure / t_cy:8.2f}x")


if __name__ == "__main__":
    main()
