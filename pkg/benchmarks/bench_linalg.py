"""Compare the compiled and pure-Python echelon kernels.

    python3 benchmarks/bench_linalg.py [--sizes 8 16 32] [--repeat 5]

Matrices are random integer matrices of corank 2 with small entries, the
shape that dominates Hom/Ext computations. Both backends are checked to
return the same echelon form before timing.
"""

import argparse
import random
import timeit

from hercat import kernels


def corank_two(rng: random.Random, n: int) -> list[list[int]]:
    rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n - 2)]
    a, b = rng.randint(-2, 2), rng.randint(-2, 2)
    rows.append([a * x + b * y for x, y in zip(rows[0], rows[1])])
    rows.append([x - y for x, y in zip(rows[2], rows[3])])
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 48])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if kernels.BACKEND != "cython":
        print("compiled kernel not available; only the Python backend is timed")
    print(f"{'n':>4} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    rng = random.Random(args.seed)
    for n in args.sizes:
        m = corank_two(rng, n)
        assert kernels.echelon(m, n) == kernels.echelon_py(m, n)
        t_py = min(timeit.repeat(lambda: kernels.echelon_py(m, n), number=1, repeat=args.repeat))
        if kernels.BACKEND == "cython":
            t_cy = min(timeit.repeat(lambda: kernels.echelon(m, n), number=1, repeat=args.repeat))
            print(f"{n:>4} {t_py * 1e3:>10.2f} {t_cy * 1e3:>10.2f} {t_py / t_cy:>7.1f}x")
        else:
            print(f"{n:>4} {t_py * 1e3:>10.2f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
