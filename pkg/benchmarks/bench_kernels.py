"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--papers 20000] [--repeat 5]
"""
import argparse
import random
import timeit

from citeweight import _kernels_py

try:
    from citeweight import _kernels
except ImportError:
    _kernels = None


def workload(n_papers, seed=0):
    rng = random.Random(seed)
    nums = [int(rng.paretovariate(1.2)) for _ in range(n_papers)]
    dens = [rng.randint(1, 12) for _ in range(n_papers)]
    years = [rng.randint(1970, 2020) for _ in range(n_papers)]
    return years, nums, dens


def cases(mod, years, nums, dens):
    return {
        "h_from_pairs": lambda: mod.h_from_pairs(nums, dens),
        "count_at_least": lambda: mod.count_at_least(nums, dens, 10),
        "prefix_h": lambda: mod.prefix_h(years, nums, dens, 1970, 2020),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--papers", type=int, default=20_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    years, nums, dens = workload(args.papers)
    py = cases(_kernels_py, years, nums, dens)
    cy = cases(_kernels, years, nums, dens) if _kernels else {}
    print(f"{args.papers} papers, best of {args.repeat}")
    print(f"{'kernel':<16}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, fn in py.items():
        t_py = min(timeit.repeat(fn, number=1, repeat=args.repeat)) * 1e3
        if name in cy:
            assert cy[name]() == fn()
            t_cy = min(timeit.repeat(cy[name], number=1, repeat=args.repeat)) * 1e3
            print(f"{name:<16}{t_py:>12.2f}{t_cy:>12.2f}{t_py / t_cy:>9.1f}x")
        else:
            print(f"{name:<16}{t_py:>12.2f}{'n/a':>12}{'':>10}")


if __name__ == "__main__":
    main()
