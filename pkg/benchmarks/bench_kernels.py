"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

from minkowski_balls import _kernels_py

try:
    from minkowski_balls import _kernels as _kernels_cy
except ImportError:
    _kernels_cy = None

CASES = {
    "min_lattice_norm(p=3, bound=40)": ("min_lattice_norm", (3.0, 1.0, 0.0, 0.5, 0.956, 40)),
    "hexagon_grid_max(p=3, steps=360)": ("hexagon_grid_max", (3.0, 360)),
    "count_level_set(n=4, c=2, m=30, box=5)": ("count_level_set", (4, 2.0, 30, 5)),
}


def best_time(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':42s} {'python [s]':>12s} {'cython [s]':>12s} {'speedup':>9s}")
    for label, (name, call) in CASES.items():
        t_py = best_time(getattr(_kernels_py, name), call, args.repeat)
        if _kernels_cy is None:
            print(f"{label:42s} {t_py:12.4f} {'n/a':>12s} {'n/a':>9s}")
            continue
        t_cy = best_time(getattr(_kernels_cy, name), call, args.repeat)
        print(f"{label:42s} {t_py:12.4f} {t_cy:12.6f} {t_py / t_cy:8.0f}x")


if __name__ == "__main__":
    main()
