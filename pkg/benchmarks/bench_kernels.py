"""Compare the compiled and pure-Python inertia/determinant kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--seed 1]

Workloads: random dense symmetric matrices of a few sizes, and the pre-slide
linking forms of the Honda diagrams for a range of (g, n).
"""

import argparse
import random
import sys
import timeit

from contactd3 import _kernels_py
from contactd3.circle_bundle import honda_four_manifold

try:
    from contactd3 import _kernels
except ImportError:
    _kernels = None


def random_symmetric(rng, n, bound):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = rng.randint(-bound, bound)
    return a


def workloads(seed):
    rng = random.Random(seed)
    for n in (4, 8, 12):
        yield f"random {n}x{n}", [random_symmetric(rng, n, 3) for _ in range(200)]
    honda = [honda_four_manifold(g, n).Q.to_int_rows()
             for g in range(1, 5) for n in range(2 * g, 2 * g + 25)]
    yield f"honda forms ({len(honda)})", honda


def time_kernel(fn, mats, repeat):
    def run():
        for m in mats:
            fn(m)
    return min(timeit.repeat(run, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'workload':<22}{'kernel':<9}{'python ms':>11}{'compiled ms':>13}{'speedup':>9}")
    for name, mats in workloads(args.seed):
        for kname in ("int_inertia", "int_det"):
            py, c = getattr(_kernels_py, kname), getattr(_kernels, kname)
            ok = []
            for m in mats:
                try:
                    ok.append(c(m) == py(m))
                except OverflowError:
                    pass
            if not all(ok):
                print(f"kernel mismatch on {name}/{kname}", file=sys.stderr)
                return 2
            t_py = time_kernel(py, mats, args.repeat)
            t_c = time_kernel(lambda m: _safe(c, m), mats, args.repeat)
            print(f"{name:<22}{kname[4:]:<9}{t_py * 1e3:>11.2f}{t_c * 1e3:>13.2f}"
                  f"{t_py / t_c:>8.1f}x")
    return 0


def _safe(fn, m):
    try:
        return fn(m)
    except OverflowError:
        return None


if __name__ == "__main__":
    sys.exit(main())
