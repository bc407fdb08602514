"""Time the Python and compiled search kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from sgcrit import kernels
from sgcrit.constructions import W_HAT, build_critical, g2k1
from sgcrit.criticality import is_critical_C4
from sgcrit.homsolver import C4, hom_C4, hom_to_target

WORKLOADS = {
    "hom_C4 build_critical(45)": lambda: hom_C4(build_critical(45)),
    "hom_to_target W-hat": lambda: hom_to_target(W_HAT, C4),
    "hom_to_target G_15": lambda: hom_to_target(g2k1(2), C4),
    "is_critical build_critical(30)": lambda: is_critical_C4(build_critical(30)),
}


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = [b.NAME for b in kernels.backends()]
    print(f"{'workload':34s}" + "".join(f"{n:>12s}" for n in names) + "     speedup")
    for label, fn in WORKLOADS.items():
        row = []
        for name in names:
            kernels.use_backend(name)
            row.append(best_of(fn, args.repeat))
        speed = f"{row[0] / row[-1]:10.1f}x" if len(row) > 1 else "         -"
        print(f"{label:34s}" + "".join(f"{t * 1e3:10.2f}ms" for t in row) + speed)


if __name__ == "__main__":
    main()
