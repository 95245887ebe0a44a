"""Measure log-log runtime slopes for the benchmarked solvers.

    python3 scripts/bench_envelopes.py --reps 5
"""

import argparse

from finegrain.harness import bench_envelope

RUNS = [
    ("lcs_threshold", dict(grid=[20_000, 40_000, 80_000], fixed=16)),
    ("lcs_threshold", dict(grid=[8, 16, 32, 64], fixed=20_000, axis="ell")),
    ("lcs_dp", dict(grid=[2000, 4000, 8000])),
    ("frechet_dp", dict(grid=[500, 1000, 2000])),
    ("frechet_banded", dict(grid=[20_000, 40_000, 80_000], fixed=16)),
    ("frechet_banded", dict(grid=[8, 16, 32], fixed=20_000, axis="ell")),
    ("neg-triangle-components", dict(grid=[50, 100, 200], fixed=12)),
    ("tricol-components", dict(grid=[50, 100, 200], fixed=12)),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=3)
    args = ap.parse_args()
    for algo, kw in RUNS:
        table = bench_envelope(algo, repetitions=args.reps, **kw)
        cells = " ".join(f"{x}:{m * 1e3:.2f}ms" for x, m in zip(table.xs, table.medians))
        print(f"{algo:<24} axis={table.axis:<3} slope={table.slope:5.2f} theory={table.theory}  {cells}")


if __name__ == "__main__":
    main()
