"""Run every pipeline over a seed range and tabulate pass rates.

    python3 scripts/run_acceptance_grid.py --seeds 50 --n 10
"""

import argparse
from collections import Counter
from fractions import Fraction

from finegrain.harness import PIPELINES, GenSpec, run_pipeline

LAMBDAS = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--t", type=int, default=4)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print(f"{'pipeline':<24} {'runs':>5} {'pass':>5} {'yes':>5}")
    for name in sorted(PIPELINES):
        tally = Counter()
        for seed in range(args.seeds):
            planted = ("yes", "no", "none")[seed % 3]
            spec = GenSpec("ov", n=args.n, planted=planted, seed=seed, t=args.t)
            rep = run_pipeline(name, spec, LAMBDAS[seed % 4], workers=args.workers)
            tally["runs"] += 1
            tally["pass"] += rep.passed
            tally["yes"] += bool(rep.direct)
            for f in rep.failures:
                print(f"  {name} seed={seed}: {f}")
        print(f"{name:<24} {tally['runs']:>5} {tally['pass']:>5} {tally['yes']:>5}")


if __name__ == "__main__":
    main()
