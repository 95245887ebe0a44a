"""Print the excluded (gamma, beta) frontier for a few source hypotheses.

For each gamma the row lists the largest excluded beta for running times
``n^gamma + ell^beta`` and for ``ell^beta``-size kernels.
"""

import argparse
from fractions import Fraction

from finegrain.framework import cor25_kernel_beta_max, thm24_beta_max

SOURCES = {
    # name: (alpha, xi of the target's decider)
    "OV -> LCS": (2, 2),
    "NegTriangle -> 2nd shortest path": (3, 3),
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--steps", type=int, default=8, help="gamma grid points in (1, 2)")
    args = ap.parse_args()
    gammas = [1 + Fraction(i, args.steps) for i in range(1, args.steps)]
    for name, (alpha, xi) in SOURCES.items():
        print(f"# {name} (alpha={alpha}, xi={xi})")
        print(f"{'gamma':>8} {'beta_max':>10} {'kernel':>10}")
        for g in gammas:
            b = thm24_beta_max(alpha, g)
            kb = cor25_kernel_beta_max(alpha, g, xi=xi)
            print(f"{str(g):>8} {str(b):>10} {str(kb):>10}")
        print()


if __name__ == "__main__":
    main()
