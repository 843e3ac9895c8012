"""Exact proportion of hyperbolic diagrams among 2×n and n×n weaves.

The 2×n column should stay below (1/2)^n; the n×n column is expected to
climb towards 1, but only slowly at the sizes reachable here.

    python scripts/proportion_trend.py 4
"""
import argparse

from weaves.census import proportion_trend


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("max_n", type=int, nargs="?", default=4)
    args = ap.parse_args()
    print(f"{'n':>2}  {'hyp(2,n)/2^2n':>16} {'bound':>8}  {'hyp(n,n)/2^(n^2)':>22}")
    for t in proportion_trend(args.max_n):
        print(f"{t.n:>2}  {str(t.fixed_m_ratio):>16} {str(t.fixed_m_bound):>8}  "
              f"{str(t.square_ratio):>14} = {float(t.square_ratio):.4f}")


if __name__ == "__main__":
    main()
