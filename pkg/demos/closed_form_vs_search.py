#!/usr/bin/env python3
"""
Tabulate the closed-form optimum against exhaustive pattern search.

For the all-ones skeletons the maximum cut has a constant-time closed
form built from a balanced block pattern.  This script prints both the
closed form and the full O(k^3) search over block patterns for each k,
plus the ratio value / k^2, which approaches 5/6 from above.
"""

import argparse
from fractions import Fraction

from cochaincut import closed_form_optimum, pattern_search


def run(max_k: int, trimmed: bool) -> None:
    variant = "trimmed" if trimmed else "full"
    print(f"variant: {variant}")
    print(f"{'k':>4}  {'pattern':>16}  {'value':>8}  {'search':>8}  {'value/k^2':>10}")
    for k in range(1, max_k + 1):
        pattern, value = closed_form_optimum(k, trimmed)
        _, searched = pattern_search(k, trimmed)
        status = "" if searched == value else "  MISMATCH"
        ratio = Fraction(value, k * k)
        pat = f"({pattern.x},{pattern.y},{pattern.z},{pattern.t})"
        print(f"{k:>4}  {pat:>16}  {value:>8}  {searched:>8}  {float(ratio):>10.5f}{status}")
        assert searched == value
    print(f"{'inf':>4}  {'':>16}  {'':>8}  {'':>8}  {5 / 6:>10.5f}  (limit)")
    print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=24, help="largest skeleton to tabulate")
    args = parser.parse_args()
    run(args.max_k, trimmed=False)
    run(args.max_k, trimmed=True)


if __name__ == "__main__":
    main()
