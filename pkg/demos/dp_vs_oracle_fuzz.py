#!/usr/bin/env python3
"""
Fuzz the dynamic program against the brute-force oracle.

Draws seeded random chain forms, solves each with the O(N^4) recurrence,
and re-derives the optimum by enumerating every count vector.  Any
disagreement or invalid certificate aborts with the offending instance
printed, so a failure is immediately reproducible from the seed.
"""

import argparse
import time

from cochaincut import GenSpec, brute_force_multiplicity, cut_size, random_chain_forms
from cochaincut.dp import solve


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=300)
    parser.add_argument("--seed", type=int, default=20240817)
    parser.add_argument("--k-max", type=int, default=5)
    parser.add_argument("--mult-max", type=int, default=4)
    parser.add_argument("--state-cap", type=int, default=10**6)
    args = parser.parse_args()

    spec = GenSpec((0, args.k_max), (1, args.mult_max), seed=args.seed, trimmed_weight=0.25)
    checked = 0
    skipped = 0
    start = time.perf_counter()
    for form in random_chain_forms(spec, args.count):
        states = 1
        for v in form.m + form.m_prime:
            states *= v + 1
        if states > args.state_cap:
            skipped += 1
            continue
        solution = solve(form)
        confirmed = brute_force_multiplicity(form, limit=args.state_cap)
        ok = (
            solution.size == confirmed.size
            and cut_size(form, solution.cut) == solution.size
            and cut_size(form, confirmed.witness) == confirmed.size
        )
        if not ok:
            print(f"DISAGREEMENT on {form}: dp={solution.size} oracle={confirmed.size}")
            raise SystemExit(1)
        checked += 1
    elapsed = time.perf_counter() - start

    print(f"checked {checked} instances ({skipped} over the state cap), all agree")
    print(f"elapsed: {elapsed:.2f}s")


if __name__ == "__main__":
    main()
