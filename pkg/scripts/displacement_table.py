#!/usr/bin/env python3
"""Per-car displacement laws for one street length, with the brute-force check alongside."""

import argparse
import sys

from parkingfn.distributions import avg_displacement, brute_displacement_law, displacement_pmf, rational_str


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--check", action="store_true", help="compare with exhaustive enumeration (n <= 7)")
    args = ap.parse_args(argv)

    print("car,k,prob" + (",brute_force_equal" if args.check else ""))
    for i in range(args.n):
        law = displacement_pmf(args.n, i)
        same = law == brute_displacement_law(args.n, args.n, i) if args.check else None
        for k, pr in zip(law.support, law.probs):
            print(f"{i + 1},{k},{rational_str(pr)}" + (f",{same}" if args.check else ""))
    print(f"# mean displacement per car: {rational_str(avg_displacement(args.n, args.n))}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
