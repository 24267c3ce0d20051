#!/usr/bin/env python3
"""Exact finite-m distances of the repeat/leading-element laws to Poisson and of unluckiness to the normal."""

import argparse
import sys

from parkingfn.distributions import limit_checks, limits_csv, ppf_limit_checks


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="25,50,100,200,400", help="comma-separated m values")
    ap.add_argument("--pairs", default="0:1,1:1,0:2,2:1", help="c:r pairs, k = c*m + r")
    ap.add_argument("--ppf", action="store_true", help="also tabulate the prime family")
    args = ap.parse_args(argv)

    sizes = sorted(int(s) for s in args.sizes.split(","))
    header = True
    for pair in args.pairs.split(","):
        c, r = (int(v) for v in pair.split(":"))
        text = limits_csv(limit_checks(sizes[-1], c, r, sizes[:-1]))
        sys.stdout.write(text if header else text.split("\n", 1)[1])
        header = False
    if args.ppf:
        text = limits_csv(ppf_limit_checks(sizes[-1], sizes[:-1]))
        sys.stdout.write(text.split("\n", 1)[1])
    return 0


if __name__ == "__main__":
    sys.exit(main())
