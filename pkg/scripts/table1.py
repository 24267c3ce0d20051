#!/usr/bin/env python3
"""Rebuild the 16-row table for n = 3 from the codes alone and diff it against the fixture."""

import argparse
import itertools
import sys

from parkingfn.trees import prufer_decode, prufer_to_pf_circular, tree_to_pf_bfs
from parkingfn.verify import load_table1


def word(t):
    return "".join(map(str, t))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3, help="non-root vertices (fixture exists for 3 only)")
    args = ap.parse_args(argv)

    fixture = {tuple(r["prufer"]): r for r in load_table1()["rows"]} if args.n == 3 else {}
    print("code  parent  repeats  leading  ones   match")
    mismatches = 0
    for code in itertools.product(range(args.n + 1), repeat=args.n - 1):
        T = prufer_decode(code, args.n)
        lead = prufer_to_pf_circular(code)
        ones = tree_to_pf_bfs(T)
        row = fixture.get(code)
        rep = word(row["pf_repeats"]) if row else "-"
        ok = row is None or (tuple(row["parent"]) == T.parent and tuple(row["pf_leading"]) == lead
                             and tuple(row["pf_ones"]) == ones)
        mismatches += not ok
        print(f"{word(code):<5} {word(T.parent):<7} {rep:<8} {word(lead):<8} {word(ones):<6} {'yes' if ok else 'NO'}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
