#!/usr/bin/env python3
"""Run every identity suite with timings; exits non-zero if anything fails."""

import argparse
import sys
import time

from parkingfn.verify import SUITES


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("suites", nargs="*", default=list(SUITES))
    ap.add_argument("--max-n", type=int, default=None)
    args = ap.parse_args(argv)

    failed = 0
    for name in args.suites:
        start = time.perf_counter()
        res = SUITES[name](args.max_n)
        print(f"{res.summary():<40} {time.perf_counter() - start:7.2f}s", flush=True)
        for c in res.checks:
            if not c.ok:
                print(f"    FAIL {c.label} {c.detail}")
        failed += not res.passed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
