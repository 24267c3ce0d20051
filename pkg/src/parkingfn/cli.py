"""Command-line front end: generating polynomials, identity suites and exact laws.

Exit codes: 0 success, 1 an identity failed, 2 bad usage, 3 enumeration
space larger than the guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, List, Optional, Sequence, Tuple

from . import closed_forms as cf
from . import distributions as dist
from . import recurrences as rec
from .exactalg import VARS, Polynomial
from .oracle import GUARD, PF, PFU, PFmn, PPF, RK, UPF, DomainTooLarge, gf_over, gf_over_prob
from .verify import ALIASES, SUITES, resolve, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_stats(text: str) -> List[Tuple[str, str]]:
    """``"x=unl,y=dis"`` -> ``[("x", "unl"), ("y", "dis")]``."""
    out = []
    for part in filter(None, (s.strip() for s in text.split(","))):
        var, sep, stat = part.partition("=")
        if not sep or var not in VARS or not stat:
            raise UsageError(f"bad statistic binding {part!r}; expected var=stat with var in {','.join(VARS)}")
        out.append((var, stat))
    return out


def parse_u(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(a) for a in text.split(",") if a.strip())
    except ValueError as exc:
        raise UsageError(f"bad --u {text!r}") from exc


# -- formula tables ---------------------------------------------------------------
#
# Each entry: (statistics in the formula, the variable each one uses, builder).
# A request is served by the smallest entry whose statistics cover it; the
# unused ones are set to 1 and the rest renamed.

Entry = Tuple[Tuple[str, ...], Tuple[str, ...], Callable]


def _recurrence_table(family: str, args) -> List[Entry]:
    if family == "pf":
        if args.protocol == "prob":
            return [(("unl", "dis", "des", "rlm"), ("x", "y", "z", "w"), lambda: rec.Pp_rec(args.n))]
        return [
            (("dis",), ("q",), lambda: rec.kreweras_dis(args.n)),
            (("unl", "lel"), ("x", "y"), lambda: rec.pair_rec_lel(args.n)),
            (("unl", "one"), ("x", "y"), lambda: rec.pair_rec_one(args.n)),
            (("unl", "dis", "des", "rlm"), ("x", "y", "z", "w"), lambda: rec.P_rec(args.n)),
        ]
    if family == "pfmn":
        fn = rec.Pp_mn_rec if args.protocol == "prob" else rec.P_mn_rec
        return [(("unl", "dis", "des", "rlm"), ("x", "y", "z", "w"), lambda: fn(args.m, args.n))]
    if family == "upf":
        return [(("unl",), ("y",), lambda: rec.upf_rec(args.n))]
    if family == "u":
        u = args.u_vec
        return [
            (("unl",), ("x",), lambda: rec.u_rec_A(u)),
            (("one",), ("y",), lambda: rec.u_rec_B(u)),
            (("lel",), ("z",), lambda: rec.u_rec_C(u)),
        ]
    return []


def _closed_table(family: str, args) -> List[Entry]:
    n = args.n
    if family == "pf":
        out = [
            (("lucky",), ("q",), lambda: cf.lucky_gf(n)),
            (("rep",), ("q",), lambda: cf.rep_gf(n)),
            (("unl",), ("x",), lambda: cf.unl_gf(n)),
            (("one",), ("y",), lambda: cf.ones_gf(n)),
            (("lel",), ("y",), lambda: cf.ones_gf(n)),
            (("unl", "lel"), ("x", "y"), lambda: cf.pair_gf(n)),
            (("unl", "one"), ("x", "y"), lambda: cf.pair_gf(n)),
            (("unl", "rep"), ("x", "y"), lambda: cf.rk_unl_rep_gf(n, 1, 1)),
        ]
        if n >= 2:
            out += [
                (("lel", "one", "unl"), ("x", "y", "z"), lambda: cf.master_gf(n)),
                (("nlel", "one", "unl"), ("x", "y", "z"), lambda: cf.correspondence_gf(n)),
                (("lel", "nlel", "unl"), ("x", "y", "z"), lambda: cf.contrast_gf(n)),
            ]
        return out
    if family == "pfmn":
        return [(("unl",), ("x",), lambda: cf.gessel_seo_unl(args.m, n))]
    if family == "rk":
        m, r, k = args.m, args.r, args.k
        out = [
            (("unl", "rep"), ("x", "y"), lambda: cf.rk_unl_rep_gf(m, r, k)),
            (("unl", "lel"), ("x", "y"), lambda: cf.rk_unl_lel_gf(m, r, k)),
        ]
        if m >= 2:
            out.append((("unl", "eq2"), ("x", "y"), lambda: cf.rk_unl_lel_gf(m, r, k)))
        out += [((f"eq{s}",), ("y",), lambda: cf.rk_same_as_gf(m, r, k)) for s in range(1, m + 1)]
        return out
    if family == "ppf":
        out = [
            (("unl", "rep"), ("x", "y"), lambda: cf.ppf_unl_rep_gf(n)),
            (("unl", "lel"), ("x", "y"), lambda: cf.ppf_unl_lel_gf(n)),
        ]
        out += [((f"eq{s}",), ("y",), lambda: cf.ppf_same_as_gf(n)) for s in range(1, n + 1)]
        if n >= 2:
            out += [
                (("one",), ("y",), lambda: cf.ppf_one_gf(n)),
                (("lel", "one"), ("x", "y"), lambda: cf.ppf_lel_one_gf(n)),
            ]
        return out
    if family == "upf":
        return [(("unl",), ("y",), lambda: cf.upf_closed(n))]
    return []


def from_table(table: Sequence[Entry], stats: Sequence[Tuple[str, str]]) -> Polynomial:
    wanted = {s for _, s in stats}
    fits = [e for e in table if wanted <= set(e[0])]
    if not fits:
        raise UsageError(f"no formula for statistics {sorted(wanted)} here")
    names, canon, build = min(fits, key=lambda e: len(e[0]))
    target = {}
    for var, stat in stats:
        if stat in target:
            raise UsageError(f"statistic {stat} bound twice")
        target[stat] = var
    bindings = {
        cv: (Polynomial.var(target[name]) if name in target else 1)
        for name, cv in zip(names, canon)
    }
    return build().subst(bindings)


# -- commands ------------------------------------------------------------------

def _domain(args):
    fam = args.family
    if fam == "pf":
        return PF(args.n)
    if fam == "pfmn":
        return PFmn(args.m, args.n)
    if fam == "rk":
        return RK(args.m, args.r, args.k)
    if fam == "ppf":
        return PPF(args.n)
    if fam == "upf":
        return UPF(args.n)
    return PFU(args.u_vec)


REQUIRED = {
    "pf": ("n",),
    "pfmn": ("m", "n"),
    "rk": ("m", "r", "k"),
    "ppf": ("n",),
    "upf": ("n",),
    "u": ("u",),
}


def _check_params(args) -> None:
    for name in REQUIRED[args.family]:
        if getattr(args, name) is None:
            raise UsageError(f"--family {args.family} needs --{name}")
    for name in ("n", "m"):
        val = getattr(args, name)
        if val is not None and val < 0:
            raise UsageError(f"--{name} must be non-negative")
    for name in ("r", "k"):
        val = getattr(args, name)
        if val is not None and val < 1:
            raise UsageError(f"--{name} must be positive")
    if args.family == "pfmn" and args.m > args.n:
        raise UsageError("need m <= n")
    args.u_vec = parse_u(args.u) if args.u is not None else ()
    if args.family == "u":
        u = args.u_vec
        if any(a >= b for a, b in zip(u, u[1:])) or (u and u[0] < 1):
            raise UsageError("--u must be strictly increasing and positive")


def compute_gf(args) -> Polynomial:
    _check_params(args)
    stats = parse_stats(args.stats)
    if args.method == "oracle":
        dom = _domain(args)
        if args.protocol == "prob":
            if args.family in ("ppf", "upf"):
                raise UsageError(f"no probabilistic model for {args.family}")
            return gf_over_prob(dom, stats, guard=args.guard)
        return gf_over(dom, stats, guard=args.guard)
    if args.method == "recurrence":
        table = _recurrence_table(args.family, args)
    else:
        if args.protocol == "prob" and args.family not in ("rk", "pfmn"):
            raise UsageError("closed forms with --protocol prob exist for rk and pfmn only")
        table = _closed_table(args.family, args)
    if not table:
        raise UsageError(f"no {args.method} formulas for family {args.family}")
    return from_table(table, stats)


def cmd_gf(args) -> int:
    poly = compute_gf(args)
    if args.format == "json":
        print(poly.to_json())
    else:
        print(poly.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if not args.suites or args.suites == ["all"] else args.suites
    for name in names:
        try:
            resolve(name)
        except KeyError:
            known = ", ".join(list(SUITES) + sorted(ALIASES))
            raise UsageError(f"unknown suite {name!r}; known: {known}")
    results = run_suites(names, args.max_n)
    if args.format == "json":
        payload = [
            {"suite": r.name, "passed": r.passed,
             "checks": [{"label": c.label, "ok": c.ok, "detail": c.detail} for c in r.checks]}
            for r in results
        ]
        print(json.dumps(payload, indent=1))
    else:
        for r in results:
            print(r.summary())
            for c in r.checks:
                if args.verbose or not c.ok:
                    mark = "ok  " if c.ok else "FAIL"
                    extra = f" ({c.detail})" if c.detail else ""
                    print(f"  {mark} {c.label}{extra}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_dist(args) -> int:
    if args.limits:
        m = args.m if args.m is not None else 200
        ladder = [int(a) for a in args.ladder.split(",")] if args.ladder else [m // 4, m // 2]
        ladder = [s for s in ladder if 1 <= s < m]
        if args.family == "ppf":
            if m < 2:
                raise UsageError("prime family needs --m >= 2")
            report = dist.ppf_limit_checks(m, ladder)
        else:
            c = args.c if args.c is not None else 0
            r = args.r if args.r is not None else 1
            if m < 1 or c < 0 or r < 1:
                raise UsageError("need m >= 1, c >= 0, r >= 1")
            report = dist.limit_checks(m, c, r, ladder)
        sys.stdout.write(dist.limits_csv(report))
        return EXIT_OK
    kind = args.pmf
    if kind is None:
        raise UsageError("give --pmf or --limits")
    try:
        if kind == "displacement":
            if args.n is None or args.i is None:
                raise UsageError("--pmf displacement needs --n and --i")
            law = dist.displacement_pmf(args.n, args.i)
            sys.stdout.write(dist.pmf_csv(law, ("k", "prob")))
        elif kind == "unlucky":
            if args.n is None:
                raise UsageError("--pmf unlucky needs --n")
            rows = ["i,prob"] + [f"{i},{dist.rational_str(dist.unlucky_prob(args.n, i))}" for i in range(args.n)]
            sys.stdout.write("\n".join(rows) + "\n")
        elif kind == "ur":
            if None in (args.m, args.r, args.k):
                raise UsageError("--pmf ur needs --m, --r and --k")
            sys.stdout.write(dist.pmf_csv(dist.exact_UR_law(args.m, args.r, args.k), ("u", "r", "prob")))
        else:
            if args.n is None:
                raise UsageError("--pmf ppf-ur needs --n")
            sys.stdout.write(dist.pmf_csv(dist.ppf_UR_law(args.n), ("u", "r", "prob")))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parkingfn", description="Exact enumerators for parking functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gf", help="print a generating polynomial")
    g.add_argument("--family", choices=sorted(REQUIRED), default="pf")
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--r", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--u", help="comma-separated strictly increasing vector")
    g.add_argument("--stats", default="x=unl,y=dis,z=des,w=rlm", help="bindings var=stat, comma separated")
    g.add_argument("--method", choices=("oracle", "recurrence", "closed"), default="oracle")
    g.add_argument("--protocol", choices=("det", "prob"), default="det",
                   help="prob weights each outcome by its coin-flip probability in p")
    g.add_argument("--format", choices=("json", "text"), default="json")
    g.add_argument("--guard", type=int, default=GUARD, help="largest search space the oracle will walk")
    g.set_defaults(func=cmd_gf)

    v = sub.add_parser("verify", help="run identity suites")
    v.add_argument("suites", nargs="*", help="suite names or 'all'")
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--verbose", "-v", action="store_true")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dist", help="exact laws and limit distances as CSV")
    d.add_argument("--pmf", choices=("displacement", "unlucky", "ur", "ppf-ur"))
    d.add_argument("--limits", action="store_true")
    d.add_argument("--family", choices=("rk", "ppf"), default="rk")
    d.add_argument("--n", type=int)
    d.add_argument("--i", type=int)
    d.add_argument("--m", type=int)
    d.add_argument("--c", type=int)
    d.add_argument("--r", type=int)
    d.add_argument("--k", type=int)
    d.add_argument("--ladder", help="smaller sizes to compare against, comma separated")
    d.set_defaults(func=cmd_dist)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"parkingfn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainTooLarge as exc:
        print(f"parkingfn: too large: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
