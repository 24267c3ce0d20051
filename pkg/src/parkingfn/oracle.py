"""Brute-force generating polynomials over explicit preference spaces.

This is the ground truth for every recurrence and product formula: it walks
the whole preference space, simulates the protocol, and adds one monomial per
qualifying vector (or per successful coin-flip branch).
"""

from __future__ import annotations

import os
import re
from functools import lru_cache
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence, Tuple

from .exactalg import NVARS, VARS, Polynomial, from_counts, poly_sum
from .parking import (
    is_parking_function,
    is_prime,
    is_u_parking,
    park_deterministic,
    rk_vector,
    stats_from,
    PrefVector,
)
from .probabilistic import branch_weight

GUARD = 10 ** 8
PARALLEL_THRESHOLD = 200_000
WORKERS_ENV = "PARKINGFN_WORKERS"


class DomainTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class Domain:
    """A family of preference vectors together with the space it is searched in.

    ``kind`` is one of ``pf``, ``pfmn``, ``rk``, ``ppf``, ``upf``, ``u``.
    Vectors range over ``[base]^length``; cars park on ``spots`` spaces.
    """

    kind: str
    length: int
    base: int
    spots: int
    u: Tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return self.base ** self.length

    def accepts(self, prefs: Sequence[int]) -> bool:
        kind = self.kind
        if kind == "pf":
            return is_parking_function(prefs)
        if kind == "ppf":
            return is_prime(prefs)
        if kind in ("rk", "u", "pfmn"):
            return is_u_parking(prefs, self.u)
        if kind == "upf":
            if not is_parking_function(prefs):
                return False
            out = park_deterministic(PrefVector(tuple(prefs), self.spots))
            return all(b - a <= 1 for a, b in zip(prefs, out.occupied))
        raise ValueError(kind)

    def accepts_outcome(self, occupied: Sequence[int]) -> bool:
        """Success event for a probabilistic branch that parked every car."""
        if self.kind in ("pf", "pfmn"):
            return True
        if self.kind in ("rk", "u"):
            return all(s <= c for s, c in zip(sorted(occupied), self.u))
        raise ValueError(f"no probabilistic model for {self.kind}")


def PF(n: int) -> Domain:
    return Domain("pf", n, max(n, 1), n)


def PFmn(m: int, n: int) -> Domain:
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    # PF(m, n) is the u-parking family with u_i = n - m + i
    return Domain("pfmn", m, n, n, tuple(n - m + i for i in range(1, m + 1)))


def RK(m: int, r: int, k: int) -> Domain:
    u = rk_vector(m, r, k)
    return Domain("rk", m, u[-1] if u else 1, u[-1] if u else 0, u)


def PPF(n: int) -> Domain:
    return Domain("ppf", n, max(n, 1), n)


def UPF(n: int) -> Domain:
    return Domain("upf", n, max(n, 1), n)


def PFU(u: Sequence[int]) -> Domain:
    u = tuple(u)
    if any(a >= b for a, b in zip(u, u[1:])) or (u and u[0] < 1):
        raise ValueError("u must be a strictly increasing positive vector")
    return Domain("u", len(u), u[-1] if u else 1, u[-1] if u else 0, u)


# -- statistics --------------------------------------------------------------

_EQ = re.compile(r"eq(\d+)$")
_DISP = re.compile(r"disp(\d+)$")
_UNLI = re.compile(r"unl(\d+)$")
_PREF = re.compile(r"a(\d+)$")


def stat_getter(name: str) -> Callable:
    """Map a statistic name to ``f(prefs, record) -> int``.

    Beyond the record fields, ``eq<s>`` counts entries equal to the s-th
    preference, ``disp<i>`` is car i's displacement and ``unl<i>`` flags
    whether car i missed its spot and ``a<i>`` is car i's preference.
    """
    m = _EQ.match(name)
    if m:
        s = int(m.group(1)) - 1
        return lambda prefs, rec: prefs.count(prefs[s])
    m = _DISP.match(name)
    if m:
        i = int(m.group(1)) - 1
        return lambda prefs, rec: rec.per_car_displacement[i]
    m = _UNLI.match(name)
    if m:
        i = int(m.group(1)) - 1
        return lambda prefs, rec: 1 if rec.per_car_displacement[i] else 0
    m = _PREF.match(name)
    if m:
        i = int(m.group(1)) - 1
        return lambda prefs, rec: prefs[i]
    return lambda prefs, rec: getattr(rec, name)


def _weight_spec(weights):
    spec = []
    for var, stat in weights:
        if var not in VARS:
            raise ValueError(f"unknown variable {var!r}")
        spec.append((VARS.index(var), stat_getter(stat)))
    return spec


def _exps(spec, prefs, rec) -> Tuple[int, ...]:
    e = [0] * NVARS
    for i, get in spec:
        e[i] += get(prefs, rec)
    return tuple(e)


def _keys(stats, prefs, rec) -> Tuple[int, ...]:
    return tuple(get(prefs, rec) for get in stats)


# -- enumeration kernels (module level so they pickle) -------------------------

class _Leaf:
    """Statistic view of one parked configuration; the full record is built on demand."""

    __slots__ = ("prefs", "occ", "spots", "_rec")

    def __init__(self, prefs, occ, spots):
        self.prefs = prefs
        self.occ = occ
        self.spots = spots
        self._rec = None

    @property
    def unl(self) -> int:
        return sum(1 for a, b in zip(self.prefs, self.occ) if a != b)

    @property
    def rep(self) -> int:
        pr = self.prefs
        return sum(1 for i in range(1, len(pr)) if pr[i] == pr[i - 1])

    @property
    def lel(self) -> int:
        return self.prefs.count(self.prefs[0]) if self.prefs else 0

    @property
    def one(self) -> int:
        return self.prefs.count(1)

    @property
    def nlel(self) -> int:
        return self.prefs.count(self.prefs[1]) if len(self.prefs) >= 2 else 0

    def __getattr__(self, name):
        if self._rec is None:
            self._rec = stats_from(self.prefs, self.occ, self.spots)
        return getattr(self._rec, name)


def _walk(domain: Domain, first: Optional[int], probabilistic: bool):
    """Yield ``(prefs, occupied, heads, tails)`` for every parked configuration.

    Vectors are generated car by car so prefixes are shared, and a prefix is
    abandoned as soon as one of its cars leaves the street: no extension of
    it can park everyone.  Deterministic walks never flip, so heads = tails = 0.
    """
    m, base, spots = domain.length, domain.base, domain.spots
    taken = [False] * (spots + 2)
    prefs: list = []
    occ: list = []
    dirs = ((1, 1, 0), (-1, 0, 1)) if probabilistic else ((1, 0, 0),)
    every = range(1, base + 1)

    def rec(i, h, t):
        if i == m:
            yield tuple(prefs), tuple(occ), h, t
            return
        for a in ((first,) if i == 0 and first is not None else every):
            prefs.append(a)
            if not taken[a]:
                taken[a] = True
                occ.append(a)
                yield from rec(i + 1, h, t)
                occ.pop()
                taken[a] = False
            else:
                for step, dh, dt in dirs:
                    s = a
                    while 1 <= s <= spots and taken[s]:
                        s += step
                    if 1 <= s <= spots:
                        taken[s] = True
                        occ.append(s)
                        yield from rec(i + 1, h + dh, t + dt)
                        occ.pop()
                        taken[s] = False
            prefs.pop()

    yield from rec(0, 0, 0)


def _getters(key_fn_args):
    kind, payload = key_fn_args
    if kind == "keys":
        return kind, [stat_getter(s) for s in payload]
    return kind, _weight_spec(payload)


def _block_det(domain: Domain, first: Optional[int], key_fn_args) -> Counter:
    kind, getters = _getters(key_fn_args)
    acc: Counter = Counter()
    check = domain.kind not in ("pf", "pfmn")
    accepts = domain.accepts
    spots = domain.spots
    for prefs, occ, _, _ in _walk(domain, first, False):
        if check and not accepts(prefs):
            continue
        leaf = _Leaf(prefs, occ, spots)
        acc[_keys(getters, prefs, leaf) if kind == "keys" else _exps(getters, prefs, leaf)] += 1
    return acc


def _block_prob(domain: Domain, first: Optional[int], key_fn_args) -> Counter:
    kind, getters = _getters(key_fn_args)
    acc: Counter = Counter()
    spots = domain.spots
    check = domain.kind not in ("pf", "pfmn")
    ok = domain.accepts_outcome
    for prefs, occ, h, tl in _walk(domain, first, True):
        if check and not ok(occ):
            continue
        leaf = _Leaf(prefs, occ, spots)
        key = _keys(getters, prefs, leaf) if kind == "keys" else _exps(getters, prefs, leaf)
        acc[(key, h, tl)] += 1
    return acc


@lru_cache(maxsize=None)
def _weight(h: int, tl: int) -> Polynomial:
    return branch_weight(h, tl)


def worker_count() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _run(kernel, domain: Domain, args, guard: int, workers: Optional[int]) -> Counter:
    if domain.size > guard:
        raise DomainTooLarge(f"{domain.kind} space has {domain.size} vectors (guard {guard})")
    workers = worker_count() if workers is None else workers
    if domain.length == 0:
        total = Counter()
        prefs: Tuple[int, ...] = ()
        rec = stats_from(prefs, (), domain.spots)
        kind, payload = args
        getters = [stat_getter(s) for s in payload] if kind == "keys" else _weight_spec(payload)
        key = _keys(getters, prefs, rec) if kind == "keys" else _exps(getters, prefs, rec)
        total[(key, 0, 0) if kernel is _block_prob else key] += 1
        return total
    if workers <= 1 or domain.size < PARALLEL_THRESHOLD:
        return kernel(domain, None, args)
    total: Counter = Counter()
    firsts = list(range(1, domain.base + 1))
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(kernel, [domain] * len(firsts), firsts, [args] * len(firsts)):
            total.update(part)
    return total


def gf_over(domain: Domain, weights, guard: int = GUARD, workers: Optional[int] = None) -> Polynomial:
    """Sum of prod(var**stat) over members of ``domain``; ``weights`` is [(var, stat), ...]."""
    return from_counts(_run(_block_det, domain, ("exps", tuple(weights)), guard, workers))


def gf_over_prob(domain: Domain, weights, guard: int = GUARD, workers: Optional[int] = None) -> Polynomial:
    """Sum over all vectors and all successful branches of weight * monomial."""
    raw = _run(_block_prob, domain, ("exps", tuple(weights)), guard, workers)
    by_flip: Dict[Tuple[int, int], Counter] = {}
    for (e, h, tl), c in raw.items():
        by_flip.setdefault((h, tl), Counter())[e] += c
    return poly_sum(_weight(h, tl) * from_counts(cnt) for (h, tl), cnt in sorted(by_flip.items()))


def weighted_gf(domain: Domain, statistics, event=None, guard: int = GUARD) -> Polynomial:
    """Probability-weighted generating polynomial with an optional extra event.

    ``event(prefs, occupied)`` further restricts which successful branches count.
    """
    if event is None:
        return gf_over_prob(domain, statistics, guard)
    spec = _weight_spec(statistics)
    if domain.size > guard:
        raise DomainTooLarge(f"{domain.size} vectors exceeds guard {guard}")
    acc: Counter = Counter()
    for prefs, occ, h, tl in _walk(domain, None, True):
        if not domain.accepts_outcome(occ) or not event(prefs, occ):
            continue
        acc[(_exps(spec, prefs, _Leaf(prefs, occ, domain.spots)), h, tl)] += 1
    by_flip: Dict[Tuple[int, int], Counter] = {}
    for (e, h, tl), c in acc.items():
        by_flip.setdefault((h, tl), Counter())[e] += c
    return poly_sum(_weight(h, tl) * from_counts(cnt) for (h, tl), cnt in sorted(by_flip.items()))


def count_by(domain: Domain, stat_tuple: Sequence[str], guard: int = GUARD, workers: Optional[int] = None) -> Dict[Tuple[int, ...], int]:
    """Exact contingency table of the statistic tuple over ``domain``."""
    return dict(sorted(_run(_block_det, domain, ("keys", tuple(stat_tuple)), guard, workers).items()))


def count_by_prob(domain: Domain, stat_tuple: Sequence[str], guard: int = GUARD, workers: Optional[int] = None) -> Dict[Tuple[int, ...], Polynomial]:
    """Probability mass (a polynomial in p) of each statistic value."""
    raw = _run(_block_prob, domain, ("keys", tuple(stat_tuple)), guard, workers)
    grouped: Dict[Tuple[int, ...], Dict[Tuple[int, int], int]] = {}
    for (key, h, tl), c in raw.items():
        grouped.setdefault(key, {})[(h, tl)] = c
    return {
        key: poly_sum(c * _weight(h, tl) for (h, tl), c in sorted(cells.items()))
        for key, cells in sorted(grouped.items())
    }


def size(domain: Domain, guard: int = GUARD) -> int:
    return sum(count_by(domain, (), guard).values())


def tree_gf(n: int, weights) -> Polynomial:
    """Sum of prod(var**stat) over rooted trees on {0..n}; ``lev1`` is leaves - 1."""
    from .trees import enumerate_trees, tree_stats

    acc: Counter = Counter()
    idx = [(VARS.index(v), s) for v, s in weights]
    for T in enumerate_trees(n):
        st = tree_stats(T)
        e = [0] * NVARS
        for i, s in idx:
            e[i] += st.lev - 1 if s == "lev1" else st.get(s)
        acc[tuple(e)] += 1
    return from_counts(acc)
