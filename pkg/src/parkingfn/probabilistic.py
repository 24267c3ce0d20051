"""Probabilistic parking, computed exactly by expanding every coin flip.

A car whose preferred spot is free parks there without flipping.  A blocked
car flips once: heads (weight ``p``) scans forward, tails (weight ``1-p``)
scans backward, keeping that direction until it parks or leaves the street.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .exactalg import ONE, Polynomial, p, poly_sum
from .parking import Failure, Outcome, PrefVector, StatRecord, rk_vector, stats_from

HEADS, TAILS = "H", "T"


def branch_weight(heads: int, tails: int) -> Polynomial:
    return p ** heads * (ONE - p) ** tails


@dataclass(frozen=True)
class BranchTrace:
    flips: Tuple[Tuple[int, str], ...]
    outcome: object  # Outcome or Failure
    stats: Optional[StatRecord]

    @property
    def heads(self) -> int:
        return sum(1 for _, f in self.flips if f == HEADS)

    @property
    def tails(self) -> int:
        return len(self.flips) - self.heads

    @property
    def weight(self) -> Polynomial:
        return branch_weight(self.heads, self.tails)

    @property
    def parked(self) -> bool:
        return isinstance(self.outcome, Outcome)


def iter_branches(prefs: Sequence[int], spots: int) -> Iterator[Tuple[Tuple[Tuple[int, str], ...], Optional[Tuple[int, ...]], int]]:
    """Depth-first over coin outcomes.

    Yields ``(flips, occupied, failed_car)``; ``occupied`` is None on failure.
    """
    m = len(prefs)
    taken = [False] * (spots + 2)
    occ: List[int] = []
    flips: List[Tuple[int, str]] = []

    def rec(i):
        if i == m:
            yield tuple(flips), tuple(occ), 0
            return
        a = prefs[i]
        if not taken[a]:
            taken[a] = True
            occ.append(a)
            yield from rec(i + 1)
            occ.pop()
            taken[a] = False
            return
        for direction, step in ((HEADS, 1), (TAILS, -1)):
            s = a
            while 1 <= s <= spots and taken[s]:
                s += step
            flips.append((i + 1, direction))
            if 1 <= s <= spots:
                taken[s] = True
                occ.append(s)
                yield from rec(i + 1)
                occ.pop()
                taken[s] = False
            else:
                yield tuple(flips), None, i + 1
            flips.pop()

    yield from rec(0)


def park_probabilistic(v: PrefVector) -> List[BranchTrace]:
    out = []
    for flips, occ, failed in iter_branches(v.prefs, v.spots):
        if occ is None:
            out.append(BranchTrace(flips, Failure(failed), None))
        else:
            out.append(BranchTrace(flips, Outcome(occ, v.spots), stats_from(v.prefs, occ, v.spots)))
    return out


def _success_prob(prefs, spots, accept=None) -> Polynomial:
    terms = []
    for flips, occ, _ in iter_branches(prefs, spots):
        if occ is None or (accept is not None and not accept(occ)):
            continue
        h = sum(1 for _, f in flips if f == HEADS)
        terms.append(branch_weight(h, len(flips) - h))
    return poly_sum(terms)


def prob_pf(v) -> Polynomial:
    """P(all n cars park on a street of n spots) as a polynomial in p."""
    prefs = v.prefs if isinstance(v, PrefVector) else tuple(v)
    return _success_prob(prefs, len(prefs))


def prob_pf_mn(v, m: int, n: int) -> Polynomial:
    prefs = v.prefs if isinstance(v, PrefVector) else tuple(v)
    if len(prefs) != m:
        raise ValueError(f"expected {m} preferences")
    return _success_prob(prefs, n)


def rk_event(u: Sequence[int]):
    """Accept iff the i-th occupied spot, left to right, is at most u_i."""
    def accept(occ):
        return all(s <= c for s, c in zip(sorted(occ), u))
    return accept


def prob_rk(v, r: int, k: int) -> Polynomial:
    prefs = v.prefs if isinstance(v, PrefVector) else tuple(v)
    u = rk_vector(len(prefs), r, k)
    return _success_prob(prefs, u[-1] if u else 0, rk_event(u))


def prob_u(v, u: Sequence[int]) -> Polynomial:
    prefs = v.prefs if isinstance(v, PrefVector) else tuple(v)
    return _success_prob(prefs, u[-1] if u else 0, rk_event(u))
