"""Deterministic parking protocol, membership tests and car-side statistics."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class PrefVector:
    """Preferences ``a_1..a_m`` (1-based spots) on a street of ``spots`` spaces."""

    prefs: Tuple[int, ...]
    spots: int

    def __post_init__(self):
        object.__setattr__(self, "prefs", tuple(self.prefs))
        if self.spots < 1 and self.prefs:
            raise ValueError("street needs at least one spot")
        for a in self.prefs:
            if not 1 <= a <= self.spots:
                raise ValueError(f"preference {a} outside 1..{self.spots}")

    @classmethod
    def of(cls, prefs: Sequence[int], spots: Optional[int] = None) -> "PrefVector":
        prefs = tuple(prefs)
        return cls(prefs, len(prefs) if spots is None else spots)

    def __len__(self):
        return len(self.prefs)


@dataclass(frozen=True)
class Outcome:
    """``occupied[i]`` is the spot taken by car ``i+1``; ``inverse`` maps spot -> car (1-based)."""

    occupied: Tuple[int, ...]
    spots: int

    @property
    def inverse(self) -> dict:
        return {s: i + 1 for i, s in enumerate(self.occupied)}

    def inverse_word(self) -> Tuple[int, ...]:
        """Cars read in increasing spot order (oc^{-1} for a full street)."""
        inv = self.inverse
        return tuple(inv[s] for s in sorted(inv))


@dataclass(frozen=True)
class Failure:
    car: int  # 1-based index of the first car that could not park


@dataclass(frozen=True)
class StatRecord:
    unl: int
    lucky: int
    dis: int
    des: int
    rlm: int
    rep: int
    lel: int
    one: int
    nlel: int
    per_car_displacement: Tuple[int, ...] = field(default=())

    def get(self, name: str) -> int:
        return getattr(self, name)


STAT_NAMES = ("unl", "lucky", "dis", "des", "rlm", "rep", "lel", "one", "nlel")


def park_deterministic(v: PrefVector):
    """Forward protocol: each car tries its preferred spot then scans upward.

    Returns an :class:`Outcome`, or :class:`Failure` naming the first car
    that runs off the end of the street.
    """
    n = v.spots
    taken = [False] * (n + 2)
    occ = []
    for i, a in enumerate(v.prefs):
        s = a
        while s <= n and taken[s]:
            s += 1
        if s > n:
            return Failure(i + 1)
        taken[s] = True
        occ.append(s)
    return Outcome(tuple(occ), n)


def _segments(occupied: Sequence[int], spots: int) -> List[List[int]]:
    """Maximal runs of consecutive occupied spots."""
    filled = set(occupied)
    runs, cur = [], []
    for s in range(1, spots + 1):
        if s in filled:
            cur.append(s)
        elif cur:
            runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    return runs


def descents(word: Sequence[int]) -> int:
    return sum(1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def right_to_left_maxima(word: Sequence[int]) -> int:
    count, best = 0, 0
    for c in reversed(word):
        if c > best:
            count += 1
            best = c
    return count


def outcome_des_rlm(occupied: Sequence[int], spots: int) -> Tuple[int, int]:
    """des and rlm of the inverse outcome, summed over occupied runs.

    On a full street there is a single run and this is the usual pair of
    statistics of oc^{-1}.  With empty spots each run is a non-interacting
    block, so the statistics are taken block by block.
    """
    inv = {s: i + 1 for i, s in enumerate(occupied)}
    des = rlm = 0
    for run in _segments(occupied, spots):
        word = [inv[s] for s in run]
        des += descents(word)
        rlm += right_to_left_maxima(word)
    return des, rlm


def pref_stats(prefs: Sequence[int]) -> Tuple[int, int, int, int]:
    """(rep, lel, one, nlel) -- statistics of the preference word alone."""
    m = len(prefs)
    if not m:
        return 0, 0, 0, 0
    rep = sum(1 for i in range(1, m) if prefs[i] == prefs[i - 1])
    lel = prefs.count(prefs[0])
    one = prefs.count(1)
    nlel = prefs.count(prefs[1]) if m >= 2 else 0
    return rep, lel, one, nlel


def stats_from(prefs: Sequence[int], occupied: Sequence[int], spots: int) -> StatRecord:
    disp = tuple(abs(b - a) for a, b in zip(prefs, occupied))
    unl = sum(1 for d in disp if d)
    des, rlm = outcome_des_rlm(occupied, spots)
    rep, lel, one, nlel = pref_stats(prefs)
    return StatRecord(
        unl=unl,
        lucky=len(prefs) - unl,
        dis=sum(disp),
        des=des,
        rlm=rlm,
        rep=rep,
        lel=lel,
        one=one,
        nlel=nlel,
        per_car_displacement=disp,
    )


def stats(v: PrefVector, out: Outcome) -> StatRecord:
    return stats_from(v.prefs, out.occupied, v.spots)


def is_parking_function(v) -> bool:
    """Sorted preferences satisfy b_i <= i."""
    prefs = v.prefs if isinstance(v, PrefVector) else v
    return all(b <= i for i, b in enumerate(sorted(prefs), 1))


def is_u_parking(v, u: Sequence[int]) -> bool:
    prefs = v.prefs if isinstance(v, PrefVector) else v
    if len(prefs) != len(u):
        raise ValueError("u must have one entry per car")
    if any(u[i] >= u[i + 1] for i in range(len(u) - 1)):
        raise ValueError("u must be strictly increasing")
    return all(b <= c for b, c in zip(sorted(prefs), u))


def rk_vector(m: int, r: int, k: int) -> Tuple[int, ...]:
    return tuple(k + i * r for i in range(m))


def is_rk_parking(v, r: int, k: int) -> bool:
    prefs = v.prefs if isinstance(v, PrefVector) else v
    return is_u_parking(prefs, rk_vector(len(prefs), r, k))


def is_prime(v) -> bool:
    """At least j+1 cars prefer the first j spots, for every 1 <= j <= n-1."""
    prefs = v.prefs if isinstance(v, PrefVector) else v
    n = len(prefs)
    if not is_parking_function(prefs):
        return False
    b = sorted(prefs)
    # #{a <= j} >= j+1  <=>  b_{j+1} <= j  (1-based)
    return all(b[j] <= j for j in range(1, n))


def is_unit_interval(v) -> bool:
    if not isinstance(v, PrefVector):
        v = PrefVector.of(v)
    out = park_deterministic(v)
    if isinstance(out, Failure):
        return False
    return all(b - a <= 1 for a, b in zip(v.prefs, out.occupied))


def rotations_fixing(prefs: Sequence[int], k: int) -> Iterator[Tuple[int, ...]]:
    """Entries <= k stay put; the rest cycle through (k+1, ..., n+1).

    Yields all ``n+1-k`` rotations, starting with the identity.
    """
    n = len(prefs)
    size = n + 1 - k
    for d in range(size):
        yield tuple(a if a <= k else k + 1 + (a - k - 1 + d) % size for a in prefs)


def rotation_parking_count(prefs: Sequence[int], k: int) -> int:
    return sum(1 for r in rotations_fixing(prefs, k) if is_parking_function(r))
