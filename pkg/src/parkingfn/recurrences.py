"""Recurrences for refined parking-function enumerators, evaluated bottom-up."""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Sequence, Tuple

from .exactalg import ONE, ZERO, Polynomial, geometric, p, poly_prod, poly_sum, q, w, x, y, z


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _xy_run(i: int) -> Polynomial:
    """xy + xy^2 + ... + xy^i."""
    return x * geometric(y, 1, i)


@lru_cache(maxsize=None)
def P_rec(n: int) -> Polynomial:
    """Enumerator of PF(n) by (unl, dis, des, rlm) in (x, y, z, w)."""
    if n == 0:
        return ONE
    total = (ONE + _xy_run(n - 1)) * w * P_rec(n - 1).subst({"w": 1})
    for i in range(n - 1):
        total = total + comb(n - 1, i) * (ONE + _xy_run(i)) * z * w * P_rec(i).subst({"w": 1}) * P_rec(n - i - 1)
    return total


@lru_cache(maxsize=None)
def Q_rec(n: int) -> Polynomial:
    """Enumerator of rooted trees on {0..n} by (nld, inv, lev-1, deg0).

    Built by splitting off the root edge on the path to the largest label;
    the resulting recurrence coincides term for term with :func:`P_rec`.
    """
    if n == 0:
        return ONE
    total = (ONE + _xy_run(n - 1)) * w * Q_rec(n - 1).subst({"w": 1})
    for i in range(n - 1):
        total = total + comb(n - 1, i) * (ONE + _xy_run(i)) * z * w * Q_rec(i).subst({"w": 1}) * Q_rec(n - i - 1)
    return total


@lru_cache(maxsize=None)
def Pp_rec(n: int) -> Polynomial:
    """Probability-weighted enumerator of [n]^n by (unl, dis, des, rlm), symbolic p."""
    if n == 0:
        return ONE
    total = (ONE + p * _xy_run(n - 1)) * w * Pp_rec(n - 1).subst({"w": 1})
    for i in range(n - 1):
        step = ONE + p * _xy_run(i) + (ONE - p) * _xy_run(n - i - 1)
        total = total + comb(n - 1, i) * step * z * w * Pp_rec(i).subst({"w": 1}) * Pp_rec(n - i - 1)
    return total


@lru_cache(maxsize=None)
def Pp_xy_rec(n: int) -> Polynomial:
    """The p-free (unl, dis) enumerator obtained at z = w = 1."""
    if n == 0:
        return ONE
    return poly_sum(
        comb(n - 1, i) * (ONE + _xy_run(i)) * Pp_xy_rec(i) * Pp_xy_rec(n - i - 1) for i in range(n)
    )


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` non-negative parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for s in parts:
        out //= factorial(s)
    return out


def _segment_sum(m: int, n: int, block) -> Polynomial:
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    return poly_sum(
        multinomial(s) * poly_prod(block(si) for si in s) for s in compositions(m, n - m + 1)
    )


def P_mn_rec(m: int, n: int) -> Polynomial:
    """m cars on n spots, split at the n-m spots nobody tries."""
    return _segment_sum(m, n, P_rec)


def Pp_mn_rec(m: int, n: int) -> Polynomial:
    return _segment_sum(m, n, Pp_rec)


@lru_cache(maxsize=None)
def kreweras_dis(n: int) -> Polynomial:
    """Displacement enumerator of PF(n) in q."""
    if n == 0:
        return ONE
    k = n - 1
    return poly_sum(comb(k, i) * geometric(q, 0, i) * kreweras_dis(i) * kreweras_dis(k - i) for i in range(k + 1))


@lru_cache(maxsize=None)
def pair_rec_lel(n: int) -> Polynomial:
    """(unl, lel) enumerator of PF(n) in (x, y), conditioning on the last car's spot."""
    if n == 0:
        return ONE
    if n == 1:
        return y
    total = ZERO
    for i in range(n):
        a = binom(n - 2, i - 1)
        if a:
            total = total + a * (x * y + (i - 1) * x + 1) * pair_rec_lel(i) * pair_rec_lel(n - i - 1).subst({"y": 1})
        b = binom(n - 2, i)
        if b:
            total = total + b * (i * x + 1) * pair_rec_lel(i).subst({"y": 1}) * pair_rec_lel(n - i - 1)
    return total


@lru_cache(maxsize=None)
def pair_rec_one(n: int) -> Polynomial:
    """(unl, one) enumerator of PF(n) in (x, y)."""
    if n == 0:
        return ONE
    total = y * pair_rec_one(n - 1).subst({"y": 1})
    for i in range(1, n):
        total = total + comb(n - 1, i) * (x * y + (i - 1) * x + 1) * pair_rec_one(i) * pair_rec_one(n - i - 1).subst({"y": 1})
    return total


@lru_cache(maxsize=None)
def upf_rec(n: int) -> Polynomial:
    """Unit-interval parking functions by number of cars displaced one spot, in y."""
    if n == 0:
        return ONE
    s = poly_sum(comb(n - 1, i) * upf_rec(i) * upf_rec(n - i - 1) for i in range(n))
    return (y + 1) * s - y * upf_rec(n - 1)


def _split(u: Tuple[int, ...], i: int):
    u1 = u[:i]
    u2 = tuple(c - u[i] for c in u[i + 1:])
    return u1, u2


def _check_u(u) -> Tuple[int, ...]:
    u = tuple(u)
    if any(a >= b for a, b in zip(u, u[1:])) or (u and u[0] < 1):
        raise ValueError("u must be strictly increasing and positive")
    return u


@lru_cache(maxsize=None)
def _A(u: Tuple[int, ...]) -> Polynomial:
    m = len(u)
    if m == 0:
        return ONE
    total = ZERO
    for i in range(m):
        u1, u2 = _split(u, i)
        total = total + comb(m - 1, i) * (i * x + (u[i] - i)) * _A(u1) * _A(u2)
    return total


@lru_cache(maxsize=None)
def _B(u: Tuple[int, ...]) -> Polynomial:
    m = len(u)
    if m == 0:
        return ONE
    total = ZERO
    for i in range(m):
        u1, u2 = _split(u, i)
        total = total + comb(m - 1, i) * (y + (u[i] - 1)) * _B(u1) * _B(u2).subst({"y": 1})
    return total


@lru_cache(maxsize=None)
def _C(u: Tuple[int, ...]) -> Polynomial:
    m = len(u)
    if m == 0:
        return ONE
    if m == 1:
        return u[0] * z
    total = ZERO
    for i in range(m):
        u1, u2 = _split(u, i)
        a = binom(m - 2, i - 1)
        if a:
            total = total + a * (z + (u[i] - 1)) * _C(u1) * _C(u2).subst({"z": 1})
        b = binom(m - 2, i)
        if b:
            total = total + b * u[i] * _C(u1).subst({"z": 1}) * _C(u2)
    return total


def u_rec_A(u) -> Polynomial:
    """u-parking functions by unluckiness, in x."""
    return _A(_check_u(u))


def u_rec_B(u) -> Polynomial:
    """u-parking functions by number of 1's, in y."""
    return _B(_check_u(u))


def u_rec_C(u) -> Polynomial:
    """u-parking functions by leading elements, in z."""
    return _C(_check_u(u))
