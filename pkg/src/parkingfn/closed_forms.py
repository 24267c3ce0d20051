"""Product formulas for refined parking enumerators, built by explicit multiplication."""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from .exactalg import (
    ONE,
    Polynomial,
    TruncatedSeries,
    poly_prod,
    poly_sum,
    q,
    series_exp,
    series_inverse,
    series_log,
    x,
    y,
    z,
)
from .recurrences import kreweras_dis, upf_rec


def _prod(lo: int, hi: int, factor) -> Polynomial:
    return poly_prod(factor(i) for i in range(lo, hi + 1))


def lucky_gf(n: int) -> Polynomial:
    """Luckiness over PF(n), in q."""
    if n == 0:
        return ONE
    return q * _prod(1, n - 1, lambda i: i + (n - i + 1) * q)


def rep_gf(n: int) -> Polynomial:
    """Repeats over PF(n), in q."""
    if n == 0:
        return ONE
    return (q + n) ** (n - 1)


def _rk_factor(m: int, r: int, k: int):
    return lambda i: x * y + (i - 1) * x + (k + m * r - i)


def rk_unl_rep_gf(m: int, r: int, k: int) -> Polynomial:
    """(unl, rep) in (x, y), weighted by the probability of (r, k)-parking."""
    if m == 0:
        return ONE
    return k * _prod(1, m - 1, _rk_factor(m, r, k))


def rk_unl_lel_gf(m: int, r: int, k: int) -> Polynomial:
    """(unl, lel) in (x, y); also the law of (unl, #{i: a_i = a_2})."""
    if m == 0:
        return ONE
    return k * y * _prod(1, m - 1, _rk_factor(m, r, k))


def rk_same_as_gf(m: int, r: int, k: int) -> Polynomial:
    """#{i: a_i = a_s} in y, for any fixed car s."""
    if m == 0:
        return ONE
    return k * y * (y + (k + m * r - 1)) ** (m - 1)


def gessel_seo_unl(m: int, n: int) -> Polynomial:
    """Unluckiness over PF(m, n), in x."""
    if m == 0:
        return ONE
    return (n - m + 1) * _prod(1, m - 1, lambda i: i * x + (n - i + 1))


def master_gf(n: int) -> Polynomial:
    """(lel, one, unl) over PF(n) in (x, y, z); valid for n >= 2."""
    if n < 2:
        raise ValueError("product formula holds for n >= 2")
    a = (n - 1) * _prod(1, n - 2, lambda i: x * z + y * z + (i - 1) * z + (n - i))
    b = (x * y * z + 1) * _prod(1, n - 2, lambda i: x * y * z + i * z + (n - i))
    return x * y * (a + b)


def correspondence_gf(n: int) -> Polynomial:
    """(nlel, one, unl) over PF(n): the same polynomial as :func:`master_gf`."""
    return master_gf(n)


def contrast_gf(n: int) -> Polynomial:
    """(lel, nlel, unl) over PF(n) in (x, y, z); valid for n >= 2."""
    if n < 2:
        raise ValueError("product formula holds for n >= 2")
    a = n * _prod(1, n - 2, lambda i: x * z + y * z + (i - 1) * z + (n - i))
    b = x * y * z * _prod(1, n - 2, lambda i: x * y * z + i * z + (n - i))
    return x * y * (a + b)


def ones_gf(n: int) -> Polynomial:
    """Number of 1's (equivalently leading elements) over PF(n), in y."""
    if n == 0:
        return ONE
    return y * (y + n) ** (n - 1)


def pair_gf(n: int) -> Polynomial:
    """(unl, lel) or (unl, one) over PF(n), in (x, y)."""
    if n == 0:
        return ONE
    return y * _prod(1, n - 1, lambda i: x * y + (i - 1) * x + (n - i + 1))


def tree_pair_gf(n: int) -> Polynomial:
    """(nld, deg0) over rooted trees on {0..n}, in (x, y)."""
    if n == 0:
        return ONE
    return y * _prod(1, n - 1, lambda i: i * x + (n - i) + y)


def unl_gf(n: int) -> Polynomial:
    """Unluckiness over PF(n) (and non-leaders over trees), in x."""
    return _prod(1, n - 1, lambda i: i * x + (n - i + 1))


def multinomial3(n: int, a: int, b: int) -> int:
    c = n - a - b
    if min(a, b, c) < 0:
        return 0
    return factorial(n) // (factorial(a) * factorial(b) * factorial(c))


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def master_counts(n: int, s: int, t: int) -> int:
    """#{pi in PF(n): lel = s+1, one = t+1}, n >= 2."""
    if s < 0 or t < 0:
        return 0
    total = 0
    mc = multinomial3(n - 2, s, t)
    if mc:
        total = mc * (n - 1) ** (n - s - t - 1)
    if s == t:
        total += _binom(n - 2, s) * n ** max(n - s - 2, 0)
        total += _binom(n - 2, s - 1) * n ** (n - s - 1)
    return total


def contrast_counts(n: int, s: int, t: int) -> int:
    """#{pi in PF(n): lel = s+1, nlel = t+1}, n >= 2."""
    if s < 0 or t < 0:
        return 0
    total = 0
    mc = multinomial3(n - 2, s, t)
    if mc:
        total = mc * n * (n - 1) ** (n - s - t - 2)
    if s == t:
        total += _binom(n - 2, s - 1) * n ** (n - s - 1)
    return total


def ppf_unl_rep_gf(n: int) -> Polynomial:
    """(unl, rep) over prime parking functions of length n, in (x, y)."""
    if n == 0:
        return ONE
    return _prod(1, n - 1, lambda i: x * y + (i - 1) * x + (n - 1 - i))


def ppf_unl_lel_gf(n: int) -> Polynomial:
    if n == 0:
        return ONE
    return y * ppf_unl_rep_gf(n)


def ppf_same_as_gf(n: int) -> Polynomial:
    """#{i: a_i = a_s} over PPF(n), in y."""
    if n == 0:
        return ONE
    return y * (y + n - 2) ** (n - 1)


def ppf_lel_one_gf(length: int) -> Polynomial:
    """(lel, one) over PPF(length) in (x, y); the formula is indexed by n = length - 1 >= 1."""
    n = length - 1
    if n < 1:
        raise ValueError("formula needs length >= 2")
    return (
        x * (n - 1 + x + y) ** (n - 1) * ((n - 1) * y - x - (n - 1))
        + x * (n - 1 + x) ** n
        + x ** 2 * y ** 2 * (n + x * y) ** (n - 1)
    )


def ppf_one_gf(length: int) -> Polynomial:
    """Number of 1's over PPF(length), in y."""
    n = length - 1
    return (n + y) ** n * (y - 1) + n ** n


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def upf_closed(n: int) -> Polynomial:
    """sum_k S(n, k) k! y^(n-k)."""
    if n == 0:
        return ONE
    return poly_sum(stirling2(n, k) * factorial(k) * y ** (n - k) for k in range(1, n + 1))


def upf_egf_series(order: int) -> TruncatedSeries:
    """y / (y + 1 - exp(y t)) expanded to ``order`` in t."""
    eyt = series_exp(TruncatedSeries([0, y], order))
    denom = TruncatedSeries([y + 1], order) - eyt
    # denominator = y * (1 - sum_{n>=1} y^(n-1) t^n / n!), so the y cancels
    reduced = TruncatedSeries([c.divide_by_var("y") for c in denom.coeffs], order)
    return series_inverse(reduced)


def verify_upf_egf(N: int) -> bool:
    """Compare n! [t^n] of the closed EGF with the recurrence, n <= N, plus the y = 1 case."""
    coeffs = upf_egf_series(N).egf_coefficients()
    if any(coeffs[n] != upf_rec(n) for n in range(N + 1)):
        return False
    return verify_fubini_egf(N)


def fubini_numbers(N: int):
    """Ordered Bell numbers 1, 1, 3, 13, ... from 1 / (2 - exp(t))."""
    series = series_inverse(TruncatedSeries([2], N) - series_exp(TruncatedSeries([0, 1], N)))
    return [c.constant_term() for c in series.egf_coefficients()]


def verify_fubini_egf(N: int) -> bool:
    """At y = 1 the closed EGF becomes 1 / (2 - exp(t)); compare with the recurrence at y = 1."""
    return fubini_numbers(N) == [upf_rec(n).evaluate(y=1) for n in range(N + 1)]


def dis_log_egf_sides(N: int, shift: int = 1):
    """Both sides of the displacement log-EGF identity as series in t.

    The left side is sum_{n>=1} D_{n-shift}(q) (q-1)^(n-1) t^n / n! where D_k
    is the displacement enumerator of PF(k).  ``shift=1`` is the form that
    holds (D_{n-1} is also the inversion enumerator of trees on n vertices);
    ``shift=0`` indexes D by n and already disagrees at t^2.
    """
    lhs = TruncatedSeries.from_egf(
        [Polynomial.const(0)] + [kreweras_dis(n - shift) * (q - 1) ** (n - 1) for n in range(1, N + 1)], N
    )
    inner = TruncatedSeries.from_egf([q ** comb(n, 2) for n in range(N + 1)], N)
    return lhs, series_log(inner)


def verify_dis_log_egf(N: int, shift: int = 1) -> bool:
    lhs, rhs = dis_log_egf_sides(N, shift)
    return lhs == rhs
