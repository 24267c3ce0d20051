"""Exact per-car laws and finite-m checks of the Poisson and normal limits.

Everything is an exact :class:`fractions.Fraction` until the very last step,
where total-variation and Kolmogorov distances are taken in floating point.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .closed_forms import ppf_unl_rep_gf, rk_unl_rep_gf
from .exactalg import ONE, Polynomial, p, poly_sum

Rational = Fraction


@dataclass(frozen=True)
class Pmf:
    """Finite law with exact probabilities; ``support`` is sorted.

    :meth:`from_dict` drops zero-probability atoms, so equal laws compare equal.
    """

    support: Tuple
    probs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.support) != len(self.probs):
            raise ValueError("support and probs differ in length")
        if any(pr < 0 for pr in self.probs):
            raise ValueError("negative probability")
        if sum(self.probs, Fraction(0)) != 1:
            raise ValueError("probabilities do not sum to 1")

    @classmethod
    def from_dict(cls, table: Dict) -> "Pmf":
        keys = sorted(k for k, v in table.items() if v != 0)
        return cls(tuple(keys), tuple(Fraction(table[k]) for k in keys))

    @classmethod
    def point(cls, value) -> "Pmf":
        return cls((value,), (Fraction(1),))

    def as_dict(self) -> Dict:
        return dict(zip(self.support, self.probs))

    def prob(self, value) -> Fraction:
        return self.as_dict().get(value, Fraction(0))

    @property
    def floats(self) -> Tuple[float, ...]:
        return tuple(float(pr) for pr in self.probs)

    def mean(self) -> Fraction:
        return sum((Fraction(v) * pr for v, pr in zip(self.support, self.probs)), Fraction(0))

    def variance(self) -> Fraction:
        mu = self.mean()
        return sum(((Fraction(v) - mu) ** 2 * pr for v, pr in zip(self.support, self.probs)), Fraction(0))

    def marginal(self, index: int) -> "Pmf":
        acc: Dict = {}
        for v, pr in zip(self.support, self.probs):
            acc[v[index]] = acc.get(v[index], Fraction(0)) + pr
        return Pmf.from_dict(acc)


def _frac(a: int, e: int) -> Fraction:
    """a**e for possibly negative e, exactly."""
    return Fraction(a) ** e


# -- per-car displacement ----------------------------------------------------

def _check_index(n: int, i: int) -> None:
    if n < 1 or not 0 <= i <= n - 1:
        raise ValueError(f"need 0 <= i <= n-1, got n={n}, i={i}")


def _simplified_term(n: int, i: int, k: int) -> Fraction:
    total = sum(
        (math.comb(i, s) * _frac(s + 1, s - 1) * _frac(n - s, i - s - 1) for s in range(k, i + 1)),
        Fraction(0),
    )
    return Fraction(n - i, (n + 1) ** i) * total


def _two_sum_term(n: int, i: int, k: int) -> Polynomial:
    """Forward and backward contributions kept apart, as a polynomial in p."""
    fwd = sum(
        (math.comb(i, j - 1) * _frac(j, j - 2) * _frac(n - j + 1, i - j) for j in range(k + 1, i + 2)),
        Fraction(0),
    )
    bwd = sum(
        (math.comb(i, n - j) * _frac(n - j + 1, n - j - 1) * _frac(j, i - n + j - 1) for j in range(n - i, n - k + 1)),
        Fraction(0),
    )
    scale = Fraction(n - i, (n + 1) ** i)
    return (p * fwd + (ONE - p) * bwd) * scale


def displacement_pmf_p(n: int, i: int) -> List[Polynomial]:
    """The p-dependent form, one polynomial in p per displacement k = 0..i."""
    _check_index(n, i)
    return [_two_sum_term(n, i, k) for k in range(i + 1)]


def displacement_pmf(n: int, i: int, p_value: Optional[Fraction] = None) -> Pmf:
    """Law of the displacement of car i+1 given that all cars park.

    Only the first i+1 preferences matter, so the number of cars plays no
    role beyond ``i <= m-1``.  Both forms are evaluated; they must coincide.
    """
    _check_index(n, i)
    simple = [_simplified_term(n, i, k) for k in range(i + 1)]
    with_p = displacement_pmf_p(n, i)
    for a, b in zip(with_p, simple):
        if a != Polynomial.const(b):
            raise AssertionError(f"forms disagree at n={n}, i={i}: {a.to_text()} vs {b}")
        if p_value is not None and a.evaluate(p=Fraction(p_value)) != b:
            raise AssertionError("p-dependent form disagrees at the given p")
    return Pmf(tuple(range(i + 1)), tuple(simple))


def unlucky_prob(n: int, i: int) -> Fraction:
    """P(car i+1 is unlucky) = i/(n+1)."""
    _check_index(n, i)
    return Fraction(i, n + 1)


def avg_displacement(m: int, n: int) -> Fraction:
    """Mean displacement of a uniformly chosen car among the m."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    return sum((displacement_pmf(n, i).mean() for i in range(m)), Fraction(0)) / m


def brute_displacement_law(m: int, n: int, i: int, probabilistic: bool = False) -> Pmf:
    """Conditional law of car i+1's displacement by exhaustive enumeration.

    With ``probabilistic`` the branch masses (polynomials in p) are summed and
    must be p-free after normalising.
    """
    from .oracle import PFmn, count_by, count_by_prob

    if not 0 <= i < m <= n:
        raise ValueError("need 0 <= i < m <= n")
    stat = (f"disp{i + 1}",)
    if probabilistic:
        table = count_by_prob(PFmn(m, n), stat)
        total = poly_sum(table.values())
        out = {}
        for (k,), mass in table.items():
            if not mass.is_constant() or not total.is_constant():
                raise AssertionError("conditional displacement law depends on p")
            out[k] = Fraction(mass.constant_term()) / Fraction(total.constant_term())
        return Pmf.from_dict(out)
    table = count_by(PFmn(m, n), stat)
    total = sum(table.values())
    return Pmf.from_dict({k: Fraction(c, total) for (k,), c in table.items()})


# -- laws read off the product formulas ------------------------------------------

def _convolve(factors: Iterable[Dict]) -> Dict:
    acc: Dict = {(0, 0): Fraction(1)}
    for f in factors:
        nxt: Dict = {}
        for (u, r), a in acc.items():
            for (du, dr), b in f.items():
                key = (u + du, r + dr)
                nxt[key] = nxt.get(key, Fraction(0)) + a * b
        acc = nxt
    return acc


def _ur_factors(m: int, denom: int):
    for i in range(1, m):
        yield {
            (1, 1): Fraction(1, denom),
            (1, 0): Fraction(i - 1, denom),
            (0, 0): Fraction(denom - i, denom),
        }


def exact_UR_law(m: int, r: int, k: int) -> Pmf:
    """Joint law of (unlucky cars, repeats) over the (r, k)-parking family.

    A sum of m-1 independent vector Bernoulli steps; step i contributes
    (1, 1), (1, 0) or (0, 0) with weights 1, i-1 and k+mr-i out of k+mr.
    """
    if m < 1 or r < 1 or k < 1:
        raise ValueError("need m, r, k >= 1")
    return Pmf.from_dict(_convolve(_ur_factors(m, k + m * r)))


def ppf_UR_law(n: int) -> Pmf:
    """The prime-parking analogue: n-1 steps out of n-1."""
    if n < 2:
        raise ValueError("need n >= 2")
    return Pmf.from_dict(_convolve(_ur_factors(n, n - 1)))


def law_from_gf(gf: Polynomial, var: str) -> Pmf:
    """Normalised coefficient vector of ``gf`` in one variable (others set to 1)."""
    others = {v: 1 for v in gf.variables() if v != var}
    coeffs = gf.subst(others).coefficients_in(var)
    total = sum((Fraction(c.constant_term()) for c in coeffs.values()), Fraction(0))
    return Pmf.from_dict({e: Fraction(c.constant_term()) / total for e, c in coeffs.items()})


def check_UR_marginals(m: int, r: int, k: int) -> bool:
    law = exact_UR_law(m, r, k)
    gf = rk_unl_rep_gf(m, r, k)
    return law.marginal(0) == law_from_gf(gf, "x") and law.marginal(1) == law_from_gf(gf, "y")


def check_ppf_UR_marginals(n: int) -> bool:
    law = ppf_UR_law(n)
    gf = ppf_unl_rep_gf(n)
    return law.marginal(0) == law_from_gf(gf, "x") and law.marginal(1) == law_from_gf(gf, "y")


def binomial_pmf(trials: int, prob: Fraction) -> Pmf:
    prob = Fraction(prob)
    return Pmf(
        tuple(range(trials + 1)),
        tuple(math.comb(trials, j) * prob ** j * (1 - prob) ** (trials - j) for j in range(trials + 1)),
    )


def poisson_binomial_pmf(probs: Sequence[Fraction]) -> Pmf:
    dist = [Fraction(1)]
    for pr in probs:
        pr = Fraction(pr)
        nxt = [Fraction(0)] * (len(dist) + 1)
        for j, a in enumerate(dist):
            nxt[j] += a * (1 - pr)
            nxt[j + 1] += a * pr
        dist = nxt
    return Pmf(tuple(range(len(dist))), tuple(dist))


# -- distances (floating point from here on) ------------------------------------

def tv_to_poisson(law: Pmf, lam: float) -> float:
    """Total variation to Poisson(lam), counting the Poisson tail beyond the support."""
    probs = law.as_dict()
    top = max(law.support)
    diff = 0.0
    pois_mass = 0.0
    log_lam = math.log(lam)
    for j in range(top + 1):
        pj = math.exp(j * log_lam - lam - math.lgamma(j + 1))
        pois_mass += pj
        diff += abs(float(probs.get(j, 0)) - pj)
    diff += max(0.0, 1.0 - pois_mass)
    return diff / 2


def _phi(z: float) -> float:
    return 0.5 * (1.0 + math.erf(z / math.sqrt(2.0)))


def ks_to_normal(law: Pmf) -> float:
    """Kolmogorov distance of the standardised law to the standard normal.

    Standardisation uses the exact mean and variance; both one-sided limits
    of the step CDF are compared at every atom.
    """
    mu = law.mean()
    var = law.variance()
    if var == 0:
        return 0.5
    sigma = math.sqrt(var)
    cdf_before = Fraction(0)
    worst = 0.0
    for v, pr in zip(law.support, law.probs):
        z = float(Fraction(v) - mu) / sigma
        cdf_after = cdf_before + pr
        g = _phi(z)
        worst = max(worst, abs(float(cdf_before) - g), abs(float(cdf_after) - g))
        cdf_before = cdf_after
    return worst


@dataclass(frozen=True)
class LimitRow:
    family: str
    m: int
    c: int
    r: int
    tv_R: float
    tv_L: float
    ks_U: float


def limit_row(m: int, c: int, r: int) -> LimitRow:
    """Distances at one m for the (r, k)-parking family with k = cm + r."""
    k = c * m + r
    denom = k + m * r
    repeats = binomial_pmf(m - 1, Fraction(1, denom))
    # L_s - 1 has the same law as R: both read off y(y + k + mr - 1)^(m-1)
    unlucky = poisson_binomial_pmf([Fraction(i, denom) for i in range(1, m)])
    lam = 1.0 / (c + r)
    tv = tv_to_poisson(repeats, lam)
    return LimitRow("rk", m, c, r, tv, tv, ks_to_normal(unlucky))


def ppf_limit_row(n: int) -> LimitRow:
    repeats = binomial_pmf(n - 1, Fraction(1, n - 1))
    unlucky = poisson_binomial_pmf([Fraction(i, n - 1) for i in range(1, n)])
    tv = tv_to_poisson(repeats, 1.0)
    return LimitRow("ppf", n, 0, 0, tv, tv, ks_to_normal(unlucky))


@dataclass(frozen=True)
class LimitReport:
    rows: Tuple[LimitRow, ...]
    tv_threshold: float = 0.01
    ks_threshold: float = 0.05

    @property
    def monotone(self) -> bool:
        def dec(vals):
            return all(b < a for a, b in zip(vals, vals[1:]))

        return dec([row.tv_R for row in self.rows]) and dec([row.ks_U for row in self.rows])

    @property
    def below_thresholds(self) -> bool:
        last = self.rows[-1]
        return last.tv_R < self.tv_threshold and last.ks_U < self.ks_threshold

    @property
    def ok(self) -> bool:
        return self.monotone and self.below_thresholds


def limit_checks(m: int, c: int, r: int, ladder: Sequence[int] = ()) -> LimitReport:
    """Distances at m and at each smaller size in ``ladder`` (ascending order)."""
    sizes = sorted(set(ladder) | {m})
    return LimitReport(tuple(limit_row(s, c, r) for s in sizes))


def ppf_limit_checks(n: int, ladder: Sequence[int] = ()) -> LimitReport:
    sizes = sorted(set(ladder) | {n})
    return LimitReport(tuple(ppf_limit_row(s) for s in sizes))


# -- CSV ------------------------------------------------------------------------

def rational_str(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def pmf_csv(law: Pmf, header: Sequence[str] = ("k", "prob")) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(header)
    for v, pr in zip(law.support, law.probs):
        vals = list(v) if isinstance(v, tuple) else [v]
        out.writerow(vals + [rational_str(pr)])
    return buf.getvalue()


def limits_csv(report: LimitReport) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["family", "m", "c", "r", "tv_R", "tv_L", "ks_U"])
    for row in report.rows:
        out.writerow([row.family, row.m, row.c, row.r, f"{row.tv_R:.10f}", f"{row.tv_L:.10f}", f"{row.ks_U:.10f}"])
    return buf.getvalue()
