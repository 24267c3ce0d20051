"""Exact arithmetic: sparse polynomials over the rationals and truncated series.

Every generating function in the package is a :class:`Polynomial` in the
fixed alphabet ``x, y, z, w, p, q, t``.  Coefficients are Python ints when
integral and :class:`fractions.Fraction` otherwise; no floats ever enter.
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple, Union

VARS: Tuple[str, ...] = ("x", "y", "z", "w", "p", "q", "t")
NVARS = len(VARS)
_INDEX = {v: i for i, v in enumerate(VARS)}
_ZERO_EXP = (0,) * NVARS

Exps = Tuple[int, ...]
Coef = Union[int, Fraction]
Scalar = Union[int, Fraction]


class DomainError(ValueError):
    """Raised when a series operation's precondition fails."""


def _norm(c) -> Coef:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"non-exact coefficient {c!r}")


def _grlex_key(exps: Exps):
    return (sum(exps), exps)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent 7-tuples to coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exps, Scalar] | None = None):
        clean: Dict[Exps, Coef] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != NVARS:
                    raise ValueError(f"exponent vector {e!r} must have length {NVARS}")
                c = _norm(c)
                if c:
                    clean[tuple(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exps, Coef]) -> "Polynomial":
        # caller guarantees normalized, zero-free terms
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "Polynomial":
        c = _norm(c)
        return cls._raw({_ZERO_EXP: c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Polynomial":
        e = [0] * NVARS
        e[_INDEX[name]] = power
        return cls._raw({tuple(e): 1})

    @classmethod
    def monomial(cls, coef: Scalar = 1, **powers: int) -> "Polynomial":
        e = [0] * NVARS
        for name, k in powers.items():
            e[_INDEX[name]] = k
        return cls({tuple(e): coef})

    @property
    def terms(self) -> Dict[Exps, Coef]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (descending graded-lex) order."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == _ZERO_EXP for e in self._terms)

    def constant_term(self) -> Coef:
        return self._terms.get(_ZERO_EXP, 0)

    def degree(self, name: str) -> int:
        i = _INDEX[name]
        return max((e[i] for e in self._terms), default=0)

    def variables(self) -> set:
        return {VARS[i] for e in self._terms for i in range(NVARS) if e[i]}

    def coeff(self, **powers: int) -> Coef:
        e = [0] * NVARS
        for name, k in powers.items():
            e[_INDEX[name]] = k
        return self._terms.get(tuple(e), 0)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Exps, Coef] = {}
        bt = list(other._terms.items())
        for e1, c1 in self._terms.items():
            for e2, c2 in bt:
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw({e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        """Division by a non-zero scalar only."""
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial divided by zero")
            inv = Fraction(1) / other
            return Polynomial._raw({e: _norm(c * inv) for e, c in self._terms.items()})
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- substitution -----------------------------------------------------

    def subst(self, bindings: Mapping[str, Union[Scalar, "Polynomial"]]) -> "Polynomial":
        """Replace bound variables by scalars or polynomials."""
        if not bindings:
            return self
        idx = {}
        for name, val in bindings.items():
            if name not in _INDEX:
                raise KeyError(f"unknown variable {name!r}")
            idx[_INDEX[name]] = val
        if all(not isinstance(v, Polynomial) for v in idx.values()):
            return self._subst_scalar(idx)
        powcache: Dict[Tuple[int, int], Polynomial] = {}
        out = Polynomial.const(0)
        for e, c in self._terms.items():
            rest = list(e)
            factor = Polynomial.const(c)
            for i, val in idx.items():
                k = e[i]
                rest[i] = 0
                if k:
                    if isinstance(val, Polynomial):
                        key = (i, k)
                        if key not in powcache:
                            powcache[key] = val ** k
                        factor = factor * powcache[key]
                    else:
                        factor = factor * (Fraction(val) ** k)
            out = out + factor * Polynomial._raw({tuple(rest): 1})
        return out

    def _subst_scalar(self, idx) -> "Polynomial":
        out: Dict[Exps, Coef] = {}
        for e, c in self._terms.items():
            rest = list(e)
            for i, val in idx.items():
                k = e[i]
                if k:
                    c = c * val ** k
                rest[i] = 0
            if c:
                key = tuple(rest)
                out[key] = out.get(key, 0) + c
        return Polynomial._raw({e: _norm(c) for e, c in out.items() if c})

    def evaluate(self, **values: Scalar) -> Coef:
        """Fully evaluate at scalar values (unbound variables must not occur)."""
        res = self._subst_scalar({_INDEX[k]: v for k, v in values.items()})
        if not res.is_constant():
            raise ValueError(f"variables {sorted(res.variables())} left unbound")
        return res.constant_term()

    def coefficients_in(self, name: str) -> Dict[int, "Polynomial"]:
        """Split by powers of one variable: {k: coefficient polynomial}."""
        i = _INDEX[name]
        buckets: Dict[int, Dict[Exps, Coef]] = {}
        for e, c in self._terms.items():
            rest = e[:i] + (0,) + e[i + 1:]
            buckets.setdefault(e[i], {})[rest] = c
        return {k: Polynomial._raw(v) for k, v in sorted(buckets.items())}

    def divide_by_var(self, name: str, power: int = 1) -> "Polynomial":
        """Exact division by ``name**power``; raises if not divisible."""
        i = _INDEX[name]
        out = {}
        for e, c in self._terms.items():
            if e[i] < power:
                raise ArithmeticError(f"not divisible by {name}^{power}")
            out[e[:i] + (e[i] - power,) + e[i + 1:]] = c
        return Polynomial._raw(out)

    # -- printing / serialization -------------------------------------------

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(
                (VARS[i] if k == 1 else f"{VARS[i]}^{k}") for i, k in enumerate(e) if k
            )
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            parts.append(("-" if neg else "+", body))
        sign, body = parts[0]
        s = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def to_json_obj(self) -> dict:
        terms = []
        for e, c in self.items():
            f = Fraction(c)
            terms.append({"coef": f"{f.numerator}/{f.denominator}", "exps": list(e)})
        return {"vars": list(VARS), "terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Polynomial":
        if list(obj.get("vars", [])) != list(VARS):
            raise ValueError(f"expected vars {list(VARS)}")
        terms: Dict[Exps, Coef] = {}
        for t in obj["terms"]:
            exps = tuple(int(k) for k in t["exps"])
            if len(exps) != NVARS or min(exps) < 0:
                raise ValueError(f"bad exponent vector {t['exps']!r}")
            if exps in terms:
                raise ValueError(f"duplicate term {exps}")
            terms[exps] = Fraction(t["coef"])
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        return cls.from_json_obj(json.loads(text))


ZERO = Polynomial.const(0)
ONE = Polynomial.const(1)
x, y, z, w, p, q, t = (Polynomial.var(v) for v in VARS)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_subst(a: Polynomial, bindings) -> Polynomial:
    return a.subst(bindings)


def poly_sum(polys: Iterable[Polynomial]) -> Polynomial:
    acc: Dict[Exps, Coef] = {}
    for P in polys:
        for e, c in P._terms.items():
            acc[e] = acc.get(e, 0) + c
    return Polynomial._raw({e: _norm(c) for e, c in acc.items() if c})


def poly_prod(polys: Iterable[Polynomial]) -> Polynomial:
    out = ONE
    for P in polys:
        out = out * P
    return out


def geometric(var: Polynomial, lo: int, hi: int) -> Polynomial:
    """``var**lo + ... + var**hi`` (zero when ``hi < lo``)."""
    return poly_sum(var ** k for k in range(lo, hi + 1))


def from_counts(counts: Mapping[Exps, int]) -> Polynomial:
    """Build a polynomial from an exponent-tuple -> multiplicity table."""
    return Polynomial({e: c for e, c in counts.items()})


class TruncatedSeries:
    """Power series sum_{k<=order} coeffs[k] * T**k with Polynomial coefficients.

    ``T`` is a formal series variable kept apart from the polynomial
    alphabet, so coefficients may themselves involve any of ``VARS``.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        cs = [c if isinstance(c, Polynomial) else Polynomial.const(c) for c in coeffs]
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = (cs + [ZERO] * (order + 1))[: order + 1]
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def from_egf(cls, values: Iterable, order: int) -> "TruncatedSeries":
        """Series with coefficient ``values[n] / n!``."""
        cs = []
        fact = 1
        for n, v in enumerate(values):
            if n > order:
                break
            if n:
                fact *= n
            v = v if isinstance(v, Polynomial) else Polynomial.const(v)
            cs.append(v / fact)
        return cls(cs, order)

    def egf_coefficients(self):
        """Coefficients multiplied by n!, i.e. the sequence this series is the EGF of."""
        out = []
        fact = 1
        for n, c in enumerate(self.coeffs):
            if n:
                fact *= n
            out.append(c * fact)
        return out

    def _check(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise ValueError("series orders differ")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], self.order)
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([a * other for a in self.coeffs], self.order)
        self._check(other)
        n = self.order
        out = []
        for k in range(n + 1):
            out.append(poly_sum(self.coeffs[i] * other.coeffs[k - i] for i in range(k + 1)))
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) for s with zero constant term, via n e_n = sum_k k s_k e_{n-k}."""
    if not s.coeffs[0].is_zero():
        raise DomainError("series_exp needs a zero constant term")
    e = [ONE]
    for n in range(1, s.order + 1):
        acc = poly_sum(k * s.coeffs[k] * e[n - k] for k in range(1, n + 1))
        e.append(acc / n)
    return TruncatedSeries(e, s.order)


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """log(s) for s with constant term 1."""
    if s.coeffs[0] != ONE:
        raise DomainError("series_log needs constant term 1")
    out = [ZERO]
    for n in range(1, s.order + 1):
        acc = poly_sum(k * out[k] * s.coeffs[n - k] for k in range(1, n))
        out.append(s.coeffs[n] - acc / n)
    return TruncatedSeries(out, s.order)


def series_inverse(s: TruncatedSeries) -> TruncatedSeries:
    """1/s; the constant term must be a non-zero rational."""
    a0 = s.coeffs[0]
    if not a0.is_constant() or a0.is_zero():
        raise DomainError("series_inverse needs an invertible (non-zero scalar) constant term")
    inv0 = Fraction(1) / Fraction(a0.constant_term())
    b = [Polynomial.const(inv0)]
    for n in range(1, s.order + 1):
        acc = poly_sum(s.coeffs[k] * b[n - k] for k in range(1, n + 1))
        b.append(acc * (-inv0))
    return TruncatedSeries(b, s.order)
