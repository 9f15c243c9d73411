"""Exact scalars: rationals, Laurent polynomials in the central symbols
``s`` (a formal square root of mu) and ``mu``, and truncated power series in
the deformation parameter.

Every scalar in the engine is stored as a map from an exponent key
``(k, a, b)`` to a :class:`fractions.Fraction`, meaning
``coeff * t**k * s**a * mu**b`` where ``t`` is the deformation parameter
(``z`` before contraction, ``w`` after).  :class:`ScalarSeries` wraps such a
map together with its truncation order.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from .errors import NonUnitConstantTerm, OddSPowerResidue

Rational = Fraction

MU_VALUES = (-1, 0, 1)


def fmt_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


# --------------------------------------------------------------------------
# univariate Laurent polynomials in a central symbol


class _Poly1:
    symbol = "?"

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        self.coeffs = {}
        for e, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                self.coeffs[int(e)] = c

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def var(cls):
        return cls({1: 1})

    def _new(self, coeffs):
        out = type(self).__new__(type(self))
        out.coeffs = {e: c for e, c in coeffs.items() if c}
        return out

    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            d[e] = d.get(e, 0) + c
        return self._new(d)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        d = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return self._new(d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = self._new({0: Fraction(1)})
        for _ in range(n):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, _Poly1):
            raise TypeError(f"cannot mix {type(self).__name__} and {type(other).__name__}")
        return type(self).const(other)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.symbol, tuple(sorted(self.coeffs.items()))))

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return set(self.coeffs) <= {0}

    def constant(self) -> Fraction:
        return self.coeffs.get(0, Fraction(0))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*{self.symbol}")
            else:
                parts.append(f"{c}*{self.symbol}^{e}")
        return " + ".join(parts)


class SPoly(_Poly1):
    """Laurent polynomial in the central symbol ``s`` (``s**2 == mu``)."""

    symbol = "s"


class MuPoly(_Poly1):
    """Polynomial in ``mu``."""

    symbol = "mu"

    def evaluate(self, value) -> Fraction:
        return evaluate_mu(self, value)


def evaluate_mu(x: MuPoly, value) -> Fraction:
    """Exact value of ``x`` at ``mu = value`` (one of -1, 0, +1)."""
    value = Fraction(value)
    total = Fraction(0)
    for e, c in x.coeffs.items():
        if e < 0:
            if value == 0:
                raise ZeroDivisionError("negative power of mu evaluated at 0")
            total += c / value ** (-e)
        else:
            total += c * value**e
    return total


# --------------------------------------------------------------------------
# flat scalar maps {(k, a, b): Fraction}


def scalar(c=1, k: int = 0, s: int = 0, mu: int = 0) -> dict:
    c = Fraction(c)
    return {(k, s, mu): c} if c else {}


def as_scalar(x) -> dict:
    """Normalize an int/Fraction/SPoly/MuPoly/ScalarSeries/dict to a flat map."""
    if isinstance(x, ScalarSeries):
        return dict(x.terms)
    if isinstance(x, SPoly):
        return {(0, e, 0): c for e, c in x.coeffs.items()}
    if isinstance(x, MuPoly):
        return {(0, 0, e): c for e, c in x.coeffs.items()}
    if isinstance(x, dict):
        return {k: Fraction(v) for k, v in x.items() if v}
    return scalar(x)


def scalar_mul(a: dict, b: dict, order: int | None = None) -> dict:
    out: dict = {}
    for (k1, s1, m1), c1 in a.items():
        for (k2, s2, m2), c2 in b.items():
            k = k1 + k2
            if order is not None and k > order:
                continue
            key = (k, s1 + s2, m1 + m2)
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def scalar_add(a: dict, b: dict, sign=1) -> dict:
    out = dict(a)
    for key, c in b.items():
        v = out.get(key, 0) + sign * c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def eliminate_s_key(key, where=None):
    """Map ``(k, a, b)`` with even ``a >= 0`` to ``(k, 0, b + a/2)``."""
    k, a, b = key
    if a % 2 or a < 0:
        raise OddSPowerResidue(key, where)
    return (k, 0, b + a // 2)


def specialize_mu_key(key, c, value):
    """Evaluate mu in a flat scalar term; returns (new_key, new_coeff)."""
    k, a, b = key
    if a:
        raise ValueError("eliminate s before fixing mu")
    if b == 0:
        return key, c
    if value == 0:
        return (k, 0, 0), Fraction(0)
    return (k, 0, 0), c * Fraction(value) ** b


def fmt_scalar_key(key, param="z") -> str:
    k, a, b = key
    parts = []
    if k:
        parts.append(param if k == 1 else f"{param}^{k}")
    if a:
        parts.append("s" if a == 1 else f"s^{a}")
    if b:
        parts.append("mu" if b == 1 else f"mu^{b}")
    return "*".join(parts) or "1"


# --------------------------------------------------------------------------
# truncated series in the deformation parameter


class ScalarSeries:
    """Truncated power series in the deformation parameter.

    Coefficients are Laurent polynomials in ``s`` and ``mu``; equality is
    coefficient-wise through ``order``.
    """

    __slots__ = ("terms", "order", "param")

    def __init__(self, terms=None, order: int = 4, param: str = "z"):
        self.order = order
        self.param = param
        self.terms = {k: c for k, c in as_scalar(terms or {}).items() if k[0] <= order}

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int = 4, param: str = "z"):
        """Series with rational ``coeffs[k]`` at power ``k``."""
        terms = {}
        for k, c in enumerate(coeffs):
            if k <= order and c:
                terms[(k, 0, 0)] = Fraction(c)
        return cls(terms, order, param)

    @classmethod
    def param_var(cls, order=4, param="z"):
        return cls({(1, 0, 0): 1}, order, param)

    def _coerce(self, other):
        if isinstance(other, ScalarSeries):
            return other
        return ScalarSeries(as_scalar(other), self.order, self.param)

    def _new(self, terms, order=None):
        out = ScalarSeries.__new__(ScalarSeries)
        out.order = self.order if order is None else order
        out.param = self.param
        out.terms = terms
        return out

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        t = scalar_add(self.terms, other.terms)
        return self._new({k: c for k, c in t.items() if k[0] <= order}, order)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return self._new(scalar_mul(self.terms, other.terms, order), order)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = self._new({(0, 0, 0): Fraction(1)})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, (ScalarSeries, int, Fraction, SPoly, MuPoly, dict)):
            return NotImplemented
        other = self._coerce(other)
        order = min(self.order, other.order)
        a = {k: c for k, c in self.terms.items() if k[0] <= order}
        b = {k: c for k, c in other.terms.items() if k[0] <= order}
        return a == b

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def truncate(self, order: int) -> "ScalarSeries":
        return self._new({k: c for k, c in self.terms.items() if k[0] <= order}, min(order, self.order))

    def powers(self) -> list[int]:
        return sorted({k[0] for k in self.terms})

    def coeff(self, k: int):
        """Coefficient of ``param**k`` as an SPoly or MuPoly."""
        sub = {key: c for key, c in self.terms.items() if key[0] == k}
        has_s = any(key[1] for key in sub)
        has_mu = any(key[2] for key in sub)
        if has_s and has_mu:
            raise ValueError("coefficient mixes s and mu")
        if has_mu:
            return MuPoly({key[2]: c for key, c in sub.items()})
        return SPoly({key[1]: c for key, c in sub.items()})

    def constant_term(self):
        return self.coeff(0)

    def as_pairs(self) -> list:
        """Ordered ``(power, coefficient-string)`` pairs for reports."""
        out = []
        for k in self.powers():
            poly = self.coeff(k)
            out.append((k, repr(poly)))
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            parts.append(f"{self.terms[key]}*{fmt_scalar_key(key, self.param)}")
        return " + ".join(parts) + f" + O({self.param}^{self.order + 1})"


def series_invert(u: ScalarSeries) -> ScalarSeries:
    """Multiplicative inverse of ``u`` through its truncation order."""
    c0 = {key: c for key, c in u.terms.items() if key[0] == 0}
    if not c0 or set(c0) != {(0, 0, 0)}:
        raise NonUnitConstantTerm(repr(u))
    a0 = c0[(0, 0, 0)]
    inv0 = 1 / a0
    v = {(0, 0, 0): inv0}
    # v_n = -(1/a0) * sum_{j=1..n} u_j v_{n-j}
    by_order: dict[int, dict] = {}
    for key, c in u.terms.items():
        by_order.setdefault(key[0], {})[key] = c
    v_by: dict[int, dict] = {0: {(0, 0, 0): inv0}}
    for n in range(1, u.order + 1):
        acc: dict = {}
        for j in range(1, n + 1):
            if j in by_order and (n - j) in v_by:
                acc = scalar_add(acc, scalar_mul(by_order[j], v_by[n - j]))
        v_by[n] = {key: -c * inv0 for key, c in acc.items()}
        v.update(v_by[n])
    return u._new({k: c for k, c in v.items() if c})


def eliminate_s(x: ScalarSeries) -> ScalarSeries:
    """Replace ``s**2`` by ``mu``; fails on any odd or negative power of ``s``."""
    out: dict = {}
    for key, c in x.terms.items():
        nk = eliminate_s_key(key, repr(x))
        out[nk] = out.get(nk, 0) + c
    return x._new({k: c for k, c in out.items() if c})


# --------------------------------------------------------------------------
# Taylor coefficient tables


def exp_coeffs(n: int) -> list[Fraction]:
    return [Fraction(1, factorial(k)) for k in range(n + 1)]


def sinh_coeffs(n: int) -> list[Fraction]:
    return [Fraction(1, factorial(k)) if k % 2 else Fraction(0) for k in range(n + 1)]


def cosh_coeffs(n: int) -> list[Fraction]:
    return [Fraction(0) if k % 2 else Fraction(1, factorial(k)) for k in range(n + 1)]


def sinhc_coeffs(n: int) -> list[Fraction]:
    """sinh(x)/x."""
    return [Fraction(0) if k % 2 else Fraction(1, factorial(k + 1)) for k in range(n + 1)]


def x_over_sinh_coeffs(n: int) -> list[Fraction]:
    """x/sinh(x), by exact inversion of sinh(x)/x."""
    u = ScalarSeries.from_coeffs(sinhc_coeffs(n), order=n)
    inv = series_invert(u)
    return [inv.terms.get((k, 0, 0), Fraction(0)) for k in range(n + 1)]


def gen_cos_coeffs(n: int) -> list[dict]:
    """C_{-mu}(x) = sum mu^j x^{2j}/(2j)!, as flat scalar coefficients."""
    return [scalar(Fraction(1, factorial(k)), mu=k // 2) if k % 2 == 0 else {} for k in range(n + 1)]


def gen_sin_coeffs(n: int) -> list[dict]:
    """S_{-mu}(x) = sum mu^j x^{2j+1}/(2j+1)!."""
    return [scalar(Fraction(1, factorial(k)), mu=k // 2) if k % 2 else {} for k in range(n + 1)]
