"""Commutative polynomials with rational coefficients over named variables.

Used for the classical layer (functions on G_mu, 4x4 matrix entries) and for
the exact division that defines the factor L of the contracted R-matrix.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from .coeffring import fmt_rational


class Poly:
    """Sparse polynomial ``{exponent tuple: Fraction}`` over ``vars``."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str], terms: Mapping | None = None):
        self.vars = tuple(vars)
        self.terms = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[tuple(e)] = c

    # -- constructors ---------------------------------------------------------

    @classmethod
    def const(cls, vars, c=1):
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars, name, power: int = 1):
        vars = tuple(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = power
        return cls(vars, {tuple(e): 1})

    def _new(self, terms):
        out = object.__new__(type(self))
        out.vars = self.vars
        out.terms = {e: c for e, c in terms.items() if c}
        return out

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError("polynomials over different variables")
            return other
        return self._new({(0,) * len(self.vars): Fraction(other)})

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._new(out).reduce()

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = self._coerce(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self - other).terms == {}

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def reduce(self):
        """Hook for quotient rings; plain polynomials are already canonical."""
        return self

    # -- structure ----------------------------------------------------------------

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def coeff_of(self, name: str, power: int) -> "Poly":
        """Coefficient of ``name**power`` (a polynomial in the other variables)."""
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return self._new(out)

    def diff(self, name: str) -> "Poly":
        i = self.vars.index(name)
        out: dict = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                e2 = tuple(e2)
                out[e2] = out.get(e2, 0) + c * e[i]
        return self._new(out)

    def subs(self, values: Mapping[str, object]) -> "Poly":
        """Substitute polynomials (or rationals) for some variables."""
        out = self._coerce(0)
        cache: dict = {}
        for e, c in self.terms.items():
            term = self._coerce(c)
            rest = list(e)
            for i, name in enumerate(self.vars):
                if e[i] and name in values:
                    key = (name, e[i])
                    if key not in cache:
                        cache[key] = self._coerce(values[name]) ** e[i]
                    term = term * cache[key]
                    rest[i] = 0
            mono = self._new({tuple(rest): 1})
            out = out + term * mono
        return out

    def leading(self, order: Iterable[str] | None = None):
        """Lex-leading (exponents, coeff) for the given variable priority."""
        idx = [self.vars.index(v) for v in (order or self.vars)]
        e = max(self.terms, key=lambda x: tuple(x[i] for i in idx))
        return e, self.terms[e]

    def divmod(self, other: "Poly", order: Iterable[str] | None = None):
        """Multivariate division by one polynomial (lex order); returns (q, r)."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        order = tuple(order or self.vars)
        le, lc = other.leading(order)
        q = self._coerce(0)
        r = self._coerce(0)
        p = self
        while p:
            e, c = p.leading(order)
            if all(a >= b for a, b in zip(e, le)):
                t = self._new({tuple(a - b for a, b in zip(e, le)): c / lc})
                q = q + t
                p = p - Poly.__mul__(t, other)
            else:
                t = self._new({e: c})
                r = r + t
                p = p - t
        return q, r

    def exact_div(self, other: "Poly", order=None) -> "Poly":
        q, r = self.divmod(other, order)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- rendering ----------------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(v if p == 1 else f"{v}^{p}" for v, p in zip(self.vars, e) if p)
            parts.append(f"({fmt_rational(c)})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def records(self) -> list:
        """Deterministic ``[[monomial, "p/q"], ...]`` rendering."""
        out = []
        for e in sorted(self.terms):
            mono = "*".join(v if p == 1 else f"{v}^{p}" for v, p in zip(self.vars, e) if p) or "1"
            out.append([mono, fmt_rational(self.terms[e])])
        return out


# ---------------------------------------------------------------------------
# functions on G_mu

COORDS = ("theta", "d", "p1", "p2", "c1", "c2")
SYMBOLS = ("E", "Ei", "C", "S")
PARAMS = ("mu", "w")


def fun_vars(copies: int = 1) -> tuple:
    """Variable names for one copy (plain) or several copies (suffixed _1, _2, ...)."""
    if copies == 1:
        return COORDS + SYMBOLS + PARAMS
    out = []
    for i in range(1, copies + 1):
        out += [f"{v}_{i}" for v in COORDS + SYMBOLS]
    return tuple(out) + PARAMS


def _suffixes(vars_) -> list:
    return sorted({v[v.index("E") + 1:] for v in vars_ if v.startswith("E") and not v.startswith("Ei")})


class GFun(Poly):
    """Polynomial in theta, d, p_i, c_i, E = e^d, Ei = e^-d, C = C_-mu(theta),
    S = S_-mu(theta), mu, w, reduced by ``E Ei = 1`` and ``C**2 = 1 + mu S**2``.
    """

    __slots__ = ()
    _layout: dict = {}

    def _rules(self):
        lay = GFun._layout.get(self.vars)
        if lay is None:
            idx = {v: i for i, v in enumerate(self.vars)}
            rules = []
            for suf in _suffixes(self.vars):
                rules.append((idx["E" + suf], idx["Ei" + suf], idx["C" + suf], idx["S" + suf]))
            lay = (rules, idx.get("mu"))
            GFun._layout[self.vars] = lay
        return lay

    def reduce(self):
        rules, imu = self._rules()
        if not rules:
            return self
        out: dict = {}
        stack = list(self.terms.items())
        while stack:
            e, c = stack.pop()
            e = list(e)
            done = True
            for iE, iEi, iC, iS in rules:
                m = min(e[iE], e[iEi])
                if m:
                    e[iE] -= m
                    e[iEi] -= m
                if e[iC] >= 2:
                    # C^2 -> 1 + mu S^2
                    e1 = list(e)
                    e1[iC] -= 2
                    e2 = list(e1)
                    e2[iS] += 2
                    e2[imu] += 1
                    stack.append((tuple(e1), c))
                    stack.append((tuple(e2), c))
                    done = False
                    break
            if done:
                t = tuple(e)
                out[t] = out.get(t, 0) + c
        return self._new(out)

    def d_coord(self, name: str) -> "GFun":
        """Partial derivative along a coordinate, with the chain rule through E, Ei, C, S."""
        suf = name[name.index("_"):] if "_" in name else ""
        base = name[: len(name) - len(suf)]
        out = self.diff(name)
        if base == "d":
            out = out + self.diff("E" + suf) * self.var_(f"E{suf}") - self.diff("Ei" + suf) * self.var_(f"Ei{suf}")
        elif base == "theta":
            out = out + self.diff("C" + suf) * self.var_(f"S{suf}") * self.var_("mu") \
                + self.diff("S" + suf) * self.var_(f"C{suf}")
        return out.reduce()

    def var_(self, name):
        return type(self).var(self.vars, name)

    def specialize_mu(self, value) -> "GFun":
        return self.subs({"mu": value}).reduce()

    def expand(self, cap: int, names=COORDS) -> Poly:
        """Taylor expansion in the coordinates, total coordinate degree <= cap."""
        pv = tuple(names) + PARAMS
        d = Poly.var(pv, "d")
        th = Poly.var(pv, "theta")
        mu = Poly.var(pv, "mu")
        one = Poly.const(pv, 1)

        def series(x, coef):
            out = Poly(pv)
            p = one
            for k in range(cap + 1):
                c = coef(k)
                if c:
                    out = out + p * c
                p = _trunc(p * x, cap, names)
            return out

        sub = {
            "E": series(d, lambda k: Fraction(1, factorial(k))),
            "Ei": series(d, lambda k: Fraction((-1) ** k, factorial(k))),
            "C": _trunc(sum((th ** (2 * j) * mu ** j * Fraction(1, factorial(2 * j))
                             for j in range(cap // 2 + 1)), Poly(pv)), cap, names),
            "S": _trunc(sum((th ** (2 * j + 1) * mu ** j * Fraction(1, factorial(2 * j + 1))
                             for j in range((cap + 1) // 2)), Poly(pv)), cap, names),
        }
        for v in names + PARAMS:
            sub[v] = Poly.var(pv, v)
        out = Poly(pv)
        for e, c in self.terms.items():
            t = Poly.const(pv, c)
            for v, p in zip(self.vars, e):
                if p:
                    t = _trunc(t * sub[v] ** p, cap, names)
            out = out + t
        return _trunc(out, cap, names)


def _trunc(p: Poly, cap: int, names) -> Poly:
    idx = [p.vars.index(v) for v in names]
    return Poly(p.vars, {e: c for e, c in p.terms.items() if sum(e[i] for i in idx) <= cap})
