"""Noncommutative algebras given by generators and commutator rewrite rules.

Elements are kept in PBW normal form: monomials are exponent vectors over a
fixed generator order, and products are normal-ordered by repeatedly
replacing an out-of-order adjacent pair ``h g`` (``h > g``) with
``g h + [h, g]``.  Coefficients are flat scalar maps (see
:mod:`qhopf.coeffring`), truncated at the deformation order ``N``.

Coordinate algebras whose relations have unbounded degree carry a degree
cap ``D``.  Since every rewrite that lowers the degree also raises the
deformation order, terms are truncated on the weight ``degree + k``; the
kept range ``weight <= D + N`` is a two-sided ideal and contains every term
of degree ``<= D`` at every order ``k <= N``.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .coeffring import (
    ScalarSeries,
    as_scalar,
    eliminate_s_key,
    fmt_rational,
    fmt_scalar_key,
    specialize_mu_key,
)
from .errors import NonNilpotentArgument, RankOverflow

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

ONE = Fraction(1)
MAX_RANK = 3


def _add_into(out: dict, key, c):
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class RewriteSystem:
    """Generator order plus the commutators of every out-of-order pair.

    ``rules[(h, g)]`` (indices, ``h > g``) holds ``[h, g]`` as a flat
    rank-1 term map; pairs without a rule commute.
    """

    def __init__(self, names: Sequence[str], order: int = 4, degree_cap: int | None = None,
                 param: str = "z", label: str = ""):
        self.names = tuple(names)
        self.n = len(self.names)
        self.index = {name: i for i, name in enumerate(self.names)}
        self.order = order
        self.degree_cap = degree_cap
        self.param = param
        self.label = label
        self.rules: dict[tuple[int, int], dict] = {}
        self.unit = (0,) * self.n
        self._cache: dict = {}

    # -- configuration ------------------------------------------------------

    @property
    def weight_cap(self):
        if self.degree_cap is None:
            return None
        return self.degree_cap + self.order

    def set_bracket(self, a: str, b: str, value: "Element"):
        """Declare ``[a, b] = value``."""
        i, j = self.index[a], self.index[b]
        if i == j:
            raise ValueError("bracket of a generator with itself")
        if value.rank != 1:
            raise ValueError("bracket values are rank-1 elements")
        terms = {(m[0], k, s, mu): c for (m, k, s, mu), c in value.terms.items()}
        if i < j:
            i, j = j, i
            terms = {key: -c for key, c in terms.items()}
        if terms:
            self.rules[(i, j)] = terms
        else:
            self.rules.pop((i, j), None)
        self._cache.clear()

    def bracket_value(self, a: str, b: str) -> "Element":
        i, j = self.index[a], self.index[b]
        sign = 1
        if i < j:
            i, j, sign = j, i, -1
        terms = self.rules.get((i, j), {})
        return Element(self, 1, {((m,), k, s, mu): sign * c for (m, k, s, mu), c in terms.items()})

    def copy(self, order: int | None = None, degree_cap="same", param=None, label=None) -> "RewriteSystem":
        """Same presentation at a (lower) truncation."""
        new = RewriteSystem(self.names, self.order if order is None else order,
                            self.degree_cap if degree_cap == "same" else degree_cap,
                            self.param if param is None else param,
                            self.label if label is None else label)
        for key, terms in self.rules.items():
            kept = {t: c for t, c in terms.items() if new._keep(sum(t[0]), t[1])}
            if kept:
                new.rules[key] = kept
        return new

    def same_presentation(self, other: "RewriteSystem") -> bool:
        return self.names == other.names and self.rules == other.rules

    # -- truncation -----------------------------------------------------------

    def _keep(self, degree: int, k: int) -> bool:
        if k > self.order:
            return False
        cap = self.weight_cap
        return cap is None or degree + k <= cap

    # -- normal ordering ------------------------------------------------------

    def mul_mono(self, a: tuple, b: tuple) -> dict:
        """Normal form of ``a * b`` as ``{(mono, k, s, mu): coeff}``."""
        key = (a, b)
        r = self._cache.get(key)
        if r is None:
            r = self._mul_mono(a, b)
            self._cache[key] = r
        return r

    def _mul_mono(self, a, b):
        n = self.n
        la = -1
        for i in range(n - 1, -1, -1):
            if a[i]:
                la = i
                break
        fb = n
        for i in range(n):
            if b[i]:
                fb = i
                break
        if la <= fb:
            m = tuple(x + y for x, y in zip(a, b))
            return {(m, 0, 0, 0): ONE} if self._keep(sum(m), 0) else {}
        out: dict = {}
        eg = tuple(1 if i == fb else 0 for i in range(n))
        if sum(b) > 1:
            rest = tuple(x - 1 if i == fb else x for i, x in enumerate(b))
            for (m, k, s, mu), c in self.mul_mono(a, eg).items():
                for (m2, k2, s2, mu2), c2 in self.mul_mono(m, rest).items():
                    kk = k + k2
                    if self._keep(sum(m2), kk):
                        _add_into(out, (m2, kk, s + s2, mu + mu2), c * c2)
            return out
        # b is the single generator g = fb < h = la
        h = la
        eh = tuple(1 if i == h else 0 for i in range(n))
        a1 = tuple(x - 1 if i == h else x for i, x in enumerate(a))
        for (m, k, s, mu), c in self.mul_mono(a1, eg).items():
            for (m2, k2, s2, mu2), c2 in self.mul_mono(m, eh).items():
                kk = k + k2
                if self._keep(sum(m2), kk):
                    _add_into(out, (m2, kk, s + s2, mu + mu2), c * c2)
        for (u, k, s, mu), c in self.rules.get((h, fb), {}).items():
            for (m2, k2, s2, mu2), c2 in self.mul_mono(a1, u).items():
                kk = k + k2
                if self._keep(sum(m2), kk):
                    _add_into(out, (m2, kk, s + s2, mu + mu2), c * c2)
        return out

    # -- element constructors ---------------------------------------------------

    def mono(self, name: str, exp: int = 1) -> tuple:
        m = [0] * self.n
        m[self.index[name]] = exp
        return tuple(m)

    def gen(self, name: str) -> "Element":
        return Element(self, 1, {((self.mono(name),), 0, 0, 0): ONE})

    def gens(self, *names):
        return [self.gen(nm) for nm in names]

    def one(self, rank: int = 1) -> "Element":
        return Element(self, rank, {((self.unit,) * rank, 0, 0, 0): ONE})

    def zero(self, rank: int = 1) -> "Element":
        return Element(self, rank, {})

    def scalar(self, c=1, k=0, s=0, mu=0, rank: int = 1) -> "Element":
        return self.one(rank).scale(c, k, s, mu)

    def t(self, power: int = 1, rank: int = 1) -> "Element":
        """The deformation parameter (to ``power``) as an element."""
        return self.scalar(1, power, rank=rank)

    def mono_str(self, m: tuple) -> str:
        parts = []
        for i, e in enumerate(m):
            if e == 1:
                parts.append(self.names[i])
            elif e:
                parts.append(f"{self.names[i]}^{e}")
        return "*".join(parts) or "1"

    def __repr__(self):
        return f"RewriteSystem({self.label or ','.join(self.names)}, N={self.order}, D={self.degree_cap})"


class Element:
    """Normal-ordered element of a tensor power (rank 0..3) of an algebra.

    Rank 0 elements are scalars, rank 1 elements live in the algebra
    itself, and ranks 2 and 3 are tensor products where each slot is
    normal-ordered independently.
    """

    __slots__ = ("alg", "rank", "terms")

    def __init__(self, alg: RewriteSystem, rank: int, terms: dict | None = None):
        if rank > MAX_RANK:
            raise RankOverflow(rank)
        self.alg = alg
        self.rank = rank
        self.terms = terms if terms is not None else {}

    # -- basic arithmetic -----------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError(type(other))
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch {self.rank} vs {other.rank}")
        if other.alg is not self.alg and not self.alg.same_presentation(other.alg):
            raise ValueError("elements of different algebras")

    def _lift(self, other):
        if isinstance(other, Element):
            return other
        return self.alg.one(self.rank).scale_by(as_scalar(other))

    def __add__(self, other):
        other = self._lift(other)
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            _add_into(out, key, c)
        return Element(self.alg, self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.alg, self.rank, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c=1, k=0, s=0, mu=0) -> "Element":
        c = Fraction(c)
        if not c:
            return self.alg.zero(self.rank)
        out = {}
        keep = self.alg._keep
        for (mons, k0, s0, m0), c0 in self.terms.items():
            kk = k0 + k
            if keep(sum(map(sum, mons)), kk):
                out[(mons, kk, s0 + s, m0 + mu)] = c0 * c
        return Element(self.alg, self.rank, out)

    def scale_by(self, sc: dict) -> "Element":
        out: dict = {}
        for (k, s, mu), c in sc.items():
            for key, c2 in self.scale(c, k, s, mu).terms.items():
                _add_into(out, key, c2)
        return Element(self.alg, self.rank, out)

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale_by(as_scalar(other))
        self._check(other)
        return Element(self.alg, self.rank, _product(self.alg, self.rank, self.terms, other.terms))

    def __rmul__(self, other):
        return self.scale_by(as_scalar(other))

    def __pow__(self, n: int):
        out = self.alg.one(self.rank)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._lift(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- inspection -------------------------------------------------------------

    def coeff(self, mons) -> ScalarSeries:
        """Scalar coefficient of a monomial tuple (or single monomial for rank 1)."""
        if self.rank == 1 and not isinstance(mons[0], tuple):
            mons = (mons,)
        mons = tuple(mons)
        sub = {(k, s, mu): c for (m, k, s, mu), c in self.terms.items() if m == mons}
        return ScalarSeries(sub, self.alg.order, self.alg.param)

    def monomials(self) -> list:
        return sorted({m for (m, _, _, _) in self.terms})

    def at_order(self, k: int) -> "Element":
        return Element(self.alg, self.rank,
                       {key: c for key, c in self.terms.items() if key[1] == k})

    def truncate(self, order: int) -> "Element":
        return Element(self.alg, self.rank,
                       {key: c for key, c in self.terms.items() if key[1] <= order})

    def min_order(self):
        return min((key[1] for key in self.terms), default=None)

    def orders(self) -> list[int]:
        return sorted({key[1] for key in self.terms})

    def generators_used(self) -> set:
        used = set()
        for (mons, _, _, _) in self.terms:
            for m in mons:
                for i, e in enumerate(m):
                    if e:
                        used.add(self.alg.names[i])
        return used

    def s_free(self) -> bool:
        return all(key[2] == 0 for key in self.terms)

    # -- coefficient-ring maps ------------------------------------------------------

    def eliminate_s(self, where: str = "") -> "Element":
        out: dict = {}
        for (mons, k, s, mu), c in self.terms.items():
            nk = eliminate_s_key((k, s, mu), where or None)
            _add_into(out, (mons,) + nk, c)
        return Element(self.alg, self.rank, out)

    def specialize_mu(self, value) -> "Element":
        out: dict = {}
        for (mons, k, s, mu), c in self.terms.items():
            (k2, s2, m2), c2 = specialize_mu_key((k, s, mu), c, value)
            if c2:
                _add_into(out, (mons, k2, s2, m2), c2)
        return Element(self.alg, self.rank, out)

    def substitute_param(self, sign: int = 1, s_exp: int = 0) -> "Element":
        """Replace ``t`` by ``sign * s**s_exp * t``."""
        out = {}
        for (mons, k, s, mu), c in self.terms.items():
            out[(mons, k, s + k * s_exp, mu)] = c * (sign**k)
        return Element(self.alg, self.rank, out)

    def rebase(self, alg: RewriteSystem) -> "Element":
        """Same terms viewed in another algebra, matching generators by name.

        Every generator used by ``self`` must exist in ``alg``; this is how
        elements of a subalgebra are compared with the ambient algebra.
        """
        if alg.names == self.alg.names:
            terms = {key: c for key, c in self.terms.items()
                     if alg._keep(sum(map(sum, key[0])), key[1])}
            return Element(alg, self.rank, terms)
        pos = []
        for name in self.alg.names:
            pos.append(alg.index.get(name))
        out: dict = {}
        for (mons, k, s, mu), c in self.terms.items():
            new = []
            for m in mons:
                v = [0] * alg.n
                for i, e in enumerate(m):
                    if e:
                        if pos[i] is None:
                            raise ValueError(f"{self.alg.names[i]} not a generator of {alg}")
                        v[pos[i]] = e
                new.append(tuple(v))
            if alg._keep(sum(map(sum, new)), k):
                _add_into(out, (tuple(new), k, s, mu), c)
        return Element(alg, self.rank, out)

    # -- rendering -------------------------------------------------------------

    def term_records(self) -> list:
        """Sorted ``[[slot strings..., scalar string], "p/q"]`` records."""
        alg = self.alg
        recs = []
        for (mons, k, s, mu), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][2], kv[0][3], kv[0][0])):
            labels = [alg.mono_str(m) for m in mons] + [fmt_scalar_key((k, s, mu), alg.param)]
            recs.append([labels, fmt_rational(c)])
        return recs

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for labels, c in self.term_records():
            body = " (x) ".join(labels[:-1]) if self.rank else ""
            parts.append(f"({c})*{labels[-1]}" + (f" {body}" if body else ""))
        return " + ".join(parts)


def _product(alg: RewriteSystem, rank: int, ta: dict, tb: dict) -> dict:
    N = alg.order
    cap = alg.weight_cap
    mul = alg.mul_mono
    out: dict = {}
    if rank == 0:
        for (_, ka, sa, ma), ca in ta.items():
            for (_, kb, sb, mb), cb in tb.items():
                kk = ka + kb
                if kk <= N:
                    _add_into(out, ((), kk, sa + sb, ma + mb), ca * cb)
        return out
    if rank == 1:
        for ((a,), ka, sa, ma), ca in ta.items():
            for ((b,), kb, sb, mb), cb in tb.items():
                k0 = ka + kb
                if k0 > N:
                    continue
                c0 = ca * cb
                for (m, k, s, mu), c in mul(a, b).items():
                    kk = k0 + k
                    if kk > N or (cap is not None and sum(m) + kk > cap):
                        continue
                    _add_into(out, ((m,), kk, sa + sb + s, ma + mb + mu), c0 * c)
        return out
    for (ma_, ka, sa, mua), ca in ta.items():
        for (mb_, kb, sb, mub), cb in tb.items():
            k0 = ka + kb
            if k0 > N:
                continue
            partial = [((), k0, sa + sb, mua + mub, ca * cb, 0)]
            for i in range(rank):
                nf = mul(ma_[i], mb_[i])
                nxt = []
                for (mons, k, s, mu, c, deg) in partial:
                    for (m, k2, s2, mu2), c2 in nf.items():
                        kk = k + k2
                        if kk > N:
                            continue
                        dd = deg + sum(m)
                        if cap is not None and dd + kk > cap:
                            continue
                        nxt.append((mons + (m,), kk, s + s2, mu + mu2, c * c2, dd))
                partial = nxt
                if not partial:
                    break
            for (mons, k, s, mu, c, _) in partial:
                _add_into(out, (mons, k, s, mu), c)
    return out


# ----------------------------------------------------------------------------
# operations


def normal_order(word: Iterable, alg: RewriteSystem) -> Element:
    """Normal form of a formal product.

    ``word`` items are generator names, ``(name, exponent)`` pairs, numbers,
    or rank-1 elements.
    """
    out = alg.one()
    for item in word:
        if isinstance(item, str):
            out = out * alg.gen(item)
        elif isinstance(item, tuple):
            out = out * Element(alg, 1, {((alg.mono(item[0], item[1]),), 0, 0, 0): ONE})
        elif isinstance(item, Element):
            out = out * item
        else:
            out = out.scale_by(as_scalar(item))
    return out


def commutator(a: Element, b: Element) -> Element:
    return a * b - b * a


def tensor(*factors: Element) -> Element:
    """Tensor product of rank-1 (or lower-rank) elements of one algebra."""
    alg = factors[0].alg
    rank = sum(f.rank for f in factors)
    if rank > MAX_RANK:
        raise RankOverflow(rank)
    terms = {((), 0, 0, 0): ONE}
    for f in factors:
        terms = _kron(alg, terms, f.terms)
    return Element(alg, rank, terms)


def _kron(alg, ta: dict, tb: dict) -> dict:
    out: dict = {}
    keep = alg._keep
    for (ma, ka, sa, mua), ca in ta.items():
        for (mb, kb, sb, mub), cb in tb.items():
            mons = ma + mb
            kk = ka + kb
            if keep(sum(map(sum, mons)), kk):
                _add_into(out, (mons, kk, sa + sb, mua + mub), ca * cb)
    return out


def flip(t: Element) -> Element:
    if t.rank != 2:
        raise ValueError("flip acts on rank-2 tensors")
    return Element(t.alg, 2, {((m[1], m[0]), k, s, mu): c for (m, k, s, mu), c in t.terms.items()})


def embed(t: Element, slots: str | tuple) -> Element:
    """Rank-2 tensor into rank 3 with the unit in the omitted slot (``"12"``, ``"13"``, ``"23"``)."""
    if t.rank != 2:
        raise ValueError("embed takes a rank-2 tensor")
    if isinstance(slots, str):
        slots = tuple(int(ch) for ch in slots)
    slots = tuple(sl - 1 for sl in slots)
    u = t.alg.unit
    out = {}
    for (m, k, s, mu), c in t.terms.items():
        new = [u, u, u]
        new[slots[0]] = m[0]
        new[slots[1]] = m[1]
        out[(tuple(new), k, s, mu)] = c
    return Element(t.alg, 3, out)


def apply_series(coeffs: Sequence, x: Element) -> Element:
    """``sum_k coeffs[k] * x**k``, truncated.

    Coefficients may be rationals or flat scalar maps (for series whose
    Taylor coefficients involve ``mu``).  ``x`` must be topologically
    nilpotent under the configured truncation.
    """
    alg = x.alg
    for (mons, k, _, _), _c in x.terms.items():
        deg = sum(map(sum, mons))
        if k == 0 and (deg == 0 or alg.degree_cap is None):
            raise NonNilpotentArgument(repr(x))
    out = alg.zero(x.rank)
    power = alg.one(x.rank)
    for k, c in enumerate(coeffs):
        if k:
            power = power * x
            if not power.terms:
                break
        sc = as_scalar(c)
        if sc:
            out = out + power.scale_by(sc)
    else:
        if power.terms and (power * x).terms:
            raise NonNilpotentArgument("series table too short for the truncation order")
    return out


def series_length(alg: RewriteSystem) -> int:
    """Number of Taylor terms that can survive truncation for a nilpotent argument."""
    if alg.degree_cap is None:
        return alg.order + 1
    return alg.weight_cap + 1


def _image_of_mono(m: tuple, images: Mapping[int, Element], one: Element, anti: bool, cache: dict):
    r = cache.get(m)
    if r is not None:
        return r
    out = one
    idx = range(len(m))
    if anti:
        idx = reversed(idx)
    for i in idx:
        for _ in range(m[i]):
            out = out * images[i]
    cache[m] = out
    return out


def _index_images(alg: RewriteSystem, images: Mapping) -> dict:
    return {alg.index[g] if isinstance(g, str) else g: v for g, v in images.items()}


def apply_morphism(x: Element, images: Mapping, anti: bool = False, cache: dict | None = None) -> Element:
    """Extend generator images multiplicatively (or anti-multiplicatively) to a rank-1 element."""
    if x.rank != 1:
        raise ValueError("apply_morphism takes a rank-1 element")
    return map_tensor(x, 0, images, anti=anti, cache=cache)


def map_tensor(t: Element, slot: int, images: Mapping, anti: bool = False, cache: dict | None = None) -> Element:
    """Apply a generator-defined (anti)morphism in one tensor slot.

    Images may have any rank; the result rank is ``t.rank - 1 + image rank``.
    Images must live in ``t``'s algebra.
    """
    alg = t.alg
    imgs = _index_images(alg, images)
    missing = [i for i in range(alg.n) if i not in imgs]
    if missing:
        raise ValueError(f"no image for generators {[alg.names[i] for i in missing]}")
    img_rank = next(iter(imgs.values())).rank
    new_rank = t.rank - 1 + img_rank
    if new_rank > MAX_RANK:
        raise RankOverflow(new_rank)
    one = alg.one(img_rank)
    cache = {} if cache is None else cache
    out: dict = {}
    keep = alg._keep
    for (mons, k, s, mu), c in t.terms.items():
        img = _image_of_mono(mons[slot], imgs, one, anti, cache)
        pre, post = mons[:slot], mons[slot + 1:]
        base = sum(map(sum, pre)) + sum(map(sum, post))
        for (im, k2, s2, mu2), c2 in img.terms.items():
            kk = k + k2
            nm = pre + im + post
            if keep(base + sum(map(sum, im)), kk):
                _add_into(out, (nm, kk, s + s2, mu + mu2), c * c2)
    return Element(alg, new_rank, out)


def convert(t: Element, images: Mapping, target: RewriteSystem) -> Element:
    """Push every slot of ``t`` through an algebra morphism into ``target``.

    ``images`` maps each source generator to a rank-1 element of ``target``.
    """
    src = t.alg
    imgs = _index_images(src, images)
    one = target.one(1)
    cache: dict = {}
    out: dict = {}
    keep = target._keep
    for (mons, k, s, mu), c in t.terms.items():
        if t.rank == 0:
            piece = target.one(0)
        else:
            parts = [_image_of_mono(m, imgs, one, False, cache) for m in mons]
            piece = tensor(*parts) if t.rank > 1 else parts[0]
        for (pm, k2, s2, mu2), c2 in piece.terms.items():
            kk = k + k2
            if keep(sum(map(sum, pm)), kk):
                _add_into(out, (pm, kk, s + s2, mu + mu2), c * c2)
    return Element(target, t.rank, out)


def multiply_slots(t: Element) -> Element:
    """The multiplication map ``a (x) b -> a b`` on a rank-2 tensor."""
    if t.rank != 2:
        raise ValueError("multiply_slots takes a rank-2 tensor")
    alg = t.alg
    out: dict = {}
    for ((a, b), k, s, mu), c in t.terms.items():
        for (m, k2, s2, mu2), c2 in alg.mul_mono(a, b).items():
            kk = k + k2
            if alg._keep(sum(m), kk):
                _add_into(out, ((m,), kk, s + s2, mu + mu2), c * c2)
    return Element(alg, 1, out)


def wedge(a: Element, b: Element) -> Element:
    """``a (x) b - b (x) a``."""
    return tensor(a, b) - tensor(b, a)
