"""Lie algebras by structure constants: Jacobi identity and the classical YBE."""

from __future__ import annotations

from itertools import combinations

from ..coeffring import MuPoly

MU = MuPoly({1: 1})


def _mp(x) -> MuPoly:
    return x if isinstance(x, MuPoly) else MuPoly.const(x)


class LieTable:
    """Structure constants ``[a, b] = sum_c f[a, b][c] c`` over MuPoly."""

    def __init__(self, basis, brackets: dict, name: str = ""):
        self.basis = tuple(basis)
        self.name = name
        self.f: dict = {}
        for (a, b), val in brackets.items():
            val = {c: _mp(v) for c, v in val.items() if v}
            self.f[(a, b)] = val
            self.f[(b, a)] = {c: -v for c, v in val.items()}

    def bracket(self, a: str, b: str) -> dict:
        return self.f.get((a, b), {})

    def bracket_vec(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for c, v in self.bracket(a, b).items():
                    out[c] = out.get(c, MuPoly()) + ca * cb * v
        return {c: v for c, v in out.items() if v}

    def jacobi_residual(self) -> dict:
        """Nonzero ``[a,[b,c]] + cyclic`` over all basis triples."""
        bad = {}
        for a, b, c in combinations(self.basis, 3):
            tot: dict = {}
            for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                inner = self.bracket(y, z)
                for k, v in self.bracket_vec({x: MuPoly.const(1)}, inner).items():
                    tot[k] = tot.get(k, MuPoly()) + v
            tot = {k: v for k, v in tot.items() if v}
            if tot:
                bad[(a, b, c)] = tot
        return bad

    def antisymmetry_residual(self) -> dict:
        bad = {}
        for (a, b), v in self.f.items():
            w = self.f.get((b, a), {})
            s = {c: v.get(c, MuPoly()) + w.get(c, MuPoly()) for c in set(v) | set(w)}
            s = {c: x for c, x in s.items() if x}
            if s:
                bad[(a, b)] = s
        return bad

    def specialize(self, mu) -> "LieTable":
        out = {}
        for (a, b), v in self.f.items():
            if self.basis.index(a) < self.basis.index(b):
                out[(a, b)] = {c: MuPoly.const(x.evaluate(mu)) for c, x in v.items()}
        return LieTable(self.basis, out, f"{self.name}[mu={mu}]")


def schouten_check(r: dict, table: LieTable) -> dict:
    """``[r12,r13] + [r12,r23] + [r13,r23]`` for ``r = sum r[a,b] a (x) b``.

    Returns the nonzero rank-3 components; empty means r solves the classical
    YBE.  A common scalar factor (z or w) in r only rescales the result and is
    left out.
    """
    r = {k: _mp(v) for k, v in r.items() if v}
    out: dict = {}

    def add(key, v):
        out[key] = out.get(key, MuPoly()) + v

    for (a, b), rab in r.items():
        for (c, d), rcd in r.items():
            coef = rab * rcd
            for e, v in table.bracket(a, c).items():
                add((e, b, d), coef * v)
            for e, v in table.bracket(b, c).items():
                add((a, e, d), coef * v)
            for e, v in table.bracket(b, d).items():
                add((a, c, e), coef * v)
    return {k: v for k, v in out.items() if v}


def wedge_bivector(*pairs) -> dict:
    """``sum a ^ b`` as ``{(a, b): 1, (b, a): -1}``."""
    out: dict = {}
    for a, b in pairs:
        out[(a, b)] = out.get((a, b), 0) + 1
        out[(b, a)] = out.get((b, a), 0) - 1
    return out


def poincare_table() -> LieTable:
    """iso(1,1): [K, P+-] = +-2 P+-, [P+, P-] = 0."""
    return LieTable(("K", "P+", "P-"), {("K", "P+"): {"P+": 2}, ("K", "P-"): {"P-": -2}},
                    "iso(1,1)")


def gmu_table() -> LieTable:
    """g_mu with mu symbolic."""
    return LieTable(("J", "D", "P1", "P2", "C1", "C2"), {
        ("J", "P1"): {"P2": 1}, ("J", "P2"): {"P1": MU},
        ("J", "C1"): {"C2": 1}, ("J", "C2"): {"C1": MU},
        ("D", "P1"): {"P1": 1}, ("D", "P2"): {"P2": 1},
        ("D", "C1"): {"C1": -1}, ("D", "C2"): {"C2": -1},
    }, "g_mu")


def weyl_table() -> LieTable:
    """s_mu: the plane algebra [J,P1] = P2, [J,P2] = mu P1 enlarged by a dilation."""
    return LieTable(("J", "D", "P1", "P2"), {
        ("J", "P1"): {"P2": 1}, ("J", "P2"): {"P1": MU},
        ("D", "P1"): {"P1": 1}, ("D", "P2"): {"P2": 1},
    }, "s_mu")


def table_from_presentation(H, order: int = 0) -> dict:
    """Linear part of the w/z-order-``order`` brackets of a presentation.

    Returns ``{(a, b): {c: MuPoly}}`` for comparison with a LieTable; nonlinear
    terms are reported under the key ``'nonlinear'``.
    """
    alg = H.alg
    out: dict = {}
    for i, a in enumerate(alg.names):
        for b in alg.names[i + 1:]:
            v = alg.bracket_value(a, b).at_order(order)
            for ((m,), k, s, mu), c in v.terms.items():
                if sum(m) != 1:
                    out.setdefault("nonlinear", []).append((a, b, alg.mono_str(m)))
                    continue
                g = alg.names[m.index(1)]
                entry = out.setdefault((a, b), {})
                entry[g] = entry.get(g, MuPoly()) + MuPoly({mu: c})
    return out


def table_residual(H, table: LieTable) -> dict:
    """Differences between the order-0 brackets of ``H`` and ``table``."""
    got = table_from_presentation(H, 0)
    bad = {}
    if "nonlinear" in got:
        bad["nonlinear"] = got.pop("nonlinear")
    names = H.alg.names
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            want = table.bracket(a, b)
            have = got.get((a, b), {})
            diff = {c: have.get(c, MuPoly()) - want.get(c, MuPoly()) for c in set(want) | set(have)}
            diff = {c: v for c, v in diff.items() if v}
            if diff:
                bad[(a, b)] = diff
    return bad


def bivector_mu(biv: dict) -> dict:
    """Convert ``rmatrix.bivector_from`` output (single order) to MuPoly coefficients."""
    out = {}
    for key, sc in biv.items():
        poly = MuPoly()
        for (k, s, mu), c in sc.items():
            if s:
                raise ValueError("s left in bivector")
            poly = poly + MuPoly({mu: c})
        out[key] = poly
    return out
