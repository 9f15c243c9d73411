"""The classical layer: functions on G_mu, invariant vector fields and the Sklyanin bracket."""

from __future__ import annotations

from itertools import combinations

from .commpoly import COORDS, GFun, Poly, fun_vars
from .report import CheckRecord, check

VARS = fun_vars()
VARS2 = fun_vars(2)
GENERATORS = ("J", "D", "P1", "P2", "C1", "C2")

# r = w (J ^ P1 + D ^ P2), as antisymmetric coefficients (w factored in below)
R_COEFFS = {("J", "P1"): 1, ("P1", "J"): -1, ("D", "P2"): 1, ("P2", "D"): -1}


def fvar(name: str, vars_=VARS) -> GFun:
    return GFun.var(vars_, name)


def fconst(c, vars_=VARS) -> GFun:
    return GFun.const(vars_, c)


class VectorField:
    """``sum_x coeff[x] d/dx`` over the coordinates of one copy of G_mu."""

    def __init__(self, coeffs: dict):
        self.coeffs = {k: v for k, v in coeffs.items() if v}

    def __call__(self, f: GFun) -> GFun:
        out = f._coerce(0)
        for x, c in self.coeffs.items():
            out = out + c * f.d_coord(x)
        return out

    def commutator(self, other: "VectorField") -> "VectorField":
        """The vector field [X, Y], via its action on the coordinates."""
        out = {}
        some = next(iter(self.coeffs.values()), None) or next(iter(other.coeffs.values()))
        for x in set(self.coeffs) | set(other.coeffs):
            v = some.var_(x)
            out[x] = self(other(v)) - other(self(v))
        return VectorField(out)

    def __bool__(self):
        return bool(self.coeffs)


def invariant_fields(side: str = "left", suffix: str = "", vars_=VARS) -> dict:
    """Left or right invariant vector fields of G_mu, one per generator.

    ``suffix`` selects a copy in a multi-copy variable set (``"_1"``, ``"_2"``).
    """
    v = lambda n: GFun.var(vars_, n + suffix if n != "mu" else n)  # noqa: E731
    one = GFun.const(vars_, 1)
    th, d, p1, p2, c1, c2 = (n + suffix for n in COORDS)
    E, Ei, C, S, mu = v("E"), v("Ei"), v("C"), v("S"), v("mu")
    if side == "left":
        return {
            "J": VectorField({th: one}),
            "D": VectorField({d: one}),
            "P1": VectorField({p1: E * C, p2: E * S}),
            "P2": VectorField({p2: E * C, p1: mu * E * S}),
            "C1": VectorField({c1: Ei * C, c2: Ei * S}),
            "C2": VectorField({c2: Ei * C, c1: mu * Ei * S}),
        }
    if side == "right":
        return {
            "J": VectorField({th: one, p1: mu * v("p2"), p2: v("p1"), c1: mu * v("c2"), c2: v("c1")}),
            "D": VectorField({d: one, p1: v("p1"), p2: v("p2"), c1: -v("c1"), c2: -v("c2")}),
            "P1": VectorField({p1: one}),
            "P2": VectorField({p2: one}),
            "C1": VectorField({c1: one}),
            "C2": VectorField({c2: one}),
        }
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


_FIELDS: dict = {}


def _fields(suffix: str, vars_) -> tuple:
    key = (suffix, vars_)
    if key not in _FIELDS:
        _FIELDS[key] = (invariant_fields("left", suffix, vars_), invariant_fields("right", suffix, vars_))
    return _FIELDS[key]


def sklyanin_bracket(f: GFun, g: GFun, suffixes=("",)) -> GFun:
    """{f, g} = r^{ab} (X^L_a f X^L_b g - X^R_a f X^R_b g) with r = w (J ^ P1 + D ^ P2).

    With several ``suffixes`` the bracket is the product structure, a sum
    over the copies.
    """
    vars_ = f.vars
    w = GFun.var(vars_, "w")
    out = f._coerce(0)
    for suf in suffixes:
        L, R = _fields(suf, vars_)
        for (a, b), r in R_COEFFS.items():
            out = out + (L[a](f) * L[b](g) - R[a](f) * R[b](g)) * r
    return out * w


def printed_brackets() -> dict:
    """The nonvanishing fundamental brackets, keyed by coordinate pair."""
    E, C, S, mu, w = fvar("E"), fvar("C"), fvar("S"), fvar("mu"), fvar("w")
    c1, c2 = fvar("c1"), fvar("c2")
    return {
        ("d", "p1"): w * mu * E * S,
        ("d", "p2"): w * (E * C - 1),
        ("theta", "p1"): w * (E * C - 1),
        ("theta", "p2"): w * E * S,
        ("p1", "c1"): w * mu * c2,
        ("p1", "c2"): w * c1,
        ("p2", "c1"): -w * c1,
        ("p2", "c2"): -w * c2,
    }


def _pairs():
    return list(combinations(COORDS, 2))


def _poly_residual(p: Poly, tag: str = "") -> list:
    return [[[tag, mono] if tag else [mono], c] for mono, c in p.records()]


def _table_value(a: str, b: str, table: dict) -> GFun:
    if (a, b) in table:
        return table[(a, b)]
    if (b, a) in table:
        return -table[(b, a)]
    return fconst(0)


def _at_mu(p: GFun, mu):
    return p if mu == "sym" else p.specialize_mu(mu)


def verify_poisson_table(mu="sym") -> list[CheckRecord]:
    """All 15 coordinate brackets against the printed table, exactly."""
    table = printed_brackets()
    recs = []
    for a, b in _pairs():
        def run(a=a, b=b):
            got = sklyanin_bracket(fvar(a), fvar(b))
            return _poly_residual(_at_mu(got - _table_value(a, b, table), mu))
        recs.append(check(f"{{{a},{b}}} from the Sklyanin bracket", "Sklyanin bracket table", run))
    return recs


def jacobiator(f: GFun, g: GFun, h: GFun, suffixes=("",)) -> GFun:
    br = lambda x, y: sklyanin_bracket(x, y, suffixes)  # noqa: E731
    return br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))


def verify_jacobi(mu="sym", extra_triples=()) -> list[CheckRecord]:
    """Jacobi identity on all coordinate triples plus any given function triples."""
    recs = []
    for a, b, c in combinations(COORDS, 3):
        recs.append(check(f"Jacobi ({a},{b},{c})", "Poisson structure",
                          lambda a=a, b=b, c=c: _poly_residual(
                              _at_mu(jacobiator(fvar(a), fvar(b), fvar(c)), mu))))
    for i, (f, g, h) in enumerate(extra_triples):
        recs.append(check(f"Jacobi (function triple {i})", "Poisson structure",
                          lambda f=f, g=g, h=h: _poly_residual(_at_mu(jacobiator(f, g, h), mu))))
    return recs


# ---------------------------------------------------------------------------
# Poisson-Hopf compatibility


def _v2(name: str) -> GFun:
    return GFun.var(VARS2, name)


def coproduct_images() -> dict:
    """The group law on coordinates and symbols, written on two copies."""
    th1, th2, d1, d2 = _v2("theta_1"), _v2("theta_2"), _v2("d_1"), _v2("d_2")
    E1, E2, Ei1, Ei2 = _v2("E_1"), _v2("E_2"), _v2("Ei_1"), _v2("Ei_2")
    C1, C2, S1, S2, mu = _v2("C_1"), _v2("C_2"), _v2("S_1"), _v2("S_2"), _v2("mu")
    x = {n: (_v2(n + "_1"), _v2(n + "_2")) for n in ("p1", "p2", "c1", "c2")}
    return {
        "theta": th1 + th2,
        "d": d1 + d2,
        "p1": x["p1"][0] + E1 * C1 * x["p1"][1] + mu * E1 * S1 * x["p2"][1],
        "p2": x["p2"][0] + E1 * C1 * x["p2"][1] + E1 * S1 * x["p1"][1],
        "c1": x["c1"][0] + Ei1 * C1 * x["c1"][1] + mu * Ei1 * S1 * x["c2"][1],
        "c2": x["c2"][0] + Ei1 * C1 * x["c2"][1] + Ei1 * S1 * x["c1"][1],
        "E": E1 * E2,
        "Ei": Ei1 * Ei2,
        "C": C1 * C2 + mu * S1 * S2,
        "S": S1 * C2 + C1 * S2,
        "mu": mu,
        "w": _v2("w"),
    }


def coproduct(f: GFun) -> GFun:
    """Delta f as a function on G_mu x G_mu."""
    images = coproduct_images()
    out = GFun(VARS2)
    for e, c in f.terms.items():
        t = GFun.const(VARS2, c)
        for name, p in zip(f.vars, e):
            if p:
                t = t * images[name] ** p
        out = out + t
    return out


def verify_poisson_hopf(mu="sym") -> list[CheckRecord]:
    """Delta{x, y} = {Delta x, Delta y} with the product bracket, every coordinate pair."""
    recs = []
    for a, b in _pairs():
        def run(a=a, b=b):
            lhs = coproduct(sklyanin_bracket(fvar(a), fvar(b)))
            rhs = sklyanin_bracket(coproduct(fvar(a)), coproduct(fvar(b)), ("_1", "_2"))
            return _poly_residual(_at_mu(lhs - rhs, mu))
        recs.append(check(f"Delta{{{a},{b}}} = {{Delta {a}, Delta {b}}}", "Poisson-Hopf compatibility", run))
    return recs


# ---------------------------------------------------------------------------
# the order-w link with Fun_w(G_mu)


def element_to_poly(x, k: int = 1) -> Poly:
    """Order-``k`` part of a Fun_w(G_mu) element, PBW monomials read commutatively."""
    alg = x.alg
    pv = COORDS + ("mu", "w")
    out: dict = {}
    for ((m,), kk, s, mu), c in x.terms.items():
        if kk != k:
            continue
        if s:
            raise ValueError("s left in a Fun_w element")
        e = [0] * len(pv)
        for name, p in zip(alg.names, m):
            e[pv.index(name)] = p
        e[pv.index("mu")] = mu
        e = tuple(e)
        out[e] = out.get(e, 0) + c
    return Poly(pv, out)


def quantum_classical_link(mu="sym", order: int = 2, degree: int = 3, H=None) -> list[CheckRecord]:
    """w-coefficient of [x^, y^] against {x, y}/w for every coordinate pair.

    ``H`` defaults to Fun_w(G_mu) as obtained from the two copies of
    Fun_{+-z}(ISO(1,1)), so the comparison is not against the printed table.
    Both sides are compared on the monomials the truncation keeps at order w.
    """
    from .models.contraction import reconstruct_qgroup_gmu
    from .ncalg import commutator

    H = H or reconstruct_qgroup_gmu(order, degree, mu)
    alg = H.alg
    cap = alg.weight_cap - 1
    recs = []
    for a, b in _pairs():
        def run(a=a, b=b):
            q = element_to_poly(commutator(alg.gen(a), alg.gen(b)), 1)
            cl = sklyanin_bracket(fvar(a), fvar(b)).coeff_of("w", 1).expand(cap)
            if mu != "sym":
                cl = cl.subs({"mu": mu})
            return _poly_residual(q - cl)
        recs.append(check(f"[{a}^,{b}^] at order w = {{{a},{b}}}/w", "quantum-classical correspondence", run))
    return recs


def poisson_checks(mu="sym", order: int = 2, degree: int = 3) -> list[CheckRecord]:
    return (verify_poisson_table(mu) + verify_jacobi(mu) + verify_poisson_hopf(mu)
            + quantum_classical_link(mu, order, degree))
