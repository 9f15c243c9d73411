"""The 4x4 realization of g_mu and G_mu, the represented R-matrix and the RTT check."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .commpoly import GFun, Poly, fun_vars
from .errors import ClosedFormMismatch, NeitherSignMatches, ReconstructionAmbiguous, ReconstructionInfeasible
from .ncalg import Element, tensor
from .report import CheckRecord, check

VARS = fun_vars()
GMU_ORDER = ("J", "D", "P1", "P2", "C1", "C2")

# nonvanishing brackets of g_mu as {(a, b): [(coeff, mu power, generator)]}
GMU_BRACKETS = {
    ("J", "P1"): [(1, 0, "P2")], ("J", "P2"): [(1, 1, "P1")],
    ("J", "C1"): [(1, 0, "C2")], ("J", "C2"): [(1, 1, "C1")],
    ("D", "P1"): [(1, 0, "P1")], ("D", "P2"): [(1, 0, "P2")],
    ("D", "C1"): [(-1, 0, "C1")], ("D", "C2"): [(-1, 0, "C2")],
}


def gv(name) -> GFun:
    return GFun.var(VARS, name)


def gc(c) -> GFun:
    return GFun.const(VARS, c)


class Mat:
    """Square matrix over a ring (GFun polynomials or algebra elements)."""

    def __init__(self, rows, zero, one):
        self.rows = [list(r) for r in rows]
        self.n = len(self.rows)
        self.zero = zero
        self.one = one

    @classmethod
    def from_ints(cls, rows, zero, one):
        return cls([[one * x if x else zero for x in r] for r in rows], zero, one)

    @classmethod
    def identity(cls, n, zero, one):
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], zero, one)

    def _like(self, rows):
        return Mat(rows, self.zero, self.one)

    def __add__(self, o):
        return self._like([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)])

    def __sub__(self, o):
        return self._like([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)])

    def __neg__(self):
        return self._like([[-a for a in r] for r in self.rows])

    def __mul__(self, o):
        if not isinstance(o, Mat):
            return self._like([[a * o for a in r] for r in self.rows])
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.zero
                for k in range(n):
                    a = self.rows[i][k]
                    b = o.rows[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return self._like(out)

    def scale_left(self, c):
        return self._like([[c * a for a in r] for r in self.rows])

    def map(self, fn):
        return self._like([[fn(a) for a in r] for r in self.rows])

    def __bool__(self):
        return any(bool(a) for r in self.rows for a in r)

    def __eq__(self, o):
        return not (self - o)

    def nonzero_entries(self):
        return [(i + 1, j + 1, a) for i, r in enumerate(self.rows) for j, a in enumerate(r) if a]

    def __repr__(self):
        return "\n".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows)


def kron(a: Mat, b: Mat) -> Mat:
    n, m = a.n, b.n
    rows = [[a.zero] * (n * m) for _ in range(n * m)]
    for i, j, k, l in product(range(n), range(n), range(m), range(m)):
        x, y = a.rows[i][j], b.rows[k][l]
        if x and y:
            rows[i * m + k][j * m + l] = x * y
    return Mat(rows, a.zero, a.one)


def gmat(rows) -> Mat:
    return Mat([[x if isinstance(x, Poly) else gc(x) for x in r] for r in rows], gc(0), gc(1))


def commutator(a: Mat, b: Mat) -> Mat:
    return a * b - b * a


# ---------------------------------------------------------------------------
# the realization of g_mu


def printed_matrices() -> dict:
    """J, P1, D, C1 exactly as printed; P2 and C2 are reconstructed."""
    mu = gv("mu")
    z = gc(0)
    J = gmat([[z, -mu, z, z], [-1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    P1 = gmat([[0, 0, 0, 0], [0, 0, 0, 0], [0, 1, 0, 0], [0, 1, 0, 0]])
    D = gmat([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    C1 = gmat([[0, 0, 0, 0], [0, 0, 0, 0], [0, -1, 0, 0], [0, 1, 0, 0]])
    return {"J": J, "P1": P1, "D": D, "C1": C1}


# unknown entries: rows 3-4 of column 1 (1-based), the printed sparsity pattern
PATTERN = ((2, 0), (3, 0))


def _solve(rows: list, nvar: int):
    """Fraction Gauss-Jordan on augmented rows; returns (rank, solution or None, consistent)."""
    m = [list(r) for r in rows]
    piv = []
    r = 0
    for c in range(nvar):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    consistent = all(any(x != 0 for x in row[:nvar]) or row[nvar] == 0 for row in m)
    if not consistent or r < nvar:
        return r, None, consistent
    sol = [Fraction(0)] * nvar
    for i, c in enumerate(piv):
        sol[c] = m[i][nvar]
    return r, sol, consistent


def build_rep(mu="sym") -> dict:
    """The six matrices; P2 and C2 solved from the brackets of g_mu on the printed pattern.

    The unknown entries are rational constants; every bracket (including the
    vanishing ones) gives linear equations, split by powers of mu.
    """
    known = printed_matrices()
    uvars = ("u1", "u2", "u3", "u4")
    W = tuple(uvars) + VARS
    lift = lambda m: Mat([[Poly(W, {(0,) * 4 + e: c for e, c in a.terms.items()}) for a in r]  # noqa: E731
                          for r in m.rows], Poly(W), Poly.const(W, 1))
    mats = {k: lift(v) for k, v in known.items()}
    for name, (u, v) in (("P2", ("u1", "u2")), ("C2", ("u3", "u4"))):
        rows = [[Poly(W)] * 4 for _ in range(4)]
        rows[PATTERN[0][0]][PATTERN[0][1]] = Poly.var(W, u)
        rows[PATTERN[1][0]][PATTERN[1][1]] = Poly.var(W, v)
        mats[name] = Mat(rows, Poly(W), Poly.const(W, 1))
    muW = Poly.var(W, "mu")
    eqs = []
    for i, a in enumerate(GMU_ORDER):
        for b in GMU_ORDER[i + 1:]:
            res = commutator(mats[a], mats[b])
            for c, mp, g in GMU_BRACKETS.get((a, b), []):
                res = res - mats[g] * (muW ** mp * c)
            for r in res.rows:
                for ent in r:
                    # split by the non-unknown part of each monomial
                    groups: dict = {}
                    for e, c in ent.terms.items():
                        key = e[4:]
                        row = groups.setdefault(key, [Fraction(0)] * 5)
                        lin = [k for k in range(4) if e[k]]
                        if sum(e[:4]) > 1:
                            raise ReconstructionInfeasible({"nonlinear": (a, b)})
                        if lin:
                            row[lin[0]] += c
                        else:
                            row[4] -= c
                    eqs.extend(groups.values())
    rank, sol, consistent = _solve(eqs, 4)
    system = {"equations": [[str(x) for x in e] for e in eqs], "rank": rank}
    if not consistent:
        raise ReconstructionInfeasible(system)
    if sol is None:
        raise ReconstructionAmbiguous(system)
    rep = dict(known)
    for name, (u, v) in (("P2", (0, 1)), ("C2", (2, 3))):
        rows = [[0] * 4 for _ in range(4)]
        rows[PATTERN[0][0]][PATTERN[0][1]] = sol[u]
        rows[PATTERN[1][0]][PATTERN[1][1]] = sol[v]
        rep[name] = gmat(rows)
    if mu != "sym":
        rep = {k: m.map(lambda a: a.specialize_mu(mu)) for k, m in rep.items()}
    return rep


def check_rep_brackets(rep: dict) -> list[CheckRecord]:
    """Every bracket of g_mu (vanishing ones included) as a matrix identity."""
    mu = gv("mu")
    out = []
    for i, a in enumerate(GMU_ORDER):
        for b in GMU_ORDER[i + 1:]:
            def run(a=a, b=b):
                res = commutator(rep[a], rep[b])
                for c, mp, g in GMU_BRACKETS.get((a, b), []):
                    res = res - rep[g] * (mu ** mp * c)
                return res
            out.append(check(f"[{a},{b}] in the 4x4 realization", "4x4 realization of g_mu",
                             lambda run=run: _mat_residual(run())))
    return out


def _mat_residual(m: Mat) -> list:
    return [[[f"({i},{j})", mono], c] for i, j, a in m.nonzero_entries() for mono, c in a.records()]


# ---------------------------------------------------------------------------
# the group element


def mat_exp(X: Mat, t: GFun, lam: GFun, cos_, sin_) -> Mat:
    """exp(tX) when X**2 = lam * Pi with Pi an idempotent fixing X.

    ``cos_``/``sin_`` are the matching functions of t (e.g. C, S or cosh, sinh);
    a nilpotent X (X**2 = 0) gives I + tX.  The structure is verified.
    """
    n = X.n
    I = Mat.identity(n, X.zero, X.one)
    X2 = X * X
    if not X2:
        return I + X * t
    # Pi = X^2 / lam, read off from the nonzero entries
    pi_rows = [[a.exact_div(lam) if a else a for a in r] for r in X2.rows]
    Pi = Mat(pi_rows, X.zero, X.one)
    if Pi * Pi != Pi or Pi * X != X or X * Pi != X:
        raise ValueError("matrix does not have the assumed exponential structure")
    return I - Pi + Pi * cos_ + X * sin_


def group_element(rep: dict, params: dict | None = None) -> Mat:
    """e^{c1 C1} e^{c2 C2} e^{p1 P1} e^{p2 P2} e^{d D} e^{theta J}.

    With no params the coordinates are the symbols of the function ring;
    e^{dD} uses cosh d = (E + Ei)/2 and e^{theta J} uses C, S.
    """
    p = {k: gv(k) for k in ("c1", "c2", "p1", "p2")}
    if params:
        p.update({k: gc(v) if not isinstance(v, Poly) else v for k, v in params.items()})
    one = gc(1)
    E, Ei, C, S, mu = gv("E"), gv("Ei"), gv("C"), gv("S"), gv("mu")
    half = Fraction(1, 2)
    out = Mat.identity(4, gc(0), one)
    for name in ("c1", "c2", "p1", "p2"):
        gen = {"c1": "C1", "c2": "C2", "p1": "P1", "p2": "P2"}[name]
        out = out * mat_exp(rep[gen], p[name], one, one, p[name])
    out = out * mat_exp(rep["D"], None, one, (E + Ei) * half, (E - Ei) * half)
    out = out * mat_exp(rep["J"], None, mu, C, S)
    return out


def printed_group_element() -> Mat:
    C, S, E, Ei, mu = gv("C"), gv("S"), gv("E"), gv("Ei"), gv("mu")
    p1, p2, c1, c2 = gv("p1"), gv("p2"), gv("c1"), gv("c2")
    half = Fraction(1, 2)
    ch, sh = (E + Ei) * half, (E - Ei) * half
    t31 = (p2 - c2) * C - (p1 - c1) * S
    t32 = (p1 - c1) * C - mu * (p2 - c2) * S
    t41 = (p2 + c2) * C - (p1 + c1) * S
    t42 = (p1 + c1) * C - mu * (p2 + c2) * S
    z = gc(0)
    return gmat([[C, -mu * S, z, z], [-S, C, z, z], [t31, t32, ch, sh], [t41, t42, sh, ch]])


def compare_group_element(rep: dict) -> list:
    """Entries where the exponential construction differs from the printed matrix."""
    diff = group_element(rep) - printed_group_element()
    return [(i, j, a) for i, j, a in diff.nonzero_entries()]


# ---------------------------------------------------------------------------
# the represented R-matrix


def rep_of_monomial(rep: dict, alg, m: tuple) -> Mat:
    out = Mat.identity(4, gc(0), gc(1))
    for i, e in enumerate(m):
        for _ in range(e):
            out = out * rep[alg.names[i]]
    return out


def represent(R: Element, rep: dict) -> Mat:
    """Image of a rank-2 element under rep (x) rep; w and mu become ring variables."""
    alg = R.alg
    w, mu = gv("w"), gv("mu")
    out = Mat(([gc(0)] * 16 for _ in range(16)), gc(0), gc(1))
    cache: dict = {}
    for ((m1, m2), k, s, m), c in R.terms.items():
        key = (m1, m2)
        if key not in cache:
            cache[key] = kron(rep_of_monomial(rep, alg, m1), rep_of_monomial(rep, alg, m2))
        K = cache[key]
        if K:
            out = out + K * (w ** k * mu ** m * c)
    return out


def r_rep(rep: dict) -> Mat:
    """J ^ P1 + D ^ P2 in the representation."""
    def wedge(a, b):
        return kron(rep[a], rep[b]) - kron(rep[b], rep[a])
    return wedge("J", "P1") + wedge("D", "P2")


def rep_R_closed_form(rep: dict) -> Mat:
    w, mu = gv("w"), gv("mu")
    I16 = Mat.identity(16, gc(0), gc(1))
    return I16 + r_rep(rep) * w + kron(rep["P1"], rep["P1"]) * (mu * w * w)


def rep_R(mu="sym", order: int = 4, rep: dict | None = None) -> Mat:
    """The universal R of U_w s_mu (closed form, truncated at ``order``) in the 4x4 realization.

    Raises ClosedFormMismatch when it is not I + w r + mu w^2 P1 (x) P1.
    """
    from .rmatrix import build_R_contracted
    rep = rep or build_rep("sym")
    R = build_R_contracted("sym", order, compare=False)
    M = represent(R.element, rep)
    diff = M - rep_R_closed_form(rep)
    if mu != "sym":
        M = M.map(lambda a: a.specialize_mu(mu))
        diff = diff.map(lambda a: a.specialize_mu(mu))
    if diff:
        raise ClosedFormMismatch(diff.nonzero_entries())
    return M


# ---------------------------------------------------------------------------
# FRT: R T1 T2 = T2 T1 R with T over Fun_w(G_mu)


def quantum_T(H) -> Mat:
    """The group element with hatted coordinates, factors in the printed order.

    Within each entry the factors commute, so the ordering of the exponentials
    is the only convention involved.
    """
    from .models import functions as fn

    alg = H.alg
    zero, one = alg.zero(), alg.one()
    rep = build_rep("sym")

    def lift(m: Mat) -> Mat:
        rows = []
        for r in m.rows:
            row = []
            for a in r:
                el = zero
                for e, c in a.terms.items():
                    if any(x for v, x in zip(VARS, e) if v != "mu"):
                        raise ValueError("constant matrix expected")
                    el = el + one.scale(c, mu=e[VARS.index("mu")])
                row.append(el)
            rows.append(row)
        return Mat(rows, zero, one)

    def exp_nil(X: Mat, x: Element) -> Mat:
        return Mat.identity(4, zero, one) + X.scale_left(x)

    th, d = alg.gen("theta"), alg.gen("d")
    T = Mat.identity(4, zero, one)
    for coord, gen in (("c1", "C1"), ("c2", "C2"), ("p1", "P1"), ("p2", "P2")):
        T = T * exp_nil(lift(rep[gen]), alg.gen(coord))
    Dm, Jm = lift(rep["D"]), lift(rep["J"])
    I = Mat.identity(4, zero, one)
    PiD = Dm * Dm
    T = T * (I - PiD + PiD.scale_left(fn.cosh(d)) + Dm.scale_left(fn.sinh(d)))
    PiJ = Mat([[one if (i == j and i < 2) else zero for j in range(4)] for i in range(4)], zero, one)
    T = T * (I - PiJ + PiJ.scale_left(fn.gcos(th)) + Jm.scale_left(fn.gsin(th)))
    return T


def _scalar_R(Rm: Mat, alg) -> Mat:
    zero, one = alg.zero(), alg.one()
    iw, imu = VARS.index("w"), VARS.index("mu")
    rows = []
    for r in Rm.rows:
        row = []
        for a in r:
            el = zero
            for e, c in a.terms.items():
                el = el + one.scale(c, k=e[iw], mu=e[imu])
            row.append(el)
        rows.append(row)
    return Mat(rows, zero, one)


def swap_factors(m: Mat) -> Mat:
    """The 16x16 matrix of sigma(R) = R21 given that of R."""
    rows = [[m.zero] * 16 for _ in range(16)]
    for i, j, k, l in product(range(4), repeat=4):
        rows[k * 4 + i][l * 4 + j] = m.rows[i * 4 + k][j * 4 + l]
    return m._like(rows)


def rtt_residual(H, T: Mat | None = None, mu="sym", transposed: bool = False) -> Mat:
    """R T1 T2 - T2 T1 R over the coordinate algebra of ``H``, with T1 = T (x) I.

    R and T carry a symbolic mu; for a specialized ``H`` pass its ``mu`` so the
    residual is specialized too.  ``transposed`` puts R21 in place of R, which
    is the same as taking T1 = I (x) T.
    """
    alg = H.alg
    T = T or quantum_T(H)
    Rm = rep_R_closed_form(build_rep("sym"))
    if transposed:
        Rm = swap_factors(Rm)
    Rm = _scalar_R(Rm, alg)
    zero, one = alg.zero(), alg.one()
    I = Mat.identity(4, zero, one)
    T1 = kron(T, I)
    T2 = kron(I, T)
    res = Rm * (T1 * T2) - (T2 * T1) * Rm
    if mu != "sym":
        res = res.map(lambda a: a.specialize_mu(mu))
    return res


def _element_residual(m: Mat) -> list:
    out = []
    for i, j, a in m.nonzero_entries():
        for rec in a.term_records():
            out.append([[f"({i},{j})"] + rec[0], rec[1]])
    return out


def frt_rtt_check(mu="sym", order: int = 2, degree: int = 3,
                  transposed: bool = False) -> tuple[list[CheckRecord], str]:
    """Try the printed commutators with w and with w -> -w; report which satisfies RTT.

    Returns the two records and the verdict (``"w -> w"`` or ``"w -> -w"``);
    raises NeitherSignMatches unless exactly one sign works.  With the
    standard T1 = T (x) I the printed relations need no sign change; the
    transposed convention needs the flip.
    """
    from .models.contraction import build_qgroup_gmu, flip_parameter

    records = []
    results = {}
    for tag, sign in (("w -> w", 1), ("w -> -w", -1)):
        H = build_qgroup_gmu(mu, order, degree)
        if sign < 0:
            H = flip_parameter(H)
        label = "R21" if transposed else "R"
        rec = check(f"{label} T1 T2 = T2 T1 {label} with the Fun_w relations under {tag}", "FRT relation",
                    lambda H=H: _element_residual(rtt_residual(H, mu=mu, transposed=transposed)))
        records.append(rec)
        results[tag] = rec
    ok = [t for t, r in results.items() if r.passed]
    if len(ok) != 1:
        raise NeitherSignMatches({t: r.residual[:20] for t, r in results.items()})
    return records, ok[0]


def coproduct_from_T(H, T: Mat | None = None, mu="sym") -> list[CheckRecord]:
    """Delta(T) = T (.x) T, eps(T) = I and gamma(T) T = I, entrywise."""
    T = T or quantum_T(H)
    alg = H.alg
    recs = []
    sp = (lambda a: a) if mu == "sym" else (lambda a: a.specialize_mu(mu))

    def delta_res():
        out = []
        for i in range(4):
            for j in range(4):
                lhs = H.delta(T.rows[i][j])
                rhs = alg.zero(2)
                for k in range(4):
                    rhs = rhs + tensor(T.rows[i][k], T.rows[k][j])
                d = sp(lhs - rhs)
                out += [[[f"({i + 1},{j + 1})"] + r[0], r[1]] for r in d.term_records()]
        return out

    def eps_res():
        out = []
        for i in range(4):
            for j in range(4):
                d = sp(H.eps(T.rows[i][j]) - (alg.one(0) if i == j else alg.zero(0)))
                out += [[[f"({i + 1},{j + 1})"] + r[0], r[1]] for r in d.term_records()]
        return out

    def gamma_res():
        G = T.map(H.gamma)
        return _element_residual((G * T - Mat.identity(4, alg.zero(), alg.one())).map(sp))

    recs.append(check("Delta(T) = T (.x) T", "Fun_w(G_mu) coproduct", delta_res))
    recs.append(check("eps(T) = I", "Fun_w(G_mu) counit", eps_res))
    recs.append(check("gamma(T) T = I", "Fun_w(G_mu) antipode, sign-corrected", gamma_res))
    return recs

