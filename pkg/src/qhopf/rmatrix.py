"""Universal R-matrices and the quasitriangularity / Yang-Baxter checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .coeffring import exp_coeffs
from .commpoly import Poly
from .errors import ClosedFormMismatch, NonSkewFirstOrder
from .hopf import HopfPresentation
from .models import functions as fn
from .ncalg import (
    Element,
    apply_series,
    commutator,
    embed,
    flip,
    series_length,
    tensor,
    wedge,
)
from .report import CheckRecord, check


@dataclass
class RMatrix:
    """A truncated R-matrix ``exp(exponent)`` in a rank-2 tensor power."""

    element: Element
    exponent: Element
    provenance: str
    order: int

    @property
    def alg(self):
        return self.element.alg

    def inverse(self) -> Element:
        return exp_tensor(-self.exponent)


def exp_tensor(x: Element) -> Element:
    return apply_series(exp_coeffs(series_length(x.alg)), x)


def delta_of(H: HopfPresentation, x: Element) -> Element:
    return H.delta(x)


# ---------------------------------------------------------------------------
# Poincare R-matrix


def poincare_pieces(H: HopfPresentation, sign: int = 1, names=("K", "P+", "P-")):
    """f = K ^ sinh(zP+), h = z dP+ / sinh(z dP+) and dP+ for one copy."""
    alg = H.alg
    k, pp, _ = names
    K, Pp = alg.gen(k), alg.gen(pp)
    zP = Pp.scale(sign, k=1)
    f = wedge(K, fn.sinh(zP))
    dPp = H.coproduct[pp]
    h = fn.x_over_sinh(dPp.scale(sign, k=1))
    return f, h, dPp


def poincare_exponent(H: HopfPresentation, sign: int = 1, names=("K", "P+", "P-"), with_g: bool = True) -> Element:
    """``K ^ sinh(zP+) * z dP+/sinh(z dP+)`` (with ``z -> sign*z``)."""
    f, h, _ = poincare_pieces(H, sign, names)
    return f * h if with_g else f


def build_R_poincare(H: HopfPresentation, with_g: bool = True) -> RMatrix:
    """R = exp{K ^ sinh(zP+) z dP+ / sinh(z dP+)} through the algebra's order."""
    E = poincare_exponent(H, with_g=with_g)
    tag = "poincare" if with_g else "poincare-without-g"
    return RMatrix(exp_tensor(E), E, tag, H.alg.order)


# ---------------------------------------------------------------------------
# quasitriangularity


def intertwining_residual(R: RMatrix, H: HopfPresentation, gen: str) -> Element:
    d = H.coproduct[gen]
    return R.element * d - flip(d) * R.element


def factorization_residuals(R: RMatrix, H: HopfPresentation) -> tuple[Element, Element]:
    r = R.element
    r12, r13, r23 = embed(r, "12"), embed(r, "13"), embed(r, "23")
    left = H.delta_slot(r, 0) - r13 * r23
    right = H.delta_slot(r, 1) - r13 * r12
    return left, right


def qybe_residual(R: RMatrix) -> Element:
    r = R.element
    r12, r13, r23 = embed(r, "12"), embed(r, "13"), embed(r, "23")
    return r12 * r13 * r23 - r23 * r13 * r12


def verify_intertwining(R: RMatrix, H: HopfPresentation, gen: str) -> CheckRecord:
    return check(f"R Delta({gen}) = sigma.Delta({gen}) R", "quasitriangularity: intertwining",
                 lambda: intertwining_residual(R, H, gen))


def verify_coproduct_factorization(R: RMatrix, H: HopfPresentation) -> list[CheckRecord]:
    res = {}

    def run(i):
        if not res:
            res["v"] = factorization_residuals(R, H)
        return res["v"][i]

    return [check("(Delta x id)R = R13 R23", "quasitriangularity: factorization", lambda: run(0)),
            check("(id x Delta)R = R13 R12", "quasitriangularity: factorization", lambda: run(1))]


def verify_qybe(R: RMatrix) -> CheckRecord:
    return check("R12 R13 R23 = R23 R13 R12", "quantum Yang-Baxter equation", lambda: qybe_residual(R))


def quasitriangular_checks(R: RMatrix, H: HopfPresentation, generators=None) -> list[CheckRecord]:
    out = [verify_intertwining(R, H, g) for g in (generators or H.alg.names)]
    out += verify_coproduct_factorization(R, H)
    out.append(verify_qybe(R))
    return out


def exponent_inverse_residual(R: RMatrix) -> Element:
    """``R exp(-exponent) - 1 (x) 1``."""
    return R.element * R.inverse() - R.alg.one(2)


# ---------------------------------------------------------------------------
# classical limit


def classical_limit(R: RMatrix | Element) -> Element:
    """First-order coefficient of R; must be antisymmetric."""
    el = R.element if isinstance(R, RMatrix) else R
    r = el.at_order(1)
    if r + flip(r):
        raise NonSkewFirstOrder(repr(r))
    return r


def bivector_from(r: Element) -> dict:
    """``{(a, b): scalar-map}`` for a tensor whose monomials are single generators."""
    alg = r.alg
    out: dict = {}
    for (mons, k, s, mu), c in r.terms.items():
        labels = []
        for m in mons:
            if sum(m) != 1:
                raise ValueError(f"not a bivector: monomial {alg.mono_str(m)}")
            labels.append(alg.names[m.index(1)])
        out.setdefault(tuple(labels), {})[(k, s, mu)] = c
    return out


# ---------------------------------------------------------------------------
# the derivation of the Poincare R-matrix


def recurrence_helpers(H: HopfPresentation):
    """f, dP-, A, B and 2 sinh(z dP+) for U_z iso(1,1)."""
    alg = H.alg
    K, Pp, Pm = alg.gens("K", "P+", "P-")
    zP = Pp.scale(1, k=1)
    f = wedge(K, fn.sinh(zP))
    dPp = H.coproduct["P+"]
    dPm = H.coproduct["P-"]
    zdP = dPp.scale(1, k=1)
    sh = fn.sinh(zP)
    one = alg.one()
    A = 2 * fn.exp(-zdP) * tensor(sh, Pm) - 2 * fn.exp(zdP) * tensor(Pm, sh)
    B = 2 * fn.exp(-zdP) * tensor(sh, Pm) + 2 * fn.exp(zdP) * tensor(Pm, sh)
    two_sh = 2 * fn.sinh(zdP)
    return {"f": f, "dP-": dPm, "dP+": dPp, "A": A, "B": B, "2sh": two_sh, "one": one}


def nested_commutators(f: Element, x: Element, depth: int) -> list[Element]:
    """``[x, [f,x], [f,[f,x]], ...]`` up to ``depth`` applications."""
    out = [x]
    for _ in range(depth):
        out.append(commutator(f, out[-1]))
    return out


def verify_ansatz_recurrence(H: HopfPresentation, n_max: int = 3) -> list[CheckRecord]:
    """Check the nested-commutator closed forms and the matching condition for g."""
    hp = recurrence_helpers(H)
    f, A, B, two_sh = hp["f"], hp["A"], hp["B"], hp["2sh"]
    iters = nested_commutators(f, hp["dP-"], 2 * n_max + 1)
    recs = [
        check("[f, dP-] = A", "ansatz recurrence", lambda: iters[1] - A),
        check("[f,[f, dP-]] = B 2sinh(z dP+)", "ansatz recurrence", lambda: iters[2] - B * two_sh),
        check("[f, B] = A 2sinh(z dP+)", "ansatz recurrence", lambda: commutator(f, B) - A * two_sh),
        check("[f, sinh(z dP+)] = 0", "ansatz recurrence", lambda: commutator(f, fn.sinh(hp["dP+"].scale(1, k=1)))),
    ]
    for n in range(1, n_max + 1):
        recs.append(check(f"{2 * n}-fold commutator = B (2sinh z dP+)^{2 * n - 1}", "recurrence",
                          lambda n=n: iters[2 * n] - B * two_sh ** (2 * n - 1)))
        recs.append(check(f"{2 * n + 1}-fold commutator = A (2sinh z dP+)^{2 * n}", "recurrence",
                          lambda n=n: iters[2 * n + 1] - A * two_sh ** (2 * n)))
    zdP = hp["dP+"].scale(1, k=1)
    # z g = z dP+ / sinh(z dP+)
    zg = fn.x_over_sinh(zdP)
    arg = fn.sinh(zdP) * zg
    recs.append(check("exp(+2z sinh(z dP+) g) = exp(+2z dP+)", "matching condition for g",
                      lambda: fn.exp(2 * arg) - fn.exp(2 * zdP)))
    recs.append(check("exp(-2z sinh(z dP+) g) = exp(-2z dP+)", "matching condition for g",
                      lambda: fn.exp(-2 * arg) - fn.exp(-2 * zdP)))
    # the conjugation series with this g: dP- + A C + B D = sigma.dP-
    Cc = fn.cosh(zdP)
    Dd = fn.sinh(zdP)
    recs.append(check("dP- + A C + B D = sigma.Delta P-", "conjugation of Delta P-",
                      lambda: hp["dP-"] + A * Cc + B * Dd - flip(hp["dP-"])))

    def conj_series():
        zfg = f * zg
        total = hp["dP-"]
        term = hp["dP-"]
        for n in range(1, series_length(H.alg) + 1):
            term = commutator(zfg, term) * Fraction(1, n)
            if not term:
                break
            total = total + term
        return total - flip(hp["dP-"])

    recs.append(check("exp(zfg) dP- exp(-zfg) = sigma.Delta P- (commutator series)", "conjugation of Delta P-",
                      conj_series))
    return recs


# ---------------------------------------------------------------------------
# contracted R-matrix of U_w g_mu


def _wseries_mul(a: list, b: list, n: int) -> list:
    out = [a[0] * 0 for _ in range(n + 1)]
    for i, x in enumerate(a[: n + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: n + 1 - i]):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def _trig_series(var: Poly, kind: str, n: int, half: bool) -> list:
    """w-series of C_{-mu}, S_{-mu}, cosh or sinh of ``w var`` (or ``w var/2``)."""
    zero = var * 0
    mu = Poly.var(var.vars, "mu")
    f = Fraction(1, 2) if half else Fraction(1)
    out = [zero] * (n + 1)
    for k in range(n + 1):
        even = k % 2 == 0
        if kind in ("C", "cosh") and not even or kind in ("S", "sinh") and even:
            continue
        c = f**k / factorial(k)
        term = var**k * c
        if kind in ("C", "S"):
            term = term * mu ** (k // 2)
        out[k] = term
    return out


def contracted_L_factors(n: int) -> tuple[list, list]:
    """``2w N_i / (C_{-mu}(w x) - cosh(w y))`` as w-series over polynomials in x, y, mu.

    ``x`` and ``y`` stand for the commuting elements Delta P1 and Delta P2.
    The denominator starts at ``w**2 (mu x**2 - y**2)/2``; its leading
    coefficient is not a unit, so every quotient coefficient is obtained by
    exact polynomial division (leading monomial in ``y``).  Returns the
    coefficients of ``w**0 .. w**n``.
    """
    vars_ = ("x", "y", "mu")
    x, y, mu = (Poly.var(vars_, v) for v in vars_)
    m = n + 2
    Sx, Cx = _trig_series(x, "S", m, True), _trig_series(x, "C", m, True)
    chy, shy = _trig_series(y, "cosh", m, True), _trig_series(y, "sinh", m, True)
    n1 = [a - b for a, b in zip(
        [t * mu * x for t in _wseries_mul(Sx, chy, m)],
        [t * y for t in _wseries_mul(Cx, shy, m)])]
    n2 = [a - b for a, b in zip(
        [t * y for t in _wseries_mul(Sx, chy, m)],
        [t * x for t in _wseries_mul(Cx, shy, m)])]
    den = [a - b for a, b in zip(_trig_series(x, "C", m, False), _trig_series(y, "cosh", m, False))]
    if den[0] or den[1]:
        raise ArithmeticError("denominator does not start at w^2")
    dn = den[2:]
    order = ("y", "x", "mu")

    def divide(num):
        # num = 2w N, shifted by the w^2 factored out of the denominator
        shifted = [x * 0] + [2 * t for t in num]
        if shifted[0] or shifted[1]:
            raise ArithmeticError("numerator does not start at w^2")
        nm = shifted[2:]
        q = []
        for k in range(n + 1):
            acc = nm[k]
            for j in range(k):
                acc = acc - q[j] * dn[k - j]
            q.append(acc.exact_div(dn[0], order))
        return q

    return divide(n1), divide(n2)


def _poly_to_tensor(coeffs: list, dx: Element, dy: Element) -> Element:
    alg = dx.alg
    out = alg.zero(2)
    powers: dict = {}

    def pw(base, tag, e):
        key = (tag, e)
        if key not in powers:
            powers[key] = base**e
        return powers[key]

    for k, poly in enumerate(coeffs):
        for (a, b, m), c in poly.terms.items():
            out = out + (pw(dx, "x", a) * pw(dy, "y", b)).scale(c, k=k, mu=m)
    return out


def contracted_exponent(W: HopfPresentation) -> Element:
    """(M1 N1 + M2 N2) L of the closed form, in the algebra of ``W`` (J, D, P1, P2)."""
    alg = W.alg
    J, D, P1, P2 = alg.gens("J", "D", "P1", "P2")
    hp1 = P1.scale(Fraction(1, 2), k=1)
    hp2 = P2.scale(Fraction(1, 2), k=1)
    C, S = fn.gcos(hp1), fn.gsin(hp1)
    ch, sh = fn.cosh(hp2), fn.sinh(hp2)
    M1 = wedge(D, C * sh) + wedge(J, S * ch)
    M2 = wedge(D, S * ch).scale(1, mu=1) + wedge(J, C * sh)
    F1, F2 = contracted_L_factors(alg.order)
    dx, dy = W.coproduct["P1"], W.coproduct["P2"]
    return M1 * _poly_to_tensor(F1, dx, dy) + M2 * _poly_to_tensor(F2, dx, dy)


def closed_form_R(W: HopfPresentation) -> RMatrix:
    E = contracted_exponent(W)
    return RMatrix(exp_tensor(E), E, "contracted-closed-form", W.alg.order)


def doubled_product_R(order: int, target: HopfPresentation) -> RMatrix:
    """R^1_z R^2_{-z} in the doubled algebra, pushed through the contraction map.

    The result is rebased onto ``target``'s generators, which fails if any
    C1, C2 monomial survives.
    """
    from .models.contraction import ALGEBRA_MAP, build_contracted_gmu, contract_element
    from .models.doubled import COPY1, COPY2, build_doubled

    Hd = build_doubled(order)
    E1 = poincare_exponent(Hd, 1, COPY1)
    E2 = poincare_exponent(Hd, -1, COPY2)
    prod = exp_tensor(E1) * exp_tensor(E2)
    G = build_contracted_gmu(order)
    el = contract_element(prod, ALGEBRA_MAP, G.alg, "R1 R2").rebase(target.alg)
    ex = contract_element(E1 + E2, ALGEBRA_MAP, G.alg, "exponent").rebase(target.alg)
    return RMatrix(el, ex, "doubled-product", order)


def _specialize(x: Element, mu, alg) -> Element:
    return x if mu == "sym" else x.specialize_mu(mu).rebase(alg)


def build_R_contracted(mu="sym", order: int = 3, compare: bool = True) -> RMatrix:
    """The closed form exp{(M1 N1 + M2 N2) L} in U_w s_mu, checked against the doubled product.

    Raises ClosedFormMismatch listing the differing terms when the two
    constructions disagree through ``order``.
    """
    from .models.contraction import build_weyl, parse_mu

    mu = parse_mu(mu)
    Wsym = build_weyl("sym", order)
    R = closed_form_R(Wsym)
    if compare:
        diff = R.element - doubled_product_R(order, Wsym).element
        if diff:
            raise ClosedFormMismatch(diff.term_records())
    if mu == "sym":
        return R
    W = build_weyl(mu, order)
    return RMatrix(_specialize(R.element, mu, W.alg), _specialize(R.exponent, mu, W.alg),
                   R.provenance, order)
