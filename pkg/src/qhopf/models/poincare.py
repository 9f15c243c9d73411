"""The non-standard quantum (1+1) Poincare algebra and its dual quantum group."""

from __future__ import annotations

from ..hopf import HopfPresentation
from ..ncalg import RewriteSystem, tensor
from . import functions as fn

POINCARE_GENS = ("K", "P+", "P-")
QGROUP_GENS = ("chi", "a+", "a-")

ANCHORS_UZ = {
    "relations": "U_z iso(1,1) relations",
    "coproduct": "U_z iso(1,1) coproduct",
    "counit": "U_z iso(1,1) counit",
    "antipode": "U_z iso(1,1) antipode",
}
ANCHORS_FUNZ = {
    "relations": "Fun_z(ISO(1,1)) relations",
    "coproduct": "Fun_z(ISO(1,1)) coproduct",
    "counit": "Fun_z(ISO(1,1)) counit",
    "antipode": "Fun_z(ISO(1,1)) antipode",
}


def poincare_block(alg: RewriteSystem, names=POINCARE_GENS, sign: int = 1):
    """Install the relations of one copy with deformation ``sign * t``.

    Returns the (coproduct, counit, antipode) tables for the copy.
    """
    k, pp, pm = names
    K, Pp, Pm = alg.gens(k, pp, pm)
    zP = Pp.scale(sign, k=1)
    # [K, P+] = 2 sinh(zP+)/z = 2 P+ sinhc(zP+), even in z
    alg.set_bracket(k, pp, 2 * Pp * fn.sinhc(zP))
    alg.set_bracket(k, pm, -2 * Pm * fn.cosh(zP))
    alg.set_bracket(pp, pm, alg.zero())
    e_plus = fn.exp(zP)
    e_minus = fn.exp(-zP)
    one = alg.one()
    cop = {
        pp: tensor(one, Pp) + tensor(Pp, one),
        pm: tensor(e_minus, Pm) + tensor(Pm, e_plus),
        k: tensor(e_minus, K) + tensor(K, e_plus),
    }
    cou = {g: alg.zero(0) for g in names}
    anti = {g: -(e_plus * alg.gen(g) * e_minus) for g in names}
    return cop, cou, anti


def build_poincare_qalgebra(order: int = 4, sign: int = 1) -> HopfPresentation:
    """U_z iso(1,1): generators K < P+ < P-."""
    alg = RewriteSystem(POINCARE_GENS, order=order, param="z", label="uz-iso11")
    cop, cou, anti = poincare_block(alg, POINCARE_GENS, sign)
    return HopfPresentation("uz-iso11", alg, cop, cou, anti, dict(ANCHORS_UZ))


def qgroup_block(alg: RewriteSystem, names=QGROUP_GENS, sign: int = 1):
    """Install the relations of one copy of Fun_{sign*t}(ISO(1,1))."""
    chi, ap, am = names
    X, Ap, Am = alg.gens(chi, ap, am)
    one = alg.one()
    e2 = fn.exp(2 * X)
    em2 = fn.exp(-2 * X)
    alg.set_bracket(chi, ap, (e2 - one).scale(sign, k=1))
    alg.set_bracket(chi, am, alg.zero())
    alg.set_bracket(ap, am, Am.scale(-2 * sign, k=1))
    cop = {
        chi: tensor(X, one) + tensor(one, X),
        ap: tensor(Ap, one) + tensor(e2, Ap),
        am: tensor(Am, one) + tensor(em2, Am),
    }
    cou = {g: alg.zero(0) for g in names}
    anti = {chi: -X, ap: -(em2 * Ap), am: -(e2 * Am)}
    return cop, cou, anti


def build_poincare_qgroup(order: int = 3, degree: int = 4, sign: int = 1) -> HopfPresentation:
    """Fun_z(ISO(1,1)): coordinates chi < a+ < a-, truncated at (N, D)."""
    alg = RewriteSystem(QGROUP_GENS, order=order, degree_cap=degree, param="z", label="funz-iso11")
    cop, cou, anti = qgroup_block(alg, QGROUP_GENS, sign)
    return HopfPresentation("funz-iso11", alg, cop, cou, anti, dict(ANCHORS_FUNZ))


def dual_basis_elements(H: HopfPresentation) -> dict:
    """H = e^{zP+} K, A- = e^{-zP+} P-, A+ = P+ (no pairing is checked)."""
    alg = H.alg
    K, Pp, Pm = alg.gens(*POINCARE_GENS)
    zP = Pp.scale(1, k=1)
    return {"H": fn.exp(zP) * K, "A-": fn.exp(-zP) * Pm, "A+": Pp}
