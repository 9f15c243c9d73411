"""Two commuting copies of the Poincare algebra (or group) at +z and -z."""

from __future__ import annotations

from ..hopf import HopfPresentation
from ..ncalg import RewriteSystem
from .poincare import poincare_block, qgroup_block

COPY1 = ("K1", "P1+", "P1-")
COPY2 = ("K2", "P2+", "P2-")
DOUBLED_GENS = ("K1", "K2", "P1+", "P2+", "P1-", "P2-")

QCOPY1 = ("chi1", "a1+", "a1-")
QCOPY2 = ("chi2", "a2+", "a2-")
DOUBLED_QGENS = ("chi1", "chi2", "a1+", "a2+", "a1-", "a2-")


def _merge(*blocks):
    cop, cou, anti = {}, {}, {}
    for c, e, g in blocks:
        cop.update(c)
        cou.update(e)
        anti.update(g)
    return cop, cou, anti


def build_doubled(order: int = 4) -> HopfPresentation:
    """U_z iso(1,1) + U_{-z} iso(1,1); copies grouped by generator type."""
    alg = RewriteSystem(DOUBLED_GENS, order=order, param="z", label="doubled")
    cop, cou, anti = _merge(poincare_block(alg, COPY1, 1), poincare_block(alg, COPY2, -1))
    anchors = {"relations": "U_z iso(1,1) relations, copies at +z and -z",
               "coproduct": "U_z iso(1,1) coproduct, both copies",
               "counit": "U_z iso(1,1) counit", "antipode": "U_z iso(1,1) antipode"}
    return HopfPresentation("doubled", alg, cop, cou, anti, anchors)


def doubled_basis(H: HopfPresentation) -> dict:
    """J3, J+-, N3, N+- as elements of the doubled algebra."""
    K1, K2, P1p, P2p, P1m, P2m = H.alg.gens(*DOUBLED_GENS)
    return {"J3": K1 + K2, "J+": P1p + P2p, "J-": P1m + P2m,
            "N3": K1 - K2, "N+": P1p - P2p, "N-": P1m - P2m}


def build_doubled_qgroup(order: int = 2, degree: int = 3) -> HopfPresentation:
    """Fun_z(ISO(1,1)) + Fun_{-z}(ISO(1,1))."""
    alg = RewriteSystem(DOUBLED_QGENS, order=order, degree_cap=degree, param="z",
                        label="doubled-fun")
    cop, cou, anti = _merge(qgroup_block(alg, QCOPY1, 1), qgroup_block(alg, QCOPY2, -1))
    anchors = {"relations": "Fun_z(ISO(1,1)) relations, copies at +z and -z",
               "coproduct": "Fun_z(ISO(1,1)) coproduct", "counit": "Fun_z(ISO(1,1)) counit",
               "antipode": "Fun_z(ISO(1,1)) antipode"}
    return HopfPresentation("doubled-fun", alg, cop, cou, anti, anchors)
