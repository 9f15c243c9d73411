"""Deliberately broken variants of the catalog models, used as negative controls."""

from __future__ import annotations

from .hopf import HopfPresentation, check_coproduct_compatibility, check_counit_antipode
from .models import functions as fn
from .models.poincare import build_poincare_qalgebra
from .ncalg import tensor
from .report import CheckRecord
from .rmatrix import RMatrix, exp_tensor, poincare_exponent, quasitriangular_checks

# the order at which each mutation is expected to show up first
EXPECTED_FIRST_ORDER = {
    "dropped-coproduct-factor": 1,
    "flipped-antipode": 0,
    "dropped-g-factor": 4,  # upper bound: "some order <= 4"
}


def drop_coproduct_factor(H: HopfPresentation) -> HopfPresentation:
    """Delta K with the factor e^{-zP+} removed: 1 (x) K + K (x) e^{zP+}."""
    alg = H.alg
    K, Pp = alg.gens("K", "P+")
    cop = dict(H.coproduct)
    cop["K"] = tensor(alg.one(), K) + tensor(K, fn.exp(Pp.scale(1, k=1)))
    return HopfPresentation(H.model_id + "-mutated-delta", alg, cop, dict(H.counit),
                            dict(H.antipode), dict(H.anchors))


def flip_antipode_sign(H: HopfPresentation) -> HopfPresentation:
    """gamma(P-) = +e^{zP+} P- e^{-zP+}."""
    anti = dict(H.antipode)
    anti["P-"] = -anti["P-"]
    return HopfPresentation(H.model_id + "-mutated-antipode", H.alg, dict(H.coproduct),
                            dict(H.counit), anti, dict(H.anchors))


def drop_g_factor(H: HopfPresentation) -> RMatrix:
    """R = exp(z K ^ sinh(zP+)) with g set to 1."""
    E = poincare_exponent(H, 1, with_g=False)
    return RMatrix(exp_tensor(E), E, "poincare-without-g", H.alg.order)


def _first(records: list[CheckRecord]):
    orders = [r.first_failing_order for r in records if not r.passed and r.first_failing_order is not None]
    return min(orders) if orders else None


def run_controls(order: int = 4) -> dict:
    """Run each mutation; returns ``{name: (records, first failing order)}``."""
    H = build_poincare_qalgebra(order)
    out = {}
    recs = [r for r in check_coproduct_compatibility(drop_coproduct_factor(H)) if not r.passed]
    out["dropped-coproduct-factor"] = (recs, _first(recs))
    recs = [r for r in check_counit_antipode(flip_antipode_sign(H)) if not r.passed]
    out["flipped-antipode"] = (recs, _first(recs))
    recs = [r for r in quasitriangular_checks(drop_g_factor(H), H) if not r.passed]
    out["dropped-g-factor"] = (recs, _first(recs))
    return out


def control_matches(name: str, first) -> bool:
    """True when the mutation failed, and no later than documented."""
    want = EXPECTED_FIRST_ORDER[name]
    if first is None:
        return False
    if name == "dropped-g-factor":
        return first <= want
    return first == want
