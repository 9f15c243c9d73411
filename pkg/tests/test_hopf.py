import pytest

from qhopf.controls import drop_coproduct_factor, flip_antipode_sign
from qhopf.hopf import (antipode_residuals, check_coassociativity, check_coproduct_compatibility,
                        check_counit_antipode, check_hopf_axioms, coassociativity_residual,
                        coproduct_residual, counit_residuals)
from qhopf.models.contraction import build_contracted_gmu, build_qgroup_gmu, build_weyl
from qhopf.models.poincare import build_poincare_qalgebra, build_poincare_qgroup

H4 = build_poincare_qalgebra(4)


def failing(records):
    return [r.name for r in records if not r.passed]


def test_k_pplus_rule_compatible():
    assert not coproduct_residual(H4, "P+", "K")


def test_classical_homomorphism():
    H0 = build_poincare_qalgebra(0)
    assert failing(check_hopf_axioms(H0)) == []


def test_dropped_factor_fails_at_order_one():
    bad = [r for r in check_coproduct_compatibility(drop_coproduct_factor(H4)) if not r.passed]
    assert bad
    assert min(r.first_failing_order for r in bad) == 1


def test_pplus_coassociative():
    assert not coassociativity_residual(H4, "P+")


def test_delta_k_coassociative():
    assert not coassociativity_residual(H4, "K")


def test_weyl_delta_j_coassociative():
    assert not coassociativity_residual(build_weyl("sym", 3), "J")


def test_counit_pminus():
    left, right = counit_residuals(H4, "P-")
    assert not left and not right


def test_antipode_pminus():
    left, right = antipode_residuals(H4, "P-")
    assert not left and not right


def test_flipped_antipode_fails_at_order_zero():
    bad = [r for r in check_counit_antipode(flip_antipode_sign(H4)) if not r.passed]
    assert bad
    assert min(r.first_failing_order for r in bad) == 0


@pytest.mark.parametrize("build", [
    lambda: build_poincare_qalgebra(3),
    lambda: build_poincare_qgroup(2, 3),
    lambda: build_weyl("sym", 3),
    lambda: build_weyl(-1, 3),
    lambda: build_contracted_gmu(3),
    lambda: build_contracted_gmu(3, 0),
    lambda: build_qgroup_gmu("sym", 1, 3),
])
def test_catalog_models_pass(build):
    H = build()
    assert failing(check_coproduct_compatibility(H)) == []
    assert failing(check_coassociativity(H)) == []
    assert failing(check_counit_antipode(H)) == []


def test_printed_funw_antipode_fails():
    H = build_qgroup_gmu("sym", 1, 3, printed_antipode=True)
    bad = [r for r in check_counit_antipode(H) if not r.passed]
    assert bad
    assert min(r.first_failing_order for r in bad) == 0
