from fractions import Fraction

import pytest

from qhopf.errors import NonSkewFirstOrder
from qhopf.models.contraction import build_weyl
from qhopf.models.poincare import build_poincare_qalgebra
from qhopf.ncalg import tensor, wedge
from qhopf.rmatrix import (RMatrix, build_R_contracted, build_R_poincare, classical_limit,
                           closed_form_R, doubled_product_R, exponent_inverse_residual,
                           factorization_residuals, intertwining_residual, qybe_residual,
                           verify_ansatz_recurrence)

H4 = build_poincare_qalgebra(4)
R4 = build_R_poincare(H4)
K, Pp, Pm = H4.alg.gens("K", "P+", "P-")


def test_first_order_term():
    assert R4.element.at_order(1) == wedge(K, Pp).scale(1, k=1)


def test_zeroth_order_term():
    assert R4.element.at_order(0) == H4.alg.one(2)


def test_second_order_term():
    # the exponent has no z^2 part, so only E^2/2 contributes; reordering
    # the square pushes some of it to order 4
    w = wedge(K, Pp).scale(1, k=1)
    assert R4.element.at_order(2) == (w * w).scale(Fraction(1, 2)).at_order(2)


@pytest.mark.parametrize("gen", ["K", "P+", "P-"])
def test_intertwining(gen):
    assert not intertwining_residual(R4, H4, gen)


def test_factorizations():
    left, right = factorization_residuals(R4, H4)
    assert not left and not right


def test_factorization_low_orders():
    left, right = factorization_residuals(R4, H4)
    for k in (0, 1):
        assert not left.at_order(k) and not right.at_order(k)


def test_qybe():
    assert not qybe_residual(R4)


def test_dropped_g_breaks_qybe_or_factorization():
    bad = build_R_poincare(H4, with_g=False)
    left, right = factorization_residuals(bad, H4)
    assert qybe_residual(bad) or left or right


def test_inverse():
    assert not exponent_inverse_residual(R4)


def test_unit_r_classical_limit():
    one = H4.alg.one(2)
    assert not classical_limit(RMatrix(one, H4.alg.zero(2), "unit", 4))


def test_non_skew_first_order():
    t = tensor(K, Pp).scale(1, k=1)
    with pytest.raises(NonSkewFirstOrder):
        classical_limit(H4.alg.one(2) + t)


def test_recurrence():
    failed = [r.name for r in verify_ansatz_recurrence(build_poincare_qalgebra(4), 3) if not r.passed]
    assert failed == []


def test_contracted_product_equals_closed_form():
    W = build_weyl("sym", 3)
    assert closed_form_R(W).element == doubled_product_R(3, W).element


def test_contracted_first_order():
    R = build_R_contracted("sym", 3)
    J, D, P1, P2 = R.alg.gens("J", "D", "P1", "P2")
    assert classical_limit(R) == (wedge(J, P1) + wedge(D, P2)).scale(1, k=1)
    assert R.element.at_order(0) == R.alg.one(2)


def test_contracted_only_weyl_generators():
    R = build_R_contracted("sym", 3)
    assert R.element.generators_used() <= {"J", "D", "P1", "P2"}


@pytest.mark.parametrize("mu", ["sym", 0])
def test_contracted_quasitriangular(mu):
    W = build_weyl(mu, 3)
    R = build_R_contracted(mu, 3, compare=False)
    for g in W.alg.names:
        assert not intertwining_residual(R, W, g)
    left, right = factorization_residuals(R, W)
    assert not left and not right
    assert not qybe_residual(R)
