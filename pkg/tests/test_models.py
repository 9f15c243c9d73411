import pytest

from qhopf.coeffring import MuPoly
from qhopf.errors import PresentationMismatch, WrongMuMode
from qhopf.hopf import check_hopf_axioms
from qhopf.models import functions as fn
from qhopf.models.contraction import (ALGEBRA_MAP, GROUP_MAP, build_contracted_gmu, build_qgroup_gmu,
                                      build_weyl, compare_qgroup_gmu, weyl_restriction_diff)
from qhopf.models.doubled import build_doubled, doubled_basis
from qhopf.models.kinematics import inverse_relabel, kinematical_relabel, relabeled_brackets
from qhopf.models.lie import (gmu_table, poincare_table, schouten_check, table_residual, wedge_bivector,
                              weyl_table)
from qhopf.models.poincare import build_poincare_qalgebra, build_poincare_qgroup, dual_basis_elements
from qhopf.ncalg import commutator, tensor


def test_poincare_delta_pplus():
    H = build_poincare_qalgebra(3)
    Pp = H.gen("P+")
    assert H.coproduct["P+"] == tensor(H.alg.one(), Pp) + tensor(Pp, H.alg.one())


def test_poincare_classical_brackets():
    H = build_poincare_qalgebra(3)
    K, Pp, Pm = H.alg.gens("K", "P+", "P-")
    assert commutator(K, Pp).at_order(0) == 2 * Pp
    assert commutator(K, Pm).at_order(0) == -2 * Pm
    assert not commutator(Pp, Pm)


def test_poincare_antipode_pplus():
    H = build_poincare_qalgebra(3)
    assert H.gamma(H.gen("P+")) == -H.gen("P+")


def test_qgroup_chi_aplus():
    H = build_poincare_qgroup(3, 4)
    X, Ap = H.alg.gens("chi", "a+")
    want = (fn.exp(2 * X) - H.alg.one()).scale(1, k=1)
    assert commutator(X, Ap) == want


def test_qgroup_delta_aminus():
    H = build_poincare_qgroup(3, 4)
    X, Am = H.alg.gens("chi", "a-")
    assert H.coproduct["a-"] == tensor(Am, H.alg.one()) + tensor(fn.exp(-2 * X), Am)


def test_qgroup_hopf_suite():
    H = build_poincare_qgroup(3, 4)
    assert all(r.passed for r in check_hopf_axioms(H))


def test_doubled_copies_commute():
    H = build_doubled(3)
    assert not commutator(H.gen("K1"), H.gen("P2+"))


def test_doubled_basis_bracket_at_zero():
    H = build_doubled(3)
    b = doubled_basis(H)
    assert commutator(b["J3"], b["J+"]).at_order(0) == 2 * b["J+"]


def test_second_copy_has_negated_parameter():
    H = build_doubled(3)
    K2, P2 = H.alg.gens("K2", "P2+")
    assert commutator(K2, P2) == 2 * P2 * fn.sinhc(P2.scale(-1, k=1))


def test_contracted_j_p2():
    G = build_contracted_gmu(4)
    J, P1, P2 = G.alg.gens("J", "P1", "P2")
    assert commutator(J, P2).at_order(0) == P1.scale(1, mu=1)


@pytest.mark.parametrize("c", ["C1", "C2"])
def test_contracted_d_c(c):
    G = build_contracted_gmu(4)
    D, C = G.alg.gens("D", c)
    assert commutator(D, C).at_order(0) == -C


def test_contracted_tables_s_free():
    G = build_contracted_gmu(4)
    for tbl in (G.coproduct, G.antipode):
        assert all(v.s_free() for v in tbl.values())
    names = G.alg.names
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            assert G.alg.bracket_value(a, b).s_free()


@pytest.mark.parametrize("mu", ["sym", -1, 0, 1])
def test_contracted_limit_is_g_mu(mu):
    table = gmu_table() if mu == "sym" else gmu_table().specialize(mu)
    assert table_residual(build_contracted_gmu(3, mu), table) == {}


@pytest.mark.parametrize("mu", [-1, 0, 1])
def test_specialization_commutes_with_contraction(mu):
    sym = build_contracted_gmu(3)
    spec = build_contracted_gmu(3, mu)
    for g in sym.alg.names:
        assert sym.coproduct[g].specialize_mu(mu).rebase(spec.alg) == spec.coproduct[g]


def test_weyl_delta_p1():
    W = build_weyl("sym", 3)
    P1 = W.gen("P1")
    assert W.coproduct["P1"] == tensor(W.alg.one(), P1) + tensor(P1, W.alg.one())


def test_weyl_d_j_commute():
    W = build_weyl("sym", 3)
    assert not commutator(W.gen("D"), W.gen("J"))


def test_weyl_limit():
    assert table_residual(build_weyl("sym", 3), weyl_table()) == {}


def test_weyl_is_restriction():
    assert weyl_restriction_diff(4) == []


def test_weyl_closure():
    W = build_weyl("sym", 3)
    for tbl in (W.coproduct, W.antipode):
        for v in tbl.values():
            assert v.generators_used() <= {"J", "D", "P1", "P2"}


def test_funw_p2_c2():
    H = build_qgroup_gmu("sym", 2, 3)
    p2, c2 = H.alg.gens("p2", "c2")
    assert commutator(p2, c2) == -c2.scale(1, k=1)


def test_funw_delta_d():
    H = build_qgroup_gmu("sym", 2, 3)
    d = H.gen("d")
    assert H.coproduct["d"] == tensor(d, H.alg.one()) + tensor(H.alg.one(), d)


def test_funw_reconstruction_matches():
    assert compare_qgroup_gmu(2, 3) == []


def test_printed_antipode_mismatch_raises():
    with pytest.raises(PresentationMismatch):
        compare_qgroup_gmu(1, 3, printed_antipode=True, raise_on_diff=True)


def test_contraction_maps_invert():
    assert ALGEBRA_MAP.compose_residual() == []
    assert GROUP_MAP.compose_residual() == []


def test_schouten_examples():
    assert schouten_check(wedge_bivector(("K", "P+")), poincare_table()) == {}
    assert schouten_check(wedge_bivector(("J", "P1"), ("D", "P2")), weyl_table()) == {}
    assert schouten_check({}, gmu_table()) == {}


def test_schouten_detects_failure():
    assert schouten_check(wedge_bivector(("J", "P1")), weyl_table())


@pytest.mark.parametrize("table", [poincare_table(), gmu_table(), weyl_table()])
def test_jacobi_tables(table):
    assert table.jacobi_residual() == {}
    assert table.antisymmetry_residual() == {}


def test_relabel_examples():
    assert inverse_relabel("H~") == {"D": -1}
    assert kinematical_relabel("D") == {"H~": -1}
    assert inverse_relabel("x1") == {"p1": 2, "c1": 2}


@pytest.mark.parametrize("name", ["J", "P1", "P2", "C1", "C2", "D", "theta", "p1", "c2", "d"])
def test_relabel_roundtrip(name):
    assert inverse_relabel(kinematical_relabel(name)) == {name: 1}


def test_relabel_needs_mu_minus_one():
    with pytest.raises(WrongMuMode):
        kinematical_relabel("D", mu=1)


def test_newton_hooke_brackets():
    # by hand: [(P1 -+ C1)/2, -D] = (P1 +- C1)/2 at mu = -1
    nh = relabeled_brackets(gmu_table())
    assert nh[("K1~", "H~")] == {"P1~": 1}
    assert nh[("P1~", "H~")] == {"K1~": 1}
    assert nh[("J~", "P2~")] == {"P1~": -1}


def test_dual_basis_elements_constructible():
    H = build_poincare_qalgebra(3)
    els = dual_basis_elements(H)
    assert els["A+"] == H.gen("P+")
    assert els["H"].at_order(0) == H.gen("K")


def test_mu_symbol():
    assert MuPoly.var().evaluate(-1) == -1
