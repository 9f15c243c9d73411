"""The ten acceptance criteria, each exact (zero tolerance).

Every criterion records one PASS/FAIL line; conftest prints them at the end
of the run, and running this file directly prints them as it goes.
"""

import pytest

from qhopf import matrep as M
from qhopf import poisson as P
from qhopf.controls import EXPECTED_FIRST_ORDER, control_matches, run_controls
from qhopf.hopf import check_hopf_axioms
from qhopf.models.contraction import (build_contracted_gmu, build_qgroup_gmu, build_weyl,
                                      weyl_restriction_diff)
from qhopf.models.lie import gmu_table, poincare_table, schouten_check, table_residual, wedge_bivector, weyl_table
from qhopf.models.poincare import build_poincare_qalgebra, build_poincare_qgroup
from qhopf.ncalg import wedge
from qhopf.rmatrix import (build_R_contracted, build_R_poincare, classical_limit, closed_form_R,
                           doubled_product_R, quasitriangular_checks, verify_ansatz_recurrence)

RESULTS: dict = {}


def record(n: int, title: str, failures: list):
    ok = not failures
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}"
    if not ok:
        line += f"  ({len(failures)} failing: {', '.join(map(str, failures[:4]))})"
    RESULTS[n] = line
    print(line)
    assert ok, line


def failing(records, tag=""):
    return [f"{tag}{r.name}" for r in records if not r.passed]


def test_criterion_1_hopf_axioms():
    bad = []
    bad += failing(check_hopf_axioms(build_poincare_qalgebra(4)), "uz-iso11 N=4: ")
    bad += failing(check_hopf_axioms(build_weyl("sym", 4)), "uw-ssym N=4: ")
    bad += failing(check_hopf_axioms(build_contracted_gmu(4)), "uw-gsym N=4: ")
    bad += failing(check_hopf_axioms(build_poincare_qgroup(3, 4)), "funz-iso11 N=3 D=4: ")
    bad += failing(check_hopf_axioms(build_qgroup_gmu("sym", 2, 3)), "funw-gsym N=2 D=3: ")
    record(1, "Hopf axioms for every catalog model at the stated orders", bad)


def test_criterion_2_poincare_r():
    H = build_poincare_qalgebra(4)
    R = build_R_poincare(H)
    bad = failing(quasitriangular_checks(R, H))
    K, Pp = H.alg.gens("K", "P+")
    if classical_limit(R) != wedge(K, Pp).scale(1, k=1):
        bad.append("first-order term is not z K ^ P+")
    record(2, "Poincare R: intertwining, factorizations, QYBE through N=4; first order z K^P+", bad)


def test_criterion_3_recurrence():
    bad = failing(verify_ansatz_recurrence(build_poincare_qalgebra(4), 3))
    record(3, "ansatz recurrence, closed forms for n <= 3 and the matching condition for g, N=4", bad)


def test_criterion_4_contraction():
    bad = []
    G = build_contracted_gmu(4)
    for tbl in (G.coproduct, G.antipode):
        bad += [f"{g} not s-free" for g, v in tbl.items() if not v.s_free()]
    names = G.alg.names
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            if not G.alg.bracket_value(a, b).s_free():
                bad.append(f"[{a},{b}] not s-free")
    for mu in ("sym", -1, 0, 1):
        table = gmu_table() if mu == "sym" else gmu_table().specialize(mu)
        if table_residual(build_contracted_gmu(4, mu), table):
            bad.append(f"w=0 limit differs from g_mu at mu={mu}")
    bad += [f"restriction {d[0]} {d[1]}" for d in weyl_restriction_diff(4)]
    record(4, "contracted tables s-free, w=0 limits equal g_mu for all mu, restriction equals U_w s_mu", bad)


def test_criterion_5_contracted_r():
    W = build_weyl("sym", 3)
    bad = []
    if closed_form_R(W).element != doubled_product_R(3, W).element:
        bad.append("doubled product differs from closed form")
    bad += failing(quasitriangular_checks(build_R_contracted("sym", 3), W))
    record(5, "contracted R: doubled product equals closed form and is quasitriangular, N=3", bad)


def test_criterion_6_classical_r():
    bad = []
    if schouten_check(wedge_bivector(("K", "P+")), poincare_table()):
        bad.append("Schouten K^P+")
    if schouten_check(wedge_bivector(("J", "P1"), ("D", "P2")), weyl_table()):
        bad.append("Schouten J^P1 + D^P2")
    H = build_poincare_qalgebra(4)
    K, Pp = H.alg.gens("K", "P+")
    if classical_limit(build_R_poincare(H)) != wedge(K, Pp).scale(1, k=1):
        bad.append("classical limit of the Poincare R")
    Rc = build_R_contracted("sym", 3)
    J, D, P1, P2 = Rc.alg.gens("J", "D", "P1", "P2")
    if classical_limit(Rc) != (wedge(J, P1) + wedge(D, P2)).scale(1, k=1):
        bad.append("classical limit of the contracted R")
    record(6, "classical YBE for both r-matrices; classical limits reproduce them", bad)


def test_criterion_7_matrix_rep():
    rep = M.build_rep("sym")
    bad = failing(M.check_rep_brackets(rep))
    if M.rep_R("sym", 4, rep) != M.rep_R_closed_form(rep):
        bad.append("represented R differs from I + w r + mu w^2 P1 (x) P1")
    record(7, "g_mu brackets in the 4x4 matrices; represented R in closed form", bad)


def test_criterion_8_frt_sign():
    bad = []
    try:
        records, verdict = M.frt_rtt_check("sym", 2, 3)
    except Exception as exc:  # NeitherSignMatches
        records, verdict = [], "none"
        bad.append(type(exc).__name__)
    if sum(r.passed for r in records) != 1:
        bad.append("not exactly one sign")
    if verdict != "w -> -w":
        bad.append(f"verdict is {verdict!r}, expected the flip 'w -> -w'")
    record(8, "FRT relations at N=2, D=3 under exactly one sign, verdict the global flip", bad)


def test_criterion_9_poisson():
    bad = failing(P.verify_poisson_table()) + failing(P.verify_jacobi()) + failing(P.verify_poisson_hopf())
    bad += failing(P.quantum_classical_link("sym", 2, 3))
    record(9, "Sklyanin table, Jacobi, Poisson-Hopf and the order-w link, mu symbolic", bad)


def test_criterion_10_negative_controls():
    bad = []
    for name, (recs, first) in run_controls(4).items():
        if not recs or not control_matches(name, first):
            bad.append(f"{name}: first failing order {first}, documented {EXPECTED_FIRST_ORDER[name]}")
    record(10, "each mutation fails at its documented first order", bad)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
