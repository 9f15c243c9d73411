from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhopf import matrep as M
from qhopf.commpoly import GFun, fun_vars
from qhopf.models.contraction import build_qgroup_gmu
from qhopf.poisson import coproduct

REP = M.build_rep("sym")
VARS2 = fun_vars(2)
I4 = M.Mat.identity(4, M.gc(0), M.gc(1))


def passed(records):
    return [r.name for r in records if not r.passed]


def test_j_entries():
    J = REP["J"]
    assert J.rows[0][1] == -M.gv("mu")
    assert J.rows[1][0] == M.gc(-1)
    assert [(i, j) for i, j, _ in J.nonzero_entries()] == [(1, 2), (2, 1)]


def test_reconstructed_p2_is_j_p1_bracket():
    assert M.commutator(REP["J"], REP["P1"]) == REP["P2"]


def test_reconstructed_entries():
    assert [(i, j, a) for i, j, a in REP["P2"].nonzero_entries()] == [(3, 1, M.gc(1)), (4, 1, M.gc(1))]
    assert [(i, j, a) for i, j, a in REP["C2"].nonzero_entries()] == [(3, 1, M.gc(-1)), (4, 1, M.gc(1))]


def test_d_j_commute():
    assert not M.commutator(REP["D"], REP["J"])


@pytest.mark.parametrize("p", ["P1", "P2"])
def test_d_p(p):
    assert M.commutator(REP["D"], REP[p]) == REP[p]


def test_j_c2():
    assert M.commutator(REP["J"], REP["C2"]) == REP["C1"] * M.gv("mu")


def test_p1_p2_commute():
    assert not M.commutator(REP["P1"], REP["P2"])


def test_all_brackets_symbolic():
    assert passed(M.check_rep_brackets(REP)) == []


@pytest.mark.parametrize("mu", [-1, 0, 1])
def test_all_brackets_specialized(mu):
    rep = M.build_rep(mu)
    for i, a in enumerate(M.GMU_ORDER):
        for b in M.GMU_ORDER[i + 1:]:
            res = M.commutator(rep[a], rep[b])
            for c, mp, g in M.GMU_BRACKETS.get((a, b), []):
                res = res - rep[g] * M.gc(Fraction(mu) ** mp * c)
            assert not res, (a, b)


def _at_identity(m):
    return m.map(lambda a: a.subs({"E": 1, "Ei": 1, "C": 1, "S": 0}))


def test_identity_parameters():
    g = M.group_element(REP, {"c1": 0, "c2": 0, "p1": 0, "p2": 0})
    assert _at_identity(g) == I4


def test_rotation_only():
    g = M.group_element(REP, {"c1": 0, "c2": 0, "p1": 0, "p2": 0}).map(lambda a: a.subs({"E": 1, "Ei": 1}))
    C, S, mu = M.gv("C"), M.gv("S"), M.gv("mu")
    assert g.rows[0][:2] == [C, -mu * S]
    assert g.rows[1][:2] == [-S, C]
    assert g.rows[2][2] == M.gc(1) and g.rows[3][3] == M.gc(1)


def test_t41():
    g = M.group_element(REP)
    v = M.gv
    assert g.rows[3][0] == (v("p2") + v("c2")) * v("C") - (v("p1") + v("c1")) * v("S")


def test_printed_group_element_matches():
    assert M.compare_group_element(REP) == []


def _lift(f, suffix):
    names = [n + suffix if n not in ("mu", "w") else n for n in f.vars]
    terms = {}
    for e, c in f.terms.items():
        new = [0] * len(VARS2)
        for n, p in zip(names, e):
            new[VARS2.index(n)] += p
        terms[tuple(new)] = c
    return GFun(VARS2, terms)


def test_group_law():
    g = M.group_element(REP)
    for i in range(4):
        for j in range(4):
            rhs = GFun(VARS2)
            for k in range(4):
                rhs = rhs + _lift(g.rows[i][k], "_1") * _lift(g.rows[k][j], "_2")
            assert coproduct(g.rows[i][j]) == rhs


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=8, max_size=8))
def test_translations_compose(xs):
    keys = ("c1", "c2", "p1", "p2")
    a, b = dict(zip(keys, xs[:4])), dict(zip(keys, xs[4:]))
    fix = lambda m: m.map(lambda e: e.subs({"E": 1, "Ei": 1, "C": 1, "S": 0}))  # noqa: E731
    ga, gb = fix(M.group_element(REP, a)), fix(M.group_element(REP, b))
    gab = fix(M.group_element(REP, {k: a[k] + b[k] for k in keys}))
    assert ga * gb == gab


def test_rep_r_closed_form():
    assert M.rep_R("sym", 4) == M.rep_R_closed_form(REP)


def test_rep_r_at_w_zero():
    m = M.rep_R("sym", 4).map(lambda a: a.subs({"w": 0}))
    assert m == M.Mat.identity(16, M.gc(0), M.gc(1))


def test_r_cubed_vanishes():
    r = M.r_rep(REP)
    assert r * r
    assert not (r * r * r)


def test_rep_r_mu_zero_drops_square_term():
    m = M.rep_R(0, 4)
    want = M.Mat.identity(16, M.gc(0), M.gc(1)) + M.r_rep(REP) * M.gv("w")
    assert m == want.map(lambda a: a.specialize_mu(0))


def test_frt_coproduct_from_t():
    H = build_qgroup_gmu("sym", 2, 3)
    assert passed(M.coproduct_from_T(H)) == []


def test_quantum_t_at_zero_order_is_classical():
    H = build_qgroup_gmu("sym", 2, 3)
    T = M.quantum_T(H)
    assert T.rows[0][0].at_order(0) == T.rows[0][0]
    assert T.rows[2][2] == T.rows[3][3]


def test_frt_verdict_is_reported():
    # both signs are tried; exactly one reproduces the relations
    records, verdict = M.frt_rtt_check("sym", 2, 3)
    assert verdict in ("w -> w", "w -> -w")
    assert sum(r.passed for r in records) == 1


def test_swap_factors_involution():
    m = M.rep_R_closed_form(REP)
    assert M.swap_factors(M.swap_factors(m)) == m
    assert M.swap_factors(M.kron(REP["J"], REP["P1"])) == M.kron(REP["P1"], REP["J"])


def test_transposed_convention_needs_the_flip():
    verdict = M.frt_rtt_check("sym", 2, 3)[1]
    flipped = M.frt_rtt_check("sym", 2, 3, transposed=True)[1]
    assert {verdict, flipped} == {"w -> w", "w -> -w"}
