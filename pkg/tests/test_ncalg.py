from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhopf.errors import RankOverflow
from qhopf.models import functions as fn
from qhopf.models.contraction import build_weyl
from qhopf.models.poincare import build_poincare_qalgebra
from qhopf.ncalg import commutator, embed, flip, map_tensor, normal_order, tensor

H3 = build_poincare_qalgebra(3)
A3 = H3.alg
K, Pp, Pm = A3.gens("K", "P+", "P-")
GENS = ("K", "P+", "P-")


def words(max_len=3):
    return st.lists(st.sampled_from(GENS), min_size=0, max_size=max_len)


def elements(alg=A3):
    term = st.tuples(st.integers(-3, 3), st.integers(0, 2), words())
    return st.lists(term, min_size=1, max_size=3).map(
        lambda ts: sum((normal_order(w, alg).scale(c, k=k) for c, k, w in ts), alg.zero()))


# -- spec examples -------------------------------------------------------------


def test_reorder_pplus_k():
    got = normal_order(["P+", "K"], A3)
    assert got == K * Pp - 2 * Pp - (Pp ** 3).scale(Fraction(1, 3), k=2)


def test_pplus_pminus_already_ordered():
    assert normal_order(["P+", "P-"], A3) == Pp * Pm
    assert list(normal_order(["P+", "P-"], A3).terms) == [(((0, 1, 1),), 0, 0, 0)]


def test_unit_times_k():
    assert normal_order([1, "K"], A3) == K


def test_commutator_k_pminus():
    assert commutator(K, Pm) == -2 * Pm - (Pp ** 2 * Pm).scale(1, k=2)


def test_commutator_pplus_pminus():
    assert not commutator(Pp, Pm)


def test_exp_zero():
    assert fn.exp(A3.zero()) == A3.one()


def test_sinh_zpplus():
    assert fn.sinh(Pp.scale(1, k=1)) == Pp.scale(1, k=1) + (Pp ** 3).scale(Fraction(1, 6), k=3)


def test_generalized_cosine():
    W = build_weyl("sym", 2)
    P1 = W.alg.gen("P1")
    got = fn.gcos(P1.scale(Fraction(1, 2), k=1))
    assert got == W.alg.one() + (P1 ** 2).scale(Fraction(1, 8), k=2, mu=1)


def test_flip_defining_case():
    assert flip(tensor(K, Pp)) == tensor(Pp, K)


def test_flip_delta_pminus():
    want = tensor(fn.exp(Pp.scale(1, k=1)), Pm) + tensor(Pm, fn.exp(Pp.scale(-1, k=1)))
    assert flip(H3.coproduct["P-"]) == want


def test_embed_13():
    assert embed(tensor(K, Pp), "13") == tensor(K, A3.one(), Pp)


def test_embed_unit():
    one2 = A3.one(2)
    for slots in ("12", "13", "23"):
        assert embed(one2, slots) == A3.one(3)


def test_map_tensor_examples():
    assert map_tensor(A3.one(2), 0, H3.coproduct) == A3.one(3)
    want = tensor(tensor(A3.one(), Pp) + tensor(Pp, A3.one()), K)
    assert map_tensor(tensor(Pp, K), 0, H3.coproduct) == want
    eps_id = map_tensor(H3.coproduct["K"], 0, H3.counit)
    assert eps_id == K


def test_rank_overflow():
    with pytest.raises(RankOverflow):
        map_tensor(A3.one(3), 0, H3.coproduct)


# -- properties ----------------------------------------------------------------


@given(elements(), elements(), elements())
def test_confluence(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(words(4))
def test_normal_order_any_bracketing(w):
    left = normal_order(w, A3)
    right = A3.one()
    for g in reversed(w):
        right = A3.gen(g) * right
    assert left == right


@given(elements(), elements(), elements(), elements())
def test_embedded_products_two_ways(a, b, c, d):
    t, u = tensor(a, b), tensor(c, d)
    direct = embed(t, "12") * embed(u, "23")
    expanded = tensor(a, b * c, d)
    assert direct == expanded


@given(words(4), st.integers(1, 2))
def test_truncation_consistency(w, lower):
    low = A3.copy(order=lower)
    assert normal_order(w, A3).truncate(lower).rebase(low) == normal_order(w, low)


@given(words(4))
def test_parameter_zero_is_classical(w):
    classical = build_poincare_qalgebra(0).alg
    assert normal_order(w, A3).at_order(0).rebase(classical) == normal_order(w, classical)


@given(elements())
def test_exp_inverse(x):
    x = x.scale(1, k=1)
    assert fn.exp(x) * fn.exp(-x) == A3.one()


@given(elements())
def test_self_commutator(x):
    assert not commutator(x, x)


@given(elements(), elements())
def test_flip_involution(a, b):
    t = tensor(a, b) + tensor(b, a * b)
    assert flip(flip(t)) == t
