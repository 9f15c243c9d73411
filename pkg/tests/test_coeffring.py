from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhopf.coeffring import (MuPoly, ScalarSeries, SPoly, eliminate_s, evaluate_mu, fmt_rational,
                             parse_rational, series_invert)
from qhopf.errors import NonUnitConstantTerm, OddSPowerResidue

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def series(order=3, s_even=False):
    keys = st.tuples(st.integers(0, order), st.integers(0, 3).map(lambda e: 2 * e if s_even else e),
                     st.just(0))
    return st.dictionaries(keys, fracs, max_size=5).map(lambda d: ScalarSeries(d, order, "w"))


def mupolys():
    return st.dictionaries(st.integers(0, 3), fracs, max_size=4).map(MuPoly)


# -- spec examples -------------------------------------------------------------


def test_invert_one():
    one = ScalarSeries.from_coeffs([1], 3)
    assert series_invert(one) == one


def test_invert_one_plus_w():
    u = ScalarSeries.from_coeffs([1, 1], 2, "w")
    assert series_invert(u) == ScalarSeries.from_coeffs([1, -1, 1], 2, "w")


def test_invert_w_fails():
    with pytest.raises(NonUnitConstantTerm):
        series_invert(ScalarSeries.param_var(2, "w"))


def test_eliminate_s_squared():
    x = ScalarSeries({(1, 2, 0): 1}, 3, "w")
    assert eliminate_s(x) == ScalarSeries({(1, 0, 1): 1}, 3, "w")


def test_eliminate_s_odd_fails():
    with pytest.raises(OddSPowerResidue):
        eliminate_s(ScalarSeries({(1, 1, 0): 1}, 3, "w"))


def test_evaluate_mu_examples():
    mu = MuPoly.var()
    assert evaluate_mu(mu, 1) == 1
    assert evaluate_mu(1 + mu ** 2, -1) == 2
    assert evaluate_mu(mu, 0) == 0


def test_rational_roundtrip():
    assert fmt_rational(Fraction(1)) == "1/1"
    assert fmt_rational(Fraction(-3, 6)) == "-1/2"
    assert parse_rational("-1/2") == Fraction(-1, 2)


def test_polys_do_not_mix():
    with pytest.raises(TypeError):
        SPoly.var() + MuPoly.var()


def test_truncation_on_product():
    w = ScalarSeries.param_var(2, "w")
    assert not (w * w * w)


# -- properties ----------------------------------------------------------------


@given(series(), series(), series())
def test_series_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a


@given(mupolys(), mupolys(), mupolys())
def test_mupoly_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(mupolys(), mupolys(), st.sampled_from([-1, 0, 1]))
def test_evaluation_is_a_ring_map(a, b, v):
    assert evaluate_mu(a * b, v) == evaluate_mu(a, v) * evaluate_mu(b, v)
    assert evaluate_mu(a + b, v) == evaluate_mu(a, v) + evaluate_mu(b, v)


@given(series(), fracs.filter(bool))
def test_invert_property(x, c0):
    u = x + c0 - ScalarSeries({k: v for k, v in x.terms.items() if k[0] == 0}, x.order, "w")
    assert u * series_invert(u) == 1


@given(series(s_even=True), series(s_even=True))
def test_eliminate_s_is_multiplicative(a, b):
    assert eliminate_s(a * b) == eliminate_s(a) * eliminate_s(b)
