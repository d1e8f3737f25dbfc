from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from degenhyper.errors import NonzeroInnerConstant, OrderExceeded
from degenhyper.series import (
    GF,
    TruncatedSeries as TS,
    compose,
    deg_exp_series,
    egf_coefficient,
    exp_series,
    gf_extract_family,
    mul,
    pow_int,
    scale,
)

coeff = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def series(order=5):
    return st.lists(coeff, min_size=order + 1, max_size=order + 1).map(lambda cs: TS.of(*cs))


@pytest.mark.parametrize(
    "x, lam, order, expected",
    [(0, F(1, 2), 4, [1, 0, 0, 0, 0]), (1, 1, 3, [1, 1, 0, 0]), (1, F(1, 2), 3, [1, 1, F(1, 4), 0])],
)
def test_deg_exp_series(x, lam, order, expected):
    assert deg_exp_series(x, lam, order) == TS.of(*expected)


def test_ring_examples():
    assert mul(TS.of(1, 1), TS.of(1, -1)) == TS.of(1, 0)
    assert pow_int(TS.of(1, 1, 0, 0), 2) == TS.of(1, 2, 1, 0)
    assert scale(TS.of(0, 1, F(1, 2)), 3) == TS.of(0, 3, F(3, 2))


def test_mixed_orders_truncate_to_shorter():
    assert (TS.of(1, 2, 3) + TS.of(1, 1)).order == 1


@pytest.mark.parametrize(
    "outer, inner, expected",
    [
        ([1, 1, F(1, 2)], [0, 1], [1, 1, F(1, 2)]),
        ([1, 0, 1], [0, 2], [1, 0, 4]),
        ([1, 1, 0], [0, 0, 1], [1, 0, 1]),
    ],
)
def test_compose_examples(outer, inner, expected):
    assert compose(TS.of(*outer), TS.of(*inner)) == TS.of(*expected)


def test_compose_needs_zero_constant():
    with pytest.raises(NonzeroInnerConstant):
        compose(TS.of(1, 1), TS.of(1, 1))


def test_egf_coefficient():
    assert egf_coefficient(TS.of(1, 1, F(1, 2), F(1, 6)), 3) == 1
    assert egf_coefficient(TS.of(1, 0, 0), 1) == 0
    assert egf_coefficient(deg_exp_series(1, F(1, 2), 3), 2) == F(1, 2)
    with pytest.raises(OrderExceeded):
        egf_coefficient(TS.of(1, 0), 2)


def test_gf_extract_examples():
    assert gf_extract_family(GF.S2_DEG, 2, k=1, lam=F(1, 2)) == F(1, 2)
    for n in range(6):
        assert gf_extract_family(GF.APOSTOL_S2, n, n=n, lam1=1) == 1
    assert gf_extract_family(GF.H, 2, n=1, lam=F(1, 2)) == F(5, 4)


def test_extract_beyond_default_order():
    # e^t has every EGF coefficient 1
    assert gf_extract_family(GF.BELL, 20, x=0, lam=1) == 0
    assert egf_coefficient(exp_series(20), 20) == 1


@given(series(), series(), series())
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == TS.constant(0, a.order)


@given(series(), st.integers(0, 5), st.integers(0, 5))
def test_pow_adds_exponents(a, j, k):
    assert pow_int(a, j) * pow_int(a, k) == pow_int(a, j + k)


@given(coeff, coeff, st.fractions(min_value=F(-2), max_value=F(2), max_denominator=4))
def test_exponential_law(x, y, lam):
    # e_lam^x(t) e_lam^y(t) = e_lam^(x+y)(t)
    assert deg_exp_series(x, lam, 6) * deg_exp_series(y, lam, 6) == deg_exp_series(x + y, lam, 6)


@given(series(4), series(4), series(4))
def test_compose_is_a_homomorphism(a, b, inner):
    inner = TS.of(0, *inner.coeffs[1:])
    assert compose(a * b, inner) == compose(a, inner) * compose(b, inner)
