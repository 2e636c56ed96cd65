from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from utils.bounds import (
    AlphaBound,
    BoundKind,
    IsotropyData,
    alpha_bound,
    beta_level,
    beta_upper_bound,
    check_condition_I,
    grushevsky_alpha_eff,
    grushevsky_alpha_eff_series,
    ht06_alpha_base,
    satisfies_weissauer_condition,
    weissauer_alpha_base,
    weissauer_condition_threshold,
    zeta_even,
)
from utils.errors import PrecisionExhausted, PreconditionError
from utils.exactmath import Interval, Precision, pi_interval


@pytest.mark.parametrize("g, value", [(11, 1), (2, Fraction(1, 4)), (23, 2)])
def test_weissauer_alpha_base(g, value):
    assert weissauer_alpha_base(g) == value


@pytest.mark.parametrize("n, value", [(3, Fraction(1, 8)), (6, Fraction(1, 23)), (1, Fraction(1, 3))])
def test_ht06_alpha_base(n, value):
    assert ht06_alpha_base(n) == value


def test_grushevsky_genus_two():
    value = grushevsky_alpha_eff(2, Precision(32))
    assert value.width <= Fraction(1, 2**32)
    assert Fraction("0.1581138") < value.lo
    assert value.hi < Fraction("0.1581139")
    # 3 * sqrt(1/360)
    assert (value.lo / 3) ** 2 <= Fraction(1, 360) <= (value.hi / 3) ** 2


def test_grushevsky_genus_three():
    value = grushevsky_alpha_eff(3, Precision(32))
    assert (value.lo / 4) ** 3 <= Fraction(1, 5040) <= (value.hi / 4) ** 3
    assert Fraction("0.2332") < value.lo < value.hi < Fraction("0.2334")


@pytest.mark.parametrize("g", range(2, 13))
def test_grushevsky_two_evaluations_agree(g):
    prec = Precision(40)
    simplified = grushevsky_alpha_eff(g, prec)
    series = grushevsky_alpha_eff_series(g, prec)
    assert simplified.width < Fraction(1, 10**10)
    assert series.width < Fraction(1, 10**10)
    assert simplified.intersects(series)


def test_zeta_two_and_four():
    zeta2 = zeta_even(1, Precision(16))
    assert zeta2.width <= Fraction(1, 2**16)
    assert zeta2.intersects(pi_interval(Precision(32)) ** 2 / 6)

    zeta4 = zeta_even(2, Precision(32))
    assert zeta4.width <= Fraction(1, 2**32)
    assert zeta4.intersects(pi_interval(Precision(48)) ** 4 / 90)
    assert Fraction("1.082323") < zeta4.lo < zeta4.hi < Fraction("1.082324")


@pytest.mark.parametrize("g", range(1, 11))
def test_zeta_above_one(g):
    assert zeta_even(g, Precision(16)).lo > 1


def test_zeta_gives_up_on_slow_series():
    with pytest.raises(PrecisionExhausted):
        zeta_even(1, Precision(64))


def test_alpha_bound_registry():
    bound = alpha_bound("weissauer-base", 11, Precision(32))
    assert bound.kind is BoundKind.WEISSAUER_BASE
    assert bound.value == 1

    ball = alpha_bound(BoundKind.BAKKER_TSIMERMAN, 9, Precision(32))
    assert isinstance(ball.value, Interval)
    assert Fraction("1.59") < ball.value.lo

    with pytest.raises(PreconditionError):
        AlphaBound(BoundKind.HT06_BASE, Fraction(0), "nowhere")


@pytest.mark.parametrize(
    "a, r, d, holds",
    [((1, 1, 2), 3, 2, False), ((1, 1, 2), 3, 3, True), ((2, 2), 4, 2, True)],
)
def test_check_condition_I(a, r, d, holds):
    assert check_condition_I(IsotropyData(a, r), d) is holds


@pytest.mark.parametrize(
    "a, r, p, beta",
    [((1, 1, 2), 3, 2, Fraction(1, 3)), ((1, 1, 2), 3, 3, 0), ((1,) * 5, 5, 5, 0)],
)
def test_beta_level(a, r, p, beta):
    assert beta_level(IsotropyData(a, r), p) == beta


@pytest.mark.parametrize("p, order, bound", [(4, 6, Fraction(1, 3)), (7, 6, 0), (1, 1, 0)])
def test_beta_upper_bound(p, order, bound):
    assert beta_upper_bound(p, order) == bound


def test_isotropy_preconditions():
    with pytest.raises(PreconditionError):
        IsotropyData((0, 1), 3)
    with pytest.raises(PreconditionError):
        IsotropyData((1, 1), 0)
    with pytest.raises(PreconditionError):
        check_condition_I(IsotropyData((1, 1), 2), 3)


def test_weissauer_condition_threshold():
    assert weissauer_condition_threshold(12) == 78 - 12 + 7
    assert satisfies_weissauer_condition(12, 73)
    assert not satisfies_weissauer_condition(12, 72)


isotropy = st.builds(
    IsotropyData,
    st.lists(st.integers(min_value=1, max_value=20), min_size=1, max_size=8).map(tuple),
    st.integers(min_value=1, max_value=30),
)


@given(isotropy, st.integers(min_value=0, max_value=10), st.data())
@settings(max_examples=1000)
def test_isotropy_criteria(data, extra_order, draw):
    n = len(data.a)
    d = draw.draw(st.integers(min_value=1, max_value=n))

    assert beta_level(data, d) <= beta_upper_bound(d, data.r + extra_order)
    assert check_condition_I(data, d) == (beta_level(data, d) == 0)
    if check_condition_I(data, d):
        assert all(check_condition_I(data, e) for e in range(d, n + 1))
