from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from utils.bounds import grushevsky_alpha_eff, weissauer_alpha_base
from utils.errors import PreconditionError
from utils.exactmath import Interval, Precision
from utils.siegel import CASE_TWO_VALUES, holomorphic_bound
from utils.thresholds import (
    PUBLISHED_MG_LEVELS,
    ag_kobayashi_level,
    ag_max_general_type_codim,
    ag_uniform_level,
    ball_level,
    ht06_level,
    level_threshold,
    mg_level,
    volume_factor,
)


def test_level_threshold_exact():
    report = level_threshold(Fraction(1, 3), Fraction(1))
    assert report.quantity == 3
    assert report.certified_level == 4
    assert report.agrees is None

    report = level_threshold(weissauer_alpha_base(8), Fraction(1, 9))
    assert report.quantity == 12
    assert report.certified_level == 13


def test_level_threshold_interval():
    alpha = grushevsky_alpha_eff(2, Precision(64))
    report = level_threshold(alpha, Fraction(1))
    assert isinstance(report.quantity, Interval)
    assert Fraction("6.32") < report.quantity.lo < report.quantity.hi < Fraction("6.33")
    assert report.certified_level == 7

    refined = level_threshold(lambda working: grushevsky_alpha_eff(2, working), Fraction(1), Precision(64))
    assert refined.certified_level == 7


def test_level_threshold_rejects_non_positive():
    with pytest.raises(PreconditionError):
        level_threshold(Fraction(0), Fraction(1))
    with pytest.raises(PreconditionError):
        level_threshold(Fraction(1), Fraction(-1))


positive = st.fractions(min_value=Fraction(1, 100), max_value=100)


@given(positive, positive, positive, positive)
def test_level_threshold_antitone(alpha, c_p, more_alpha, more_c_p):
    base = level_threshold(alpha, c_p).certified_level
    assert level_threshold(alpha + more_alpha, c_p).certified_level <= base
    assert level_threshold(alpha, c_p + more_c_p).certified_level <= base


def test_ag_kobayashi_level_genus_four():
    report = ag_kobayashi_level(4)
    assert report.quantity == 24
    assert report.certified_level == 25
    assert report.published_value == 24
    assert report.agrees is True


def test_ag_kobayashi_level_identity():
    for g in range(2, 101):
        report = ag_kobayashi_level(g)
        assert report.quantity == 6 * g
        assert report.certified_level == 6 * g + 1


def test_ag_uniform_level():
    report = ag_uniform_level(Precision(64))
    assert Fraction("53.6") < report.quantity.lo < report.quantity.hi < Fraction("53.7")
    assert report.certified_level == 54
    assert report.agrees is True

    assert [check.g for check in report.checks] == list(range(2, 31))
    assert all(check.quantity.hi < 54 for check in report.checks)
    genus_two = report.checks[0].quantity
    assert Fraction("18.9") < genus_two.lo < genus_two.hi < Fraction("19.1")


@pytest.mark.parametrize("g", [8, 9])
def test_mg_level_matches_published(g):
    report = mg_level(g)
    assert report.certified_level == 13
    assert report.published_value == 13
    assert report.agrees is True


def test_mg_level_genus_seven_diverges():
    report = mg_level(7)
    assert report.quantity == Fraction(48, 7)
    assert report.certified_level == 7
    assert report.published_value == 22
    assert report.agrees is False


def test_mg_level_report_small_genera():
    reports = [mg_level(g) for g in sorted(PUBLISHED_MG_LEVELS)]
    assert [report.g for report in reports] == list(range(2, 12))
    assert all(report.agrees is not None for report in reports)
    assert any(report.agrees is False for report in reports)


def test_mg_level_genus_twelve():
    report = mg_level(12)
    assert report.details["k"] == 7
    assert report.quantity == 24
    assert report.published_value == 24
    assert report.offset == 1


@pytest.mark.parametrize("g", range(12, 31))
def test_mg_level_closed_form(g):
    report = mg_level(g)
    k, r = report.details["k"], report.details["r"]
    assert report.published_value == 6 * (g - k - 1)
    if r != 0 and (g - k, r) not in CASE_TWO_VALUES:
        assert report.quantity == 6 * (g - k - 1)
        assert report.offset == 1


def test_ball_level():
    report = ball_level(9, 4, Precision(64))
    # 2 pi / 5
    assert Fraction("1.256") < report.quantity.lo
    assert report.certified_level == 2


def test_ht06_level():
    report = ht06_level(6, Fraction(1, 6), g=3)
    assert report.quantity == 138
    assert report.certified_level == 139
    # the published bound is this formula, nothing separate to compare with
    assert report.published_value is None
    assert report.agrees is None

    assert ht06_level(3, Fraction(1, 2)).quantity == 16


@pytest.mark.parametrize("g", range(12, 31))
def test_ag_max_general_type_codim(g):
    assert ag_max_general_type_codim(g) == g - 12


def test_ag_max_general_type_codim_below_twelve():
    with pytest.raises(PreconditionError):
        ag_max_general_type_codim(11)


def test_volume_factor():
    prec = Precision(32)
    assert volume_factor(Fraction(1), Fraction(1), Fraction(2), 0, prec) == Interval.point(1)

    value = volume_factor(Fraction(1), Fraction(1), Fraction(2), 1, prec)
    assert Fraction("0.07957747") < value.lo < value.hi < Fraction("0.07957748")

    with pytest.raises(PreconditionError):
        volume_factor(Fraction(1), Fraction(2), Fraction(2), 1, prec)


@pytest.mark.parametrize("g", [0, -1, 1])
def test_levels_reject_small_genus(g):
    with pytest.raises(PreconditionError):
        ag_kobayashi_level(g)
    with pytest.raises(PreconditionError):
        holomorphic_bound(g)
