import pytest

from src.generating.small_labels import (
    small_label_family,
    small_label_system,
    t0_closed,
    t0_coeff,
    t1_closed,
    t1_coeff,
    tj_closed,
    tj_system,
    verify_lambda_family,
)
from src.generating.ternary import dary_count, series_T
from src.services.series_cache import series_cache
from src.trees.step_sets import StepSet
from src.utils.errors import DomainError

T0 = [1, 1, 2, 6, 22, 91, 408]
T1 = [1, 1, 3, 11, 46, 209, 1006]


def test_T0_three_routes():
    assert list(tj_system(0, 6).coeffs) == T0
    assert list(tj_closed(0, 6).coeffs) == T0
    assert list(t0_closed(6).coeffs) == T0
    assert [t0_coeff(n) for n in range(7)] == T0


def test_T1_three_routes():
    assert list(tj_system(1, 6).coeffs) == T1
    assert list(tj_closed(1, 6).coeffs) == T1
    assert list(t1_closed(6).coeffs) == T1
    assert [t1_coeff(n) for n in range(7)] == T1


def test_explicit_formulas_to_order_twenty():
    T0_series = tj_system(0, 20)
    T1_series = tj_system(1, 20)
    assert [t0_coeff(n) for n in range(21)] == list(T0_series.coeffs)
    assert [t1_coeff(n) for n in range(21)] == list(T1_series.coeffs)


@pytest.mark.parametrize("j", [-1, 0, 1, 2, 3, 5, 8])
def test_closed_form_equals_system(j):
    assert tj_closed(j, 14) == tj_system(j, 14)


def test_closed_form_self_check():
    tj_closed(2, 10, verify=True)


def test_no_labels_allowed_below_zero():
    assert tj_system(-1, 5).coeffs == (1, 0, 0, 0, 0, 0)


def test_large_bound_gives_all_trees():
    assert tj_system(40, 12) == series_T(3, 12)


def test_labels_below_minus_one_are_rejected():
    with pytest.raises(DomainError):
        tj_system(-2, 5)
    with pytest.raises(DomainError):
        tj_closed(-2, 5)


def test_family_is_increasing_in_j():
    family = small_label_family(4, 8)
    for j in range(-1, 4):
        assert all(a <= b for a, b in zip(family[j].coeffs, family[j + 1].coeffs))


@pytest.mark.parametrize("steps", [StepSet.binary(), StepSet.natural(4), StepSet.odd_increments(4)])
def test_bound_is_inactive_for_small_trees(steps):
    """Internal labels of a size-n tree stay below n * max increment"""
    order = 6
    for j in (0, 1, 2):
        series = small_label_system(steps, j, order)
        limit = j // steps.max_increment + 1
        for n in range(min(limit, order) + 1):
            assert series[n] == dary_count(steps.arity, n)


def test_lambda_family_identity():
    report = verify_lambda_family(-2, 2, 8, 3)
    assert report.passed
    assert len(report.cases) == 5


def test_truncation_matches_a_direct_computation():
    series_cache.clear()
    direct = tj_system(1, 6)
    series_cache.clear()
    assert tj_system(1, 12).truncate(6) == direct
