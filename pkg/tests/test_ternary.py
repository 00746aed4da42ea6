from fractions import Fraction

import pytest

from src.generating.ternary import (
    TERNARY,
    cardano_eval,
    chu_vandermonde_power_coeff,
    dary_count,
    dary_power_coeff,
    partial_sum,
    radius_of_convergence,
    series_T,
    series_Ttilde,
    series_X,
    t_power_coeff,
    ternary_sequence,
)
from src.utils.errors import DomainError


def test_ternary_counts():
    assert ternary_sequence(7) == [1, 1, 3, 12, 55, 273, 1428, 7752]


def test_catalan_counts_for_binary_trees():
    assert [dary_count(2, n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_series_T_matches_counts():
    assert series_T(3, 7).coeffs == tuple(ternary_sequence(7))


def test_Ttilde_is_T_minus_one():
    assert series_Ttilde(3, 8) == series_T(3, 8) - 1


@pytest.mark.parametrize("d", [2, 3, 4])
def test_power_coefficients_three_ways(d):
    """k/(dn+k) C(dn+k, n), the series power and the Chu-Vandermonde sum agree"""
    order = 10
    T = series_T(d, order)
    for k in range(5):
        power = T ** k
        for n in range(order + 1):
            assert dary_power_coeff(d, n, k) == power[n]
            assert chu_vandermonde_power_coeff(d, n, k) == power[n]


def test_known_power_coefficient():
    assert t_power_coeff(2, 2) == 7
    assert dary_power_coeff(3, 0, 0) == 1
    assert dary_power_coeff(3, 3, 0) == 0


def test_X_coefficients():
    assert series_X(7).coeffs == (0, 1, 3, 13, 64, 338, 1866, 10622)


def test_X_relations():
    X = series_X(12)
    T = series_T(3, 12)
    assert T * (1 + X * X) == 1 + X + X * X
    assert all(c >= 0 for c in X.coeffs)


def test_radius_of_convergence():
    assert TERNARY.radius_of_convergence == Fraction(4, 27)
    assert radius_of_convergence(3) == Fraction(4, 27)
    assert radius_of_convergence(2) == Fraction(1, 4)


@pytest.mark.parametrize("z, tolerance", [
    (-0.1, 1e-6),
    (-0.05, 1e-12),
    (0.05, 1e-12),
    (0.1, 1e-6),
])
def test_cardano_matches_partial_sums(z, tolerance):
    assert abs(cardano_eval(z) - partial_sum(z)) < tolerance


@pytest.mark.parametrize("z", [-0.14, -0.02, 0.03, 0.12])
def test_cardano_solves_the_cubic(z):
    """T~ = z(1 + T~)^3"""
    y = cardano_eval(z)
    assert y == pytest.approx(z * (1 + y) ** 3, abs=1e-12)


@pytest.mark.parametrize("z", [-1e-9, 1e-9])
def test_cardano_near_zero(z):
    """T~(z) = z + O(z^2); no cancellation blow-up next to the origin"""
    y = cardano_eval(z)
    assert abs(y) < 1e-6
    assert abs(y - z) < 1e-10


def test_cardano_at_zero_and_outside_the_disk():
    assert cardano_eval(0.0) == 0.0
    with pytest.raises(DomainError):
        cardano_eval(0.2)
    with pytest.raises(DomainError):
        cardano_eval(-0.2)


def test_arity_must_be_at_least_two():
    with pytest.raises(DomainError):
        series_T(1, 4)
