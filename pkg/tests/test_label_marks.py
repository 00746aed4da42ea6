import pytest

from src.generating.label_marks import (
    PAIR_MARKS,
    marked_node_total,
    mu_pm_series,
    mu_series,
    s_general_system,
    sj_closed,
    sj_closed_formula,
    sj_pm_closed,
    sj_pm_formula,
    sj_pm_system,
    sj_system,
)
from src.generating.ternary import ternary_count
from src.series.polynomial import MarkPolynomial
from src.utils.errors import ConsistencyError, DomainError


def test_small_coefficients_of_S0(u):
    S0 = sj_system(0, 4)
    assert S0[0] == 1
    assert S0[1] == u
    assert S0[2] == u * u + 2 * u


def test_marks_at_one_give_all_trees():
    for j in (0, 1, 3):
        assert sj_system(j, 7).evaluate_marks().coeffs == tuple(ternary_count(n) for n in range(8))


def test_symmetry_in_j():
    assert sj_system(-2, 6) == sj_system(2, 6)
    assert sj_pm_system(-1, 5) == sj_pm_system(1, 5)


@pytest.mark.parametrize("j", [-1, 0, 1, 2, 3, 4])
def test_one_mark_closed_form(j):
    assert sj_closed(j, 8) == sj_system(j, 8)


def test_raw_formula_below_the_mark(u):
    """Read at j = -1 the product formula is u * S_1"""
    assert sj_closed_formula(-1, 8) == sj_system(1, 8) * u


@pytest.mark.parametrize("j", [-1, 0, 1, 2, 3])
def test_two_mark_closed_form(j):
    assert sj_pm_closed(j, 6) == sj_pm_system(j, 6)


def test_two_mark_formula_at_the_mark():
    u1 = MarkPolynomial.variable(PAIR_MARKS, "u1")
    assert sj_pm_formula(0, 6) == sj_pm_system(0, 6) * u1


def test_printed_two_mark_equation_is_rejected():
    with pytest.raises(ConsistencyError):
        mu_pm_series(6, form="printed")


def test_auxiliary_series_vanish_at_unit_marks():
    """mu and nu are written in t = u - 1 and have no t-free terms"""
    mu = mu_series(6).series
    nu = mu_pm_series(6).series
    assert all(c.constant_term == 0 for c in mu.coeffs)
    assert all(c.constant_term == 0 for c in nu.coeffs)
    assert nu.variables == ("t0", "t1")


def test_general_system_reduces_to_the_pair_system():
    general = s_general_system(1, 5)
    assert general.variables == PAIR_MARKS
    assert general[2] == sj_pm_system(2, 5)


def test_general_system_variables():
    system = s_general_system(2, 4)
    assert system.variables == ("u0", "u1", "u2")
    assert system[0].evaluate_marks().coeffs == tuple(ternary_count(n) for n in range(5))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_every_internal_node_is_marked_once(n):
    assert marked_node_total(n, 5) == n * ternary_count(n)


@pytest.mark.parametrize("j", [0, 1, 2, 3])
def test_mark_degree_is_bounded_by_the_size(j):
    """At most n internal nodes can be marked in a size-n tree"""
    for series in (s_general_system(2, 8)[j], sj_pm_system(j, 8)):
        for n, coefficient in enumerate(series.coeffs):
            assert coefficient.total_degree() <= n


def test_domain_errors():
    with pytest.raises(DomainError):
        s_general_system(-1, 4)
    with pytest.raises(DomainError):
        sj_closed_formula(-2, 4)
    with pytest.raises(DomainError):
        sj_pm_formula(-1, 4)
    with pytest.raises(DomainError):
        marked_node_total(6, 5)
