import pytest

from src.generating.frontier import (
    CharacteristicEquation,
    LaurentPolynomial,
    _odd_arity_root,
    characteristic_poly,
    characteristic_root,
    formal_family_check,
    verify_char_root,
)
from src.generating.ternary import series_X
from src.trees.step_sets import StepSet
from src.utils.errors import DomainError


def test_characteristic_polynomials(ternary, binary):
    P = characteristic_poly(ternary)
    assert str(P) == "X^-1 + 1 + X"
    assert P.cleared() == (1, (1, 1, 1))
    assert P.is_symmetric()
    assert characteristic_poly(binary).cleared() == (1, (1, 0, 1))


def test_asymmetric_step_set():
    P = characteristic_poly(StepSet((0, 1, 2)))
    assert not P.is_symmetric()
    assert P.reflect() == LaurentPolynomial({0: 1, -1: 1, -2: 1})
    assert P.cleared() == (0, (1, 1, 1))
    assert str(LaurentPolynomial({2: 3, 0: 2})) == "2 + 3*X^2"


@pytest.mark.parametrize("steps", [StepSet.ternary(), StepSet.binary()])
def test_root_solves_the_characteristic_equation(steps):
    report = verify_char_root(steps, 15)
    assert report.passed
    assert report.suite == "char-root"


def test_residual_of_a_wrong_root_is_visible(ternary):
    equation = CharacteristicEquation.of(ternary, 8)
    wrong = series_X(8) + 1
    assert equation.residual(wrong).valuation() <= 8


def test_no_root_for_other_step_sets():
    with pytest.raises(DomainError):
        characteristic_root(StepSet.natural(5), 6)
    with pytest.raises(DomainError):
        verify_char_root(StepSet.natural(5), 6)


def test_odd_arity_root_at_k_one():
    assert _odd_arity_root(1, 9) == series_X(9)


def test_ternary_family_holds():
    report = formal_family_check(1, 6, 2)
    assert report.passed
    assert not report.informational
    assert [case.case["j"] for case in report.cases] == [-1, 0, 1, 2]


def test_five_ary_family_is_informational():
    report = formal_family_check(2, 3, 1)
    assert report.informational
    assert report.notes
    assert len(report.cases) == 6


def test_family_parameter_domain():
    with pytest.raises(DomainError):
        formal_family_check(0, 4, 1)
