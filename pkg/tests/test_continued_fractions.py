from fractions import Fraction

import pytest

from src.generating.continued_fractions import cf_eval, cf_nested, gen1_terms, kn_poly, verify_gen1
from src.series.polynomial import MarkPolynomial
from src.series.power_series import PowerSeries
from src.utils.errors import NonInvertibleError


def test_kn_small_values():
    terms = [1, 2, 3]
    assert kn_poly(-1, terms) == 1
    assert kn_poly(0, terms) == 0
    assert kn_poly(1, terms) == -2
    assert kn_poly(2, terms) == -2


def test_kn_recurrence_and_explicit_sum_agree_symbolically():
    names = tuple(f"a{i}" for i in range(6))
    terms = [MarkPolynomial.variable(names, name) for name in names]
    for n in range(6):
        assert kn_poly(n, terms, "recurrence") == kn_poly(n, terms, "explicit")


def test_kn_explicit_sum_counts_sparse_subsets():
    """With every a_i = -1 the explicit sum counts index sets with no adjacent pair: Fibonacci"""
    assert [kn_poly(n, [-1] * (n + 1)) for n in range(7)] == [2, 3, 5, 8, 13, 21, 34]


def test_kn_needs_enough_terms():
    with pytest.raises(ValueError):
        kn_poly(3, [1, 2])


def test_evaluation_matches_nesting():
    terms_desc = (Fraction(1, 3), Fraction(1, 5))
    assert cf_eval(terms_desc) == Fraction(12, 7)
    assert cf_nested(terms_desc) == Fraction(12, 7)


def test_longer_fraction_two_ways():
    terms_desc = [Fraction(1, k) for k in range(2, 9)]
    assert cf_eval(terms_desc) == cf_nested(terms_desc)


def test_series_terms():
    z = PowerSeries.monomial(1, 6)
    assert cf_eval([z]).coeffs == (1,) * 7
    assert cf_eval([z, z]) == cf_nested([z, z])


def test_degenerate_fraction():
    with pytest.raises(NonInvertibleError):
        cf_eval([1])
    with pytest.raises(ValueError):
        cf_eval([])


def test_gen1_terms_shape():
    terms = gen1_terms(2, 4)
    assert len(terms) == 3
    assert all(t.variables == ("u0", "u1", "u2") for t in terms)
    assert all(t[0] == 0 for t in terms)


def test_gen1_relation():
    report = verify_gen1(2, 6)
    assert report.passed
    assert [case.case["m"] for case in report.cases] == [0, 1, 2]
