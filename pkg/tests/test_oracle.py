import pytest

from src.models.reports import SuiteRanges
from src.oracle.brute_force import (
    leaf_depth_tally,
    oracle_label_marks,
    oracle_leaf_depths,
    oracle_small_labels,
    small_label_tally,
    window_variables,
)
from src.oracle.suites import SUITES, run_suite
from src.series.polynomial import MarkPolynomial
from src.trees.dary_tree import max_label, parse_tree
from src.utils.errors import EnumerationCapError, UnknownSuiteError


# ------------------------------------------------------------------ brute force

def test_small_label_counts(ternary):
    assert [oracle_small_labels(0, n) for n in range(6)] == [1, 1, 2, 6, 22, 91]
    assert oracle_small_labels(1, 4, ternary) == 46


def test_binary_small_labels(binary):
    """A right step is allowed only after the path has gone below 0"""
    assert [oracle_small_labels(0, n, binary) for n in range(5)] == [1, 1, 1, 2, 4]


def test_witness_attains_its_key(ternary):
    tally = small_label_tally(4)
    for label in tally.counts:
        assert max_label(parse_tree(tally.witness(label)), ternary) == label


def test_label_mark_polynomials(u):
    assert oracle_label_marks(0, 0) == 1
    assert oracle_label_marks(1, 0) == u
    assert oracle_label_marks(2, 0) == u * u + 2 * u


def test_window_of_width_one():
    variables = window_variables(1)
    u0 = MarkPolynomial.variable(variables, "u0")
    u1 = MarkPolynomial.variable(variables, "u1")
    assert variables == ("u0", "u1")
    assert oracle_label_marks(2, 0, 1) == u0 * u0 + 2 * u0 * u1


def test_leaf_depth_oracle_at_one_node():
    assert oracle_leaf_depths(1) == {(0, (1, 0, 0)): 1, (1, (0, 1, 0)): 1, (2, (0, 0, 1)): 1}


def test_enumeration_order_does_not_change_counts():
    assert small_label_tally(5, reverse=True).counts == small_label_tally(5).counts
    assert leaf_depth_tally(3, reverse=True).counts == leaf_depth_tally(3).counts


def test_worker_pool_merges_partitions():
    assert small_label_tally(5, workers=2).counts == small_label_tally(5, workers=1).counts
    assert oracle_small_labels(1, 5, workers=2) == 209


def test_cap_is_enforced():
    with pytest.raises(EnumerationCapError):
        small_label_tally(6, cap=5)
    with pytest.raises(EnumerationCapError):
        oracle_leaf_depths(5, d=4, cap=3)


# ----------------------------------------------------------------------- suites

SMALL_RANGES = {
    "small-labels": SuiteRanges(n_max=5, j_min=0, j_max=3),
    "label-marks": SuiteRanges(n_max=4, j_max=2, m_max=2),
    "leaf-depths": SuiteRanges(n_max=3),
    "dary-leaf-depths": SuiteRanges(d=2, n_max=5),
    "dary-totality": SuiteRanges(n_max=3),
    "closed-vs-system": SuiteRanges(j_min=-1, j_max=4, order=10, marked_order=6, marked_j_max=3),
    "corollary": SuiteRanges(order=12),
    "gen1": SuiteRanges(m_max=2, order=6),
    "lambda-family": SuiteRanges(j_min=-2, j_max=2, order=8, lambda_degree=3),
    "power-coeff": SuiteRanges(n_max=8, k_max=3),
    "x-series": SuiteRanges(order=12),
    "char-root": SuiteRanges(order=12),
    "formal-family": SuiteRanges(order=4, lambda_degree=2),
    "cardano": SuiteRanges(),
}


def test_every_suite_has_small_ranges():
    assert set(SMALL_RANGES) == set(SUITES)


@pytest.mark.parametrize("name", sorted(SMALL_RANGES))
def test_suite_passes_on_small_ranges(name):
    report = run_suite(name, SMALL_RANGES[name])
    assert report.suite == name
    assert report.cases
    assert report.passed, report.to_text()


def test_quaternary_leaf_depths():
    assert run_suite("dary-leaf-depths", SuiteRanges(d=4, n_max=3)).passed


def test_printed_range_is_reported_not_gated():
    report = run_suite("leaf-depths", SuiteRanges(n_max=2))
    assert report.passed
    assert any("printed" in note for note in report.notes)


def test_formal_family_notes_the_exploratory_arity():
    report = run_suite("formal-family", SMALL_RANGES["formal-family"])
    assert any("arity 5" in note for note in report.notes)


def test_defaults_fill_unset_ranges():
    report = run_suite("x-series", SuiteRanges(order=9))
    assert report.ranges.order == 9
    assert run_suite("gen1", SuiteRanges(order=5, m_max=1)).ranges.m_max == 1


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("theorem-99")


@pytest.mark.slow
@pytest.mark.parametrize("name", ["small-labels", "label-marks", "leaf-depths"])
def test_oracle_suites_at_default_sizes(name):
    """Every ternary tree up to the default oracle size"""
    assert run_suite(name).passed


@pytest.mark.slow
def test_binary_oracle_at_default_size():
    assert run_suite("small-labels", SuiteRanges(d=2)).passed
