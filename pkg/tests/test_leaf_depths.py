from fractions import Fraction

import pytest

from src.generating.leaf_depths import (
    dary_leaf_depth_count,
    leaf_depth_count,
    leaf_depth_distribution,
    leaf_depth_table,
    leaf_depth_table_from_series,
    multinomial_extract,
)
from src.generating.ternary import dary_count, ternary_count
from src.utils.errors import DomainError


def test_single_node_table():
    assert leaf_depth_table(1) == {(0, (1, 0, 0)): 1, (1, (0, 1, 0)): 1, (2, (0, 0, 1)): 1}


@pytest.mark.parametrize("n, cells", [(1, 3), (2, 10), (3, 25), (4, 53)])
def test_nonzero_cell_counts(n, cells):
    assert len(leaf_depth_table(n)) == cells


@pytest.mark.parametrize("d, cells", [(2, [2, 5, 10, 18]), (4, [4, 16, 46])])
def test_dary_cell_counts(d, cells):
    assert [len(leaf_depth_table(n, d)) for n in range(1, len(cells) + 1)] == cells


@pytest.mark.parametrize("d, n", [(2, 1), (2, 4), (3, 2), (3, 4), (4, 3)])
def test_every_leaf_lands_in_one_cell(d, n):
    """Trees of size n have (d-1)n + 1 leaves each"""
    assert sum(leaf_depth_table(n, d).values()) == ((d - 1) * n + 1) * dary_count(d, n)


def test_mirror_symmetry():
    n = 4
    table = leaf_depth_table(n)
    for (s, (m1, m2, m3)), count in table.items():
        assert table[(2 * n - s, (m3, m2, m1))] == count


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dary_extraction_matches_ternary_formula(n):
    for s in range(2 * n + 1):
        for m1 in range(n + 1):
            for m2 in range(n + 1 - m1):
                for m3 in range(n + 1 - m1 - m2):
                    assert dary_leaf_depth_count(3, n, s, (m1, m2, m3)) == leaf_depth_count(n, s, m1, m2, m3)


def test_leftmost_and_rightmost_leaves():
    assert leaf_depth_count(3, 0, 2, 0, 0) == 4
    assert leaf_depth_count(3, 0, 2, 0, 0) == leaf_depth_count(3, 6, 0, 0, 2)
    assert sum(leaf_depth_count(3, 0, m1, 0, 0) for m1 in range(1, 4)) == ternary_count(3)


def test_printed_range_loses_cells():
    """At n = 2 the centre-centre path to leaf 2 exists, but the typeset range drops it"""
    assert leaf_depth_count(2, 2, 0, 2, 0) == 1
    assert leaf_depth_count(2, 2, 0, 2, 0, reading="printed") == 0
    assert leaf_depth_table(2, reading="printed") != leaf_depth_table(2)


@pytest.mark.parametrize("s", [0, 3, 5])
def test_distribution_sums_to_one(s):
    assert sum(leaf_depth_distribution(3, s).values()) == 1


def test_binary_distribution():
    assert leaf_depth_distribution(1, 0, d=2) == {(1, 0): Fraction(1)}


@pytest.mark.parametrize("d, n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_generating_function_agrees_with_table(d, n):
    assert leaf_depth_table_from_series(n, d) == leaf_depth_table(n, d)


def test_multinomial_extraction():
    assert multinomial_extract((2, 1), (3, 5)) == 3 * 9 * 5
    assert multinomial_extract((0, 0), (3, 5)) == 1
    with pytest.raises(ValueError):
        multinomial_extract((1,), (2, 3))


def test_domain():
    with pytest.raises(DomainError):
        leaf_depth_count(0, 0, 0, 0, 0)
    with pytest.raises(DomainError):
        leaf_depth_distribution(0, 0)
    with pytest.raises(DomainError):
        dary_leaf_depth_count(3, 2, 0, (1, 0))
    assert leaf_depth_count(2, 5, 1, 0, 0) == 0
