import pytest

from src.trees.dary_tree import (
    DaryTree,
    embed,
    enumerate_trees,
    external_labels,
    internal_labels,
    label_histogram,
    leaf_profiles,
    max_label,
    parse_tree,
    reflect,
    top_level_compositions,
)
from src.trees.point_set import (
    EmbeddedPointSet,
    point_set_to_tree,
    to_point_set,
    validate_point_set,
    word_from_str,
    word_to_str,
)
from src.trees.step_sets import StepSet
from src.utils.errors import DomainError, EnumerationCapError


# ------------------------------------------------------------------ step sets

def test_natural_step_sets():
    assert StepSet.natural(3).increments == (-1, 0, 1)
    assert StepSet.natural(4).increments == (-2, -1, 1, 2)
    assert StepSet.natural(5).increments == (-2, -1, 0, 1, 2)
    assert StepSet.natural(2) == StepSet.binary()


def test_odd_increments_alternative():
    assert StepSet.odd_increments(4).increments == (-3, -1, 1, 3)
    assert StepSet.odd_increments(4) == StepSet.preset("quaternary-odd")


def test_symmetry():
    assert StepSet.ternary().is_symmetric()
    assert not StepSet((0, 1, 2)).is_symmetric()
    assert StepSet((0, 1, 2)).reflected().increments == (2, 1, 0)


def test_unknown_preset():
    with pytest.raises(DomainError):
        StepSet.preset("heptagonal")


# ---------------------------------------------------------------- enumeration

@pytest.mark.parametrize("arity, counts", [
    (2, [1, 1, 2, 5, 14, 42, 132]),
    (3, [1, 1, 3, 12, 55, 273, 1428]),
    (4, [1, 1, 4, 22, 140]),
    (5, [1, 1, 5, 35, 285]),
])
def test_enumeration_counts(arity, counts):
    """Each size produces the Fuss-Catalan number of trees"""
    assert [sum(1 for _ in enumerate_trees(arity, n)) for n in range(len(counts))] == counts


def test_enumeration_yields_each_tree_once():
    trees = [t.serialize() for t in enumerate_trees(3, 4)]
    assert len(trees) == len(set(trees)) == 55


def test_reversed_order_is_a_permutation():
    forward = [t.serialize() for t in enumerate_trees(3, 4)]
    backward = [t.serialize() for t in enumerate_trees(3, 4, reverse=True)]
    assert forward != backward
    assert sorted(forward) == sorted(backward)


def test_root_splits_partition_the_trees():
    splits = top_level_compositions(3, 4)
    assert sum(sum(1 for _ in enumerate_trees(3, 4, composition=c)) for c in splits) == 55


def test_enumeration_cap():
    with pytest.raises(EnumerationCapError):
        list(enumerate_trees(3, 5, cap=4))


def test_enumeration_cap_from_environment(monkeypatch):
    monkeypatch.setenv("EMBEDDED_TREES_CAP", "2")
    with pytest.raises(EnumerationCapError):
        list(enumerate_trees(3, 3))


def test_bad_split_is_rejected():
    with pytest.raises(DomainError):
        list(enumerate_trees(3, 3, composition=(1, 1, 1)))


# ------------------------------------------------------------- serialization

def test_serialize_and_parse():
    tree = DaryTree.chain(3, 1, 2)
    assert tree.serialize() == "(•,(•,•,•),•)"
    assert parse_tree(tree.serialize()) == tree
    assert tree.size == 2
    assert tree.external_count == 5


def test_parse_rejects_mixed_arity():
    with pytest.raises(DomainError):
        parse_tree("((•,•),•,•)")


def test_single_leaf_needs_explicit_arity():
    with pytest.raises(DomainError):
        parse_tree("•")
    assert parse_tree("•", 3).size == 0


# ---------------------------------------------------------------- embedding

def test_embed_labels_by_slot_word(ternary):
    tree = parse_tree("((•,•,•),•,(•,•,•))")
    assert embed(tree, ternary) == {(): 0, (1,): -1, (3,): 1}


def test_right_chain_labels(ternary):
    tree = DaryTree.chain(3, 2, 3)
    assert internal_labels(tree, ternary) == [0, 1, 2]
    assert max_label(tree, ternary) == 2
    assert label_histogram(tree, ternary)[1] == 1


def test_single_leaf_has_no_internal_label(ternary):
    assert max_label(DaryTree(3), ternary) == float("-inf")
    assert external_labels(DaryTree(3), ternary) == [0]


def test_external_labels_of_one_node(ternary):
    assert external_labels(DaryTree.chain(3, 0, 1), ternary) == [-1, 0, 1]


def test_leaf_profiles_of_one_node():
    profiles = leaf_profiles(DaryTree.chain(3, 0, 1))
    assert profiles == [(0, (1, 0, 0)), (1, (0, 1, 0)), (2, (0, 0, 1))]
    assert profiles[2][1].depth == 1


def test_leaf_profile_label_is_right_minus_left(ternary):
    """For ternary trees a leaf's label is (right edges) - (left edges)"""
    for tree in enumerate_trees(3, 4):
        labels = external_labels(tree, ternary)
        for s, profile in leaf_profiles(tree):
            assert labels[s] == profile[2] - profile[0]


@pytest.mark.parametrize("arity", [2, 3, 4, 5])
def test_leaf_index_is_congruent_to_its_slot_weight(arity):
    """s - sum_i i m_i is divisible by d - 1, slots counted from 0"""
    for n in range(5):
        for tree in enumerate_trees(arity, n):
            for s, profile in leaf_profiles(tree):
                weight = sum(i * m for i, m in enumerate(profile.m))
                assert (s - weight) % (arity - 1) == 0


def test_reflection_negates_labels(ternary):
    for tree in enumerate_trees(3, 3):
        mirrored = sorted(internal_labels(reflect(tree), ternary))
        assert mirrored == sorted(-label for label in internal_labels(tree, ternary))


def test_arity_must_match_step_set(ternary):
    with pytest.raises(DomainError):
        embed(DaryTree.chain(2, 0, 1), ternary)


# --------------------------------------------------------------- point sets

def test_point_set_round_trip(ternary):
    for tree in enumerate_trees(3, 3):
        points = to_point_set(tree, ternary)
        assert len(points) == 3
        assert validate_point_set(points, ternary)
        assert point_set_to_tree(points, ternary) == tree
        assert EmbeddedPointSet.from_json(points.to_json()) == points


def test_missing_root_violates_the_root_condition(ternary):
    check = validate_point_set(EmbeddedPointSet.of((1, -1, "1")), ternary)
    assert not check
    assert check.condition == 1


def test_wrong_label_violates_the_parent_condition(ternary):
    check = validate_point_set(EmbeddedPointSet.of((0, 0, ""), (1, 1, "1")), ternary)
    assert not check
    assert check.condition == 2
    assert check.point == (1, 1, (1,))
    with pytest.raises(DomainError):
        point_set_to_tree(EmbeddedPointSet.of((0, 0, ""), (1, 1, "1")), ternary)


def test_binary_point_set_with_up_then_down_steps():
    steps = StepSet((1, -1))
    points = EmbeddedPointSet.of((0, 0, ""), (1, 1, "1"), (1, -1, "2"), (2, 0, "12"), (2, -2, "22"))
    assert validate_point_set(points, steps)
    tree = point_set_to_tree(points, steps)
    assert tree.size == 5
    assert to_point_set(tree, steps) == points


def test_point_without_a_parent_is_rejected(ternary):
    check = validate_point_set(EmbeddedPointSet.of((0, 0, ""), (5, 0, "1")), ternary)
    assert not check
    assert check.condition == 2
    assert check.point == (5, 0, (1,))


def test_word_text_form():
    assert word_to_str((1, 3, 2)) == "132"
    assert word_from_str("132") == (1, 3, 2)
    assert word_from_str(word_to_str((1, 12))) == (1, 12)
    assert word_from_str("") == ()
