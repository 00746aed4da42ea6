"""
Concrete d-ary trees
Nested tuples with None for external nodes, exhaustive enumeration, the natural
embedding and the per-tree statistics the oracle tallies.
"""

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from config.tree_config import SYSTEM_CONFIG, enumeration_cap
from src.trees.step_sets import StepSet
from src.utils.combinatorics import compositions, tree_count
from src.utils.errors import DomainError, EnumerationCapError

Node = Optional[Tuple["Node", ...]]
Word = Tuple[int, ...]

EXTERNAL_MARK = "•"


@dataclass(frozen=True)
class DaryTree:
    """Rooted ordered tree whose internal nodes all have `arity` child slots"""
    arity: int
    root: Node = field(default=None)

    @cached_property
    def size(self) -> int:
        return _size(self.root)

    @property
    def external_count(self) -> int:
        return (self.arity - 1) * self.size + 1

    def serialize(self) -> str:
        return serialize(self.root)

    def __str__(self) -> str:
        return self.serialize()

    @classmethod
    def chain(cls, arity: int, slot: int, length: int) -> "DaryTree":
        """`length` internal nodes, each the child in `slot` (0-based) of the previous"""
        node: Node = None
        for _ in range(length):
            node = tuple(node if i == slot else None for i in range(arity))
        return cls(arity, node)


@dataclass(frozen=True)
class LabelHistogram:
    """Internal nodes per label"""
    counts: Dict[int, int]

    def __getitem__(self, label: int) -> int:
        return self.counts.get(label, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


class DepthProfile(tuple):
    """Edge-type counts (m_1..m_d) on the path from the root to one leaf"""

    @property
    def m(self) -> Tuple[int, ...]:
        return tuple(self)

    @property
    def depth(self) -> int:
        return sum(self)


def _size(node: Node) -> int:
    if node is None:
        return 0
    return 1 + sum(_size(child) for child in node)


# ----------------------------------------------------------------- serialization

def serialize(node: Node) -> str:
    if node is None:
        return EXTERNAL_MARK
    return "(" + ",".join(serialize(child) for child in node) + ")"


def parse_tree(text: str, arity: Optional[int] = None) -> DaryTree:
    """Inverse of serialize; every internal node must have the same number of slots"""
    text = text.replace(" ", "")
    position = 0
    seen_arity = arity

    def node() -> Node:
        nonlocal position, seen_arity
        if text.startswith(EXTERNAL_MARK, position):
            position += len(EXTERNAL_MARK)
            return None
        if position >= len(text) or text[position] != "(":
            raise DomainError(f"unexpected input at offset {position} of {text!r}")
        position += 1
        children = [node()]
        while position < len(text) and text[position] == ",":
            position += 1
            children.append(node())
        if position >= len(text) or text[position] != ")":
            raise DomainError(f"unclosed node at offset {position} of {text!r}")
        position += 1
        if seen_arity is None:
            seen_arity = len(children)
        elif len(children) != seen_arity:
            raise DomainError(f"node with {len(children)} slots in a {seen_arity}-ary tree")
        return tuple(children)

    root = node()
    if position != len(text):
        raise DomainError(f"trailing input at offset {position} of {text!r}")
    if seen_arity is None:
        raise DomainError("arity of the single-leaf tree must be given explicitly")
    return DaryTree(seen_arity, root)


# ------------------------------------------------------------------- enumeration

def _memoizable(arity: int, size: int) -> bool:
    return tree_count(arity, size) <= SYSTEM_CONFIG["memoize_shapes_below"]


@lru_cache(maxsize=None)
def _memo_shapes(arity: int, size: int, reverse: bool) -> Tuple[Node, ...]:
    return tuple(_generate(arity, size, reverse))


def _shapes(arity: int, size: int, reverse: bool) -> Iterator[Node]:
    if size == 0:
        return iter((None,))
    if _memoizable(arity, size):
        return iter(_memo_shapes(arity, size, reverse))
    return _generate(arity, size, reverse)


def _generate(arity: int, size: int, reverse: bool) -> Iterator[Node]:
    for split in compositions(size - 1, arity, reverse):
        yield from _assemble(arity, split, reverse, ())


def _assemble(arity: int, split: Tuple[int, ...], reverse: bool, prefix: Tuple[Node, ...]) -> Iterator[Node]:
    if len(prefix) == len(split):
        yield prefix
        return
    for child in _shapes(arity, split[len(prefix)], reverse):
        yield from _assemble(arity, split, reverse, prefix + (child,))


def top_level_compositions(arity: int, size: int, reverse: bool = False) -> List[Tuple[int, ...]]:
    """Subtree-size splits of the root; the natural partition for parallel enumeration"""
    if size == 0:
        return []
    return list(compositions(size - 1, arity, reverse))


def enumerate_trees(
    arity: int,
    size: int,
    cap: Optional[int] = None,
    reverse: bool = False,
    composition: Optional[Sequence[int]] = None,
) -> Iterator[DaryTree]:
    """
    Every `arity`-ary tree with `size` internal nodes, exactly once.

    Trees are generated by recursing over compositions of size-1 into the
    subtree sizes of the root, lexicographically (reversed on request).
    `composition` restricts the stream to one root split.
    """
    if arity < 2:
        raise DomainError(f"enumeration needs arity >= 2, got {arity}")
    if size < 0:
        raise DomainError(f"tree size must be non-negative, got {size}")
    limit = enumeration_cap(arity) if cap is None else cap
    if size > limit:
        raise EnumerationCapError(arity, size, limit)
    if composition is not None:
        composition = tuple(composition)
        if len(composition) != arity or sum(composition) != size - 1 or min(composition) < 0:
            raise DomainError(f"{composition} is not a root split of a size-{size} tree")
        shapes = _assemble(arity, composition, reverse, ())
    else:
        shapes = _shapes(arity, size, reverse)
    for root in shapes:
        yield DaryTree(arity, root)


# --------------------------------------------------------------------- embedding

def _check_arity(tree: DaryTree, steps: StepSet) -> None:
    if tree.arity != steps.arity:
        raise DomainError(f"{tree.arity}-ary tree cannot be embedded with step set {steps}")


def embed(tree: DaryTree, steps: StepSet) -> Dict[Word, int]:
    """Label of every internal node, keyed by its slot word from the root (letters 1..d)"""
    _check_arity(tree, steps)
    labels: Dict[Word, int] = {}
    stack: List[Tuple[Node, Word, int]] = [(tree.root, (), 0)]
    while stack:
        node, word, label = stack.pop()
        if node is None:
            continue
        labels[word] = label
        for letter, (child, step) in enumerate(zip(node, steps.increments), start=1):
            stack.append((child, word + (letter,), label + step))
    return labels


def _internal_labels(node: Node, label: int, increments: Tuple[int, ...], out: List[int]) -> None:
    if node is None:
        return
    out.append(label)
    for child, step in zip(node, increments):
        if child is not None:
            _internal_labels(child, label + step, increments, out)


def internal_labels(tree: DaryTree, steps: StepSet) -> List[int]:
    _check_arity(tree, steps)
    out: List[int] = []
    _internal_labels(tree.root, 0, steps.increments, out)
    return out


def external_labels(tree: DaryTree, steps: StepSet) -> List[int]:
    """Positions of the external nodes, left to right"""
    _check_arity(tree, steps)
    out: List[int] = []

    def visit(node: Node, label: int) -> None:
        if node is None:
            out.append(label)
            return
        for child, step in zip(node, steps.increments):
            visit(child, label + step)

    visit(tree.root, 0)
    return out


def label_histogram(tree: DaryTree, steps: StepSet) -> LabelHistogram:
    """Internal nodes per label; external nodes carry no label statistic"""
    return LabelHistogram(dict(Counter(internal_labels(tree, steps))))


def max_label(tree: DaryTree, steps: StepSet) -> Union[int, float]:
    """Largest internal label, -inf for the single external node"""
    labels = internal_labels(tree, steps)
    return max(labels) if labels else float("-inf")


def leaf_profiles(tree: DaryTree, steps: Optional[StepSet] = None) -> List[Tuple[int, DepthProfile]]:
    """(leaf index, edge-type counts) for every external node in depth-first slot order"""
    if steps is not None:
        _check_arity(tree, steps)
    counts = [0] * tree.arity
    profiles: List[DepthProfile] = []

    def visit(node: Node) -> None:
        if node is None:
            profiles.append(DepthProfile(counts))
            return
        for slot, child in enumerate(node):
            counts[slot] += 1
            visit(child)
            counts[slot] -= 1

    visit(tree.root)
    return list(enumerate(profiles))


def reflect(tree: DaryTree) -> DaryTree:
    """Mirror image: child slots read right to left"""

    def mirror(node: Node) -> Node:
        if node is None:
            return None
        return tuple(mirror(child) for child in reversed(node))

    return DaryTree(tree.arity, mirror(tree.root))
