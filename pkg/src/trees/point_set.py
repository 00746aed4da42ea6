"""
Embedded point sets
A tree as the set of (depth, label, slot word) triples of its internal nodes.
"""

import json
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from src.trees.dary_tree import DaryTree, Node, Word, embed
from src.trees.step_sets import StepSet
from src.utils.errors import DomainError

Point = Tuple[int, int, Word]


@dataclass(frozen=True)
class EmbeddedPointSet:
    points: FrozenSet[Point]

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point: Point) -> bool:
        return point in self.points

    def to_json(self) -> str:
        rows = [[x, y, word_to_str(w)] for x, y, w in sorted(self.points, key=lambda p: (p[0], p[2]))]
        return json.dumps(rows)

    @classmethod
    def from_json(cls, text: str) -> "EmbeddedPointSet":
        return cls(frozenset((int(x), int(y), word_from_str(w)) for x, y, w in json.loads(text)))

    @classmethod
    def of(cls, *points: Tuple[int, int, str]) -> "EmbeddedPointSet":
        return cls(frozenset((x, y, word_from_str(w)) for x, y, w in points))


@dataclass(frozen=True)
class PointSetCheck:
    """Outcome of validate_point_set; falsy when a condition is violated"""
    valid: bool
    condition: Optional[int] = None
    point: Optional[Point] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


def word_to_str(word: Word) -> str:
    if any(letter > 9 for letter in word):
        return ".".join(str(letter) for letter in word)
    return "".join(str(letter) for letter in word)


def word_from_str(text: str) -> Word:
    if not text:
        return ()
    parts = text.split(".") if "." in text else list(text)
    return tuple(int(p) for p in parts)


def to_point_set(tree: DaryTree, steps: StepSet) -> EmbeddedPointSet:
    return EmbeddedPointSet(frozenset((len(word), label, word) for word, label in embed(tree, steps).items()))


def validate_point_set(points: EmbeddedPointSet, steps: StepSet) -> PointSetCheck:
    """Root condition first, then every point must extend a parent by one step vector"""
    roots = [p for p in points.points if not p[2]]
    if (0, 0, ()) not in points.points:
        return PointSetCheck(False, 1, None, "missing root point (0, 0, ε)")
    stray = [p for p in roots if p != (0, 0, ())]
    if stray:
        return PointSetCheck(False, 1, min(stray), "second point with the empty word")
    for point in sorted(points.points, key=lambda p: (p[0], p[2])):
        x, y, word = point
        if not word:
            continue
        letter = word[-1]
        if not 1 <= letter <= steps.arity:
            return PointSetCheck(False, 2, point, f"letter {letter} outside 1..{steps.arity}")
        parent = (x - 1, y - steps.increments[letter - 1], word[:-1])
        if parent not in points.points:
            return PointSetCheck(False, 2, point, f"no parent {parent} one step vector away")
    return PointSetCheck(True)


def point_set_to_tree(points: EmbeddedPointSet, steps: StepSet) -> DaryTree:
    check = validate_point_set(points, steps)
    if not check:
        raise DomainError(f"invalid point set: {check.reason}")
    words = {p[2] for p in points.points}

    def build(word: Word) -> Node:
        if word not in words:
            return None
        return tuple(build(word + (letter,)) for letter in range(1, steps.arity + 1))

    return DaryTree(steps.arity, build(()))
