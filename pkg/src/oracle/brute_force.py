"""
Brute-force oracle
Recomputes every counted statistic by walking all trees of a size. Only tree
primitives and exact integer helpers are used here, never a generating function.
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Optional, Sequence, Tuple

from loguru import logger

from config.tree_config import SYSTEM_CONFIG, enumeration_cap
from src.series.polynomial import MarkPolynomial
from src.trees.dary_tree import (
    enumerate_trees,
    internal_labels,
    leaf_profiles,
    max_label,
    top_level_compositions,
)
from src.trees.step_sets import StepSet
from src.utils.errors import EnumerationCapError

Window = Tuple[int, int]


@dataclass
class Tally:
    """Counts per key plus the first tree (serialized) that produced each key"""
    counts: Counter = field(default_factory=Counter)
    witnesses: Dict[Hashable, str] = field(default_factory=dict)

    def add(self, key: Hashable, tree) -> None:
        self.counts[key] += 1
        if key not in self.witnesses:
            self.witnesses[key] = tree.serialize()

    def merge(self, other: "Tally") -> "Tally":
        self.counts.update(other.counts)
        for key, witness in other.witnesses.items():
            self.witnesses.setdefault(key, witness)
        return self

    def witness(self, key: Hashable) -> Optional[str]:
        return self.witnesses.get(key)


# ----------------------------------------------------------- partition workers
# Module-level so the process pool can pickle them.

def _tally_max_labels(increments, size, composition, reverse, cap) -> Tally:
    steps = StepSet(increments)
    tally = Tally()
    for tree in enumerate_trees(steps.arity, size, cap, reverse, composition):
        tally.add(max_label(tree, steps), tree)
    return tally


def _window_exponents(labels: Sequence[int], j: int, m: int) -> Tuple[int, ...]:
    exps = [0] * (m + 1)
    for label in labels:
        distance = abs(label - j)
        if distance <= m:
            exps[distance] += 1
    return tuple(exps)


def _tally_label_marks(increments, size, composition, reverse, cap, windows: Tuple[Window, ...]) -> Tally:
    steps = StepSet(increments)
    tally = Tally()
    for tree in enumerate_trees(steps.arity, size, cap, reverse, composition):
        labels = internal_labels(tree, steps)
        for j, m in windows:
            tally.add((j, m, _window_exponents(labels, j, m)), tree)
    return tally


def _tally_leaf_depths(arity, size, composition, reverse, cap) -> Tally:
    tally = Tally()
    for tree in enumerate_trees(arity, size, cap, reverse, composition):
        for s, profile in leaf_profiles(tree):
            tally.add((s, profile.m), tree)
    return tally


def _run_partitioned(worker: Callable[..., Tally], arity: int, size: int, *args,
                     reverse: bool = False, cap: Optional[int] = None,
                     workers: Optional[int] = None) -> Tally:
    """Apply worker to every root split of the size and merge the tallies in split order"""
    limit = enumeration_cap(arity) if cap is None else cap
    if size > limit:
        raise EnumerationCapError(arity, size, limit)
    workers = SYSTEM_CONFIG["workers"] if workers is None else workers
    head = args[0]
    tail = args[1:]
    splits = top_level_compositions(arity, size, reverse) or [None]
    if workers > 1 and len(splits) > 1:
        logger.debug(f"⚙️ Enumerating size {size} over {len(splits)} partitions with {workers} workers")
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(worker, head, size, split, reverse, limit, *tail) for split in splits]
            parts = [future.result() for future in futures]
    else:
        parts = [worker(head, size, split, reverse, limit, *tail) for split in splits]
    merged = Tally()
    for part in parts:
        merged.merge(part)
    return merged


# ------------------------------------------------------------------ public api

def small_label_tally(n: int, steps: Optional[StepSet] = None, **options) -> Tally:
    """Trees of size n keyed by their largest internal label"""
    steps = steps or StepSet.ternary()
    return _run_partitioned(_tally_max_labels, steps.arity, n, steps.increments, **options)


def oracle_small_labels(j: int, n: int, steps: Optional[StepSet] = None, **options) -> int:
    """Trees of size n whose internal labels never exceed j"""
    tally = small_label_tally(n, steps, **options)
    return sum(count for label, count in tally.counts.items() if label <= j)


def window_variables(m: int) -> Tuple[str, ...]:
    return ("u",) if m == 0 else tuple(f"u{k}" for k in range(m + 1))


def label_mark_tally(n: int, windows: Sequence[Window], steps: Optional[StepSet] = None, **options) -> Tally:
    """Trees of size n keyed by (j, m, exponents), one key per window and tree"""
    steps = steps or StepSet.ternary()
    return _run_partitioned(_tally_label_marks, steps.arity, n, steps.increments, tuple(windows), **options)


def mark_polynomial(tally: Tally, j: int, m: int, variables: Optional[Sequence[str]] = None) -> MarkPolynomial:
    """Sum over trees of prod_k u_k^(internal nodes at labels j +- k)"""
    variables = tuple(variables) if variables else window_variables(m)
    terms = {exps: count for (wj, wm, exps), count in tally.counts.items() if (wj, wm) == (j, m)}
    return MarkPolynomial(variables, terms)


def oracle_label_marks(n: int, j: int, m: int = 0, variables: Optional[Sequence[str]] = None,
                       steps: Optional[StepSet] = None, **options) -> MarkPolynomial:
    return mark_polynomial(label_mark_tally(n, [(j, m)], steps, **options), j, m, variables)


def leaf_depth_tally(n: int, d: int = 3, **options) -> Tally:
    """Leaves of all trees of size n keyed by (leaf index, edge-type counts)"""
    return _run_partitioned(_tally_leaf_depths, d, n, d, **options)


def oracle_leaf_depths(n: int, d: int = 3, **options) -> Dict[Tuple[int, Tuple[int, ...]], int]:
    return dict(leaf_depth_tally(n, d, **options).counts)
