"""
Step sets
One label increment per child slot, left to right
"""

from collections import Counter
from dataclasses import dataclass
from typing import Tuple

from config.tree_config import STEP_SET_CONFIGS
from src.utils.errors import DomainError


@dataclass(frozen=True)
class StepSet:
    """Label increments b_1..b_d of an embedding"""
    increments: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "increments", tuple(int(b) for b in self.increments))
        if not self.increments:
            raise DomainError("a step set needs at least one child slot")

    @property
    def arity(self) -> int:
        return len(self.increments)

    @property
    def max_increment(self) -> int:
        return max(self.increments)

    def is_symmetric(self) -> bool:
        return Counter(self.increments) == Counter(-b for b in self.increments)

    def reflected(self) -> "StepSet":
        return StepSet(tuple(reversed(self.increments)))

    @classmethod
    def preset(cls, name: str) -> "StepSet":
        try:
            return cls(STEP_SET_CONFIGS[name].increments)
        except KeyError:
            raise DomainError(f"unknown step-set preset {name!r}") from None

    @classmethod
    def ternary(cls) -> "StepSet":
        return cls.preset("ternary")

    @classmethod
    def binary(cls) -> "StepSet":
        return cls.preset("binary")

    @classmethod
    def natural(cls, arity: int) -> "StepSet":
        """Natural embedding: {0, +-1..+-k} for arity 2k+1, {+-1..+-k} for arity 2k"""
        if arity < 1:
            raise DomainError(f"arity must be positive, got {arity}")
        half = arity // 2
        negatives = tuple(range(-half, 0))
        positives = tuple(range(1, half + 1))
        middle = (0,) if arity % 2 else ()
        return cls(negatives + middle + positives)

    @classmethod
    def odd_increments(cls, arity: int) -> "StepSet":
        """Alternative embedding with increments +-1, +-3, ... (and 0 for odd arity)"""
        if arity < 1:
            raise DomainError(f"arity must be positive, got {arity}")
        half = arity // 2
        positives = tuple(2 * i + 1 for i in range(half))
        middle = (0,) if arity % 2 else ()
        return cls(tuple(-b for b in reversed(positives)) + middle + positives)

    def __str__(self) -> str:
        return "(" + ", ".join(f"{b:+d}" if b else "0" for b in self.increments) + ")"
