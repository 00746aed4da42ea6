"""
Embedded Trees Combinatorics
Exact integer helpers shared by the formula modules and the oracle
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Sequence, Tuple, Union

from src.utils.errors import NonIntegralError

Number = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n"""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(parts: Sequence[int]) -> int:
    """(sum parts)! / prod(part!)"""
    if any(p < 0 for p in parts):
        return 0
    result = factorial(sum(parts))
    for p in parts:
        result //= factorial(p)
    return result


@lru_cache(maxsize=None)
def fibonacci(k: int) -> int:
    """F_k with F_0 = 0, F_1 = F_2 = 1"""
    if k < 0:
        raise ValueError(f"fibonacci index must be non-negative, got {k}")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def require_integer(value: Number, context: str = "") -> int:
    """Return value as int or raise NonIntegralError naming the context"""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    raise NonIntegralError(f"expected an integer count{' for ' + context if context else ''}, got {value}")


def compositions(total: int, parts: int, reverse: bool = False) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of `parts` non-negative integers summing to total, lexicographic"""
    if parts == 1:
        yield (total,)
        return
    firsts = range(total, -1, -1) if reverse else range(total + 1)
    for first in firsts:
        for rest in compositions(total - first, parts - 1, reverse):
            yield (first,) + rest


def bounded_vectors(length: int, max_total: int) -> Iterator[Tuple[int, ...]]:
    """All non-negative vectors of the given length with entry sum at most max_total"""
    for total in range(max_total + 1):
        yield from compositions(total, length)


def tree_count(arity: int, size: int) -> int:
    """Number of arity-ary trees with `size` internal nodes"""
    if size == 0:
        return 1
    return binomial(arity * size, size) // ((arity - 1) * size + 1)
