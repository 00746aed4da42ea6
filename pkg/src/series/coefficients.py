"""
Exact coefficient helpers
Every coefficient is an int or a Fraction in lowest terms
"""

from fractions import Fraction
from typing import Union

Number = Union[int, Fraction]


def normalize(value: Number) -> Number:
    """Collapse integral Fractions to int"""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    if isinstance(value, bool):
        return int(value)
    return value


def as_number(value) -> Number:
    if isinstance(value, (int, Fraction)):
        return normalize(value)
    raise TypeError(f"exact coefficients must be int or Fraction, got {type(value).__name__}")


def inverse(value: Number) -> Number:
    return normalize(Fraction(1) / value)
