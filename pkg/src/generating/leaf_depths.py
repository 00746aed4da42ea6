"""
Leaf-depth distributions
Counts of d-ary trees of size n whose leaf s has m_l edges of type l on its root path:
the ternary explicit formula, the d-ary multinomial extraction, and the trivariate
generating function both come from F = 1/(1 - sum_l z v_l u^{l-1} T(zu^{d-1})^{l-1} T(z)^{d-l}).
"""

from fractions import Fraction
from functools import reduce
from operator import mul
from typing import Dict, Literal, Sequence, Tuple

from src.generating.ternary import dary_count, dary_power_coeff, series_T
from src.series.polynomial import MarkPolynomial
from src.series.power_series import PowerSeries, inflate, ps_shift
from src.utils.combinatorics import binomial, bounded_vectors, multinomial, require_integer
from src.utils.errors import DomainError

Profile = Tuple[int, ...]
Cell = Tuple[int, Profile]

Reading = Literal["proof", "printed"]


def _ternary_general(n: int, s: int, m1: int, m2: int, m3: int, reading: Reading) -> int:
    s2 = s % 2
    s1 = (s - s2) // 2
    if (m2 - s2) % 2:
        return 0
    mu2 = (m2 - s2) // 2
    if mu2 < 0:
        return 0
    if reading == "proof":
        if not (m3 <= s1 and mu2 <= s1 - m3):
            return 0
    elif not (s1 <= m3 and mu2 <= s1 - m3):
        return 0
    A = 3 * s1 + s2 - m3 - mu2
    B = 3 * n - m1 - 2 * m2 - 3 * s1 + 3 * mu2
    lower = n - m1 - m2 - s1 + mu2
    if lower < 0 or A <= 0 or B <= 0:
        return 0
    value = Fraction(
        (2 * m3 + m2) * (2 * m1 + m2) * multinomial((m1, m2, m3))
        * binomial(A, s1 - m3 - mu2) * binomial(B, lower),
        A * B,
    )
    return require_integer(value, f"T[n={n}, s={s}, m=({m1},{m2},{m3})]")


def leaf_depth_count(n: int, s: int, m1: int, m2: int, m3: int, reading: Reading = "proof") -> int:
    """
    Ternary trees of size n whose leaf s has m1 left, m2 center and m3 right edges above it.

    s = 2 s1 + s2 with s2 in {0, 1}, m2 = s2 + 2 mu2. reading="proof" uses the
    range m3 <= s1; reading="printed" keeps the reversed range s1 <= m3 for comparison.
    """
    if n < 1:
        raise DomainError(f"leaf-depth counts are stated for n >= 1, got {n}")
    if not 0 <= s <= 2 * n or min(m1, m2, m3) < 0:
        return 0
    if (m2, m3) == (0, 0):
        if s != 0 or not 0 < m1 <= n:
            return 0
        return require_integer(Fraction(2 * m1 * binomial(3 * n - m1, 2 * n), 3 * n - m1))
    if (m1, m2) == (0, 0):
        if s != 2 * n or not 0 < m3 <= n:
            return 0
        return require_integer(Fraction(2 * m3 * binomial(3 * n - m3, 2 * n), 3 * n - m3))
    return _ternary_general(n, s, m1, m2, m3, reading)


def dary_leaf_depth_count(d: int, n: int, s: int, m: Sequence[int]) -> int:
    """multinomial(M1; m) [z^i] T^{M2-M1} [z^{n-M1-i}] T^{dM1-M2}, with i forced by the leaf index"""
    if d < 2:
        raise DomainError(f"arity must be at least 2, got {d}")
    if len(m) != d:
        raise DomainError(f"profile {tuple(m)} does not have {d} entries")
    if min(m) < 0 or n < 0:
        return 0
    M1 = sum(m)
    M2 = sum((l + 1) * ml for l, ml in enumerate(m))
    rest = s - (M2 - M1)
    if rest < 0 or rest % (d - 1):
        return 0
    i = rest // (d - 1)
    return multinomial(m) * dary_power_coeff(d, i, M2 - M1) * dary_power_coeff(d, n - M1 - i, d * M1 - M2)


def multinomial_extract(exponents: Sequence[int], factors: Sequence):
    """[x^m] 1/(1 - sum_l x_l alpha_l) = multinomial(m) prod alpha_l^{m_l}"""
    if len(exponents) != len(factors):
        raise ValueError("one factor per exponent")
    coefficient = multinomial(exponents)
    powers = [alpha ** e for alpha, e in zip(factors, exponents) if e]
    if not powers:
        return coefficient
    return coefficient * reduce(mul, powers)


def leaf_depth_table(n: int, d: int = 3, reading: Reading = "proof") -> Dict[Cell, int]:
    """Nonzero (s, m) cells for size n; the ternary table uses the explicit formula"""
    table: Dict[Cell, int] = {}
    for s in range((d - 1) * n + 1):
        for m in bounded_vectors(d, n):
            if d == 3:
                value = leaf_depth_count(n, s, *m, reading=reading)
            else:
                value = dary_leaf_depth_count(d, n, s, m)
            if value:
                table[(s, m)] = value
    return table


def leaf_depth_distribution(n: int, s: int, d: int = 3) -> Dict[Profile, Fraction]:
    """P{profile of leaf s = m} over uniformly random trees of size n"""
    if n < 1:
        raise DomainError(f"distribution needs n >= 1, got {n}")
    total = dary_count(d, n)
    distribution = {}
    for m in bounded_vectors(d, n):
        count = leaf_depth_count(n, s, *m) if d == 3 else dary_leaf_depth_count(d, n, s, m)
        if count:
            distribution[m] = Fraction(count, total)
    return distribution


def _leaf_depth_generating_series(d: int, order: int) -> PowerSeries:
    """F(z, u, v_1..v_d) to the given order; only used to cross-check the extraction"""
    variables = ("u",) + tuple(f"v{l}" for l in range(1, d + 1))
    T = series_T(d, order)
    inflated = inflate(T, d - 1, "u", variables)
    plain = T.embed(variables)
    kernel = PowerSeries.constant(0, order, variables)
    for l in range(1, d + 1):
        weight = MarkPolynomial.variable(variables, f"v{l}") * MarkPolynomial.variable(variables, "u", l - 1)
        kernel = kernel + ps_shift(inflated ** (l - 1) * plain ** (d - l)) * weight
    return (1 / (1 - kernel)).truncate(order)


def leaf_depth_table_from_series(n: int, d: int = 3) -> Dict[Cell, int]:
    """Same cells as leaf_depth_table, read off the trivariate generating function"""
    coefficient = _leaf_depth_generating_series(d, n)[n]
    table: Dict[Cell, int] = {}
    for exps, value in coefficient.items():
        table[(exps[0], tuple(exps[1:]))] = require_integer(value)
    return table
