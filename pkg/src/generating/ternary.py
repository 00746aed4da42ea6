"""
Ternary generating functions
T = 1 + zT^3, T~ = T - 1, the auxiliary series X, exact coefficient formulas
and the real-valued Cardano evaluation of T~.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List

import numpy as np
from loguru import logger

from config.tree_config import SYSTEM_CONFIG
from src.series.power_series import PowerSeries, ps_div, ps_shift, ps_sqrt
from src.series.solver import fixed_point_solve
from src.services.series_cache import series_cache
from src.utils.combinatorics import binomial, require_integer
from src.utils.errors import ConsistencyError, DomainError


@dataclass(frozen=True)
class TernaryConstants:
    radius_of_convergence: Fraction = Fraction(4, 27)


TERNARY = TernaryConstants()


def radius_of_convergence(d: int) -> Fraction:
    """(d-1)^(d-1) / d^d, the singularity of the d-ary tree series"""
    return Fraction((d - 1) ** (d - 1), d ** d)


# ------------------------------------------------------------------ coefficients

def dary_power_coeff(d: int, n: int, k: int) -> int:
    """[z^n] T(z)^k for T = 1 + zT^d: k/(dn+k) * C(dn+k, n)"""
    if n < 0:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    return require_integer(Fraction(k * binomial(d * n + k, n), d * n + k), f"[z^{n}]T^{k}")


def t_power_coeff(n: int, k: int) -> int:
    return dary_power_coeff(3, n, k)


def dary_count(d: int, n: int) -> int:
    return dary_power_coeff(d, n, 1)


def ternary_count(n: int) -> int:
    """C(3n, n)/(2n+1), with the single external node counted at n = 0"""
    return dary_count(3, n)


def chu_vandermonde_power_coeff(d: int, n: int, k: int) -> int:
    """[z^n] (1 + T~)^k expanded binomially: sum_l C(k,l) (l/n) C(dn, n-l)"""
    if n == 0:
        return 1
    if k == 0:
        return 0
    total = sum(Fraction(binomial(k, l) * l * binomial(d * n, n - l), n) for l in range(1, k + 1))
    return require_integer(total, f"[z^{n}]T^{k} by Chu-Vandermonde")


# ------------------------------------------------------------------------ series

def _build_T(d: int, order: int) -> PowerSeries:
    seed = PowerSeries.constant(1, 0)
    return fixed_point_solve(lambda y: 1 + ps_shift(y ** d), seed, order)


def series_T(d: int, order: int) -> PowerSeries:
    """Fixed point of T = 1 + zT^d"""
    if d < 2:
        raise DomainError(f"tree series need arity >= 2, got {d}")
    return series_cache.get("T", d, order, lambda n: _build_T(d, n))


def series_Ttilde(d: int, order: int) -> PowerSeries:
    """T~ = z(1 + T~)^d, equal to T - 1"""
    if d < 2:
        raise DomainError(f"tree series need arity >= 2, got {d}")
    return series_cache.get(
        "Ttilde", d, order,
        lambda n: fixed_point_solve(lambda y: ps_shift((1 + y) ** d), PowerSeries.constant(0, 0), n),
    )


def _x_map(X: PowerSeries) -> PowerSeries:
    square = X * X
    return ps_shift((1 + X + square) ** 3) / ((1 + square) ** 2)


def _check_x_identities(X: PowerSeries, order: int) -> None:
    T = series_T(3, order)
    Tt = series_Ttilde(3, order)
    z = PowerSeries.monomial(1, order)
    square = X * X
    checks = {
        "X = zT^2(1 + X + X^2)": (X, z * T * T * (1 + X + square)),
        "T(1 + X^2) = 1 + X + X^2": (T * (1 + square), 1 + X + square),
        "(1 + X^2)(T - 1) = X": ((1 + square) * (T - 1), X),
    }
    root_form = ps_div(1 - ps_sqrt(1 - 4 * Tt * Tt), 2 * Tt)
    checks["X = (1 - sqrt(1 - 4T~^2)) / (2T~)"] = (X.truncate(root_form.order), root_form)
    zT2 = z * T * T
    display = ps_div(1 - zT2 - ps_sqrt(1 - 2 * zT2 - 3 * zT2 * zT2), 2 * zT2)
    checks["X = (1 - zT^2 - sqrt(1 - 2zT^2 - 3z^2T^4)) / (2zT^2)"] = (X.truncate(display.order), display)
    for name, (left, right) in checks.items():
        n = left.first_difference(right)
        if n is not None:
            raise ConsistencyError(f"X identity {name} fails at z^{n}")
    negative = [n for n, c in enumerate(X.coeffs) if c < 0]
    if negative:
        raise ConsistencyError(f"X has a negative coefficient at z^{negative[0]}")


def _build_X(order: int) -> PowerSeries:
    X = fixed_point_solve(_x_map, PowerSeries.constant(0, 0), order)
    _check_x_identities(X, order)
    logger.debug(f"✅ X identities hold to order {order}")
    return X


def series_X(order: int) -> PowerSeries:
    """X = z(1 + X + X^2)^3 / (1 + X^2)^2 with X(0) = 0, identities checked on build"""
    return series_cache.get("X", (), order, _build_X)


# ----------------------------------------------------------------------- Cardano

def cardano_eval(z: float) -> float:
    """T~(z) from the closed form of the cubic, for real z in [-4/27, 4/27]"""
    bound = float(TERNARY.radius_of_convergence)
    if not -bound <= z <= bound:
        raise DomainError(f"Cardano form is valid on [-4/27, 4/27], got {z}")
    if z == 0:
        return 0.0
    if z > 0:
        angle = np.arctan2(np.sqrt(27.0 * z), np.sqrt(4.0 - 27.0 * z)) / 3.0
        return float(2.0 / np.sqrt(3.0 * z) * np.sin(angle) - 1.0)
    a = np.sqrt(4.0 - 27.0 * z)
    b = np.sqrt(-27.0 * z)
    value = (np.cbrt(4.0 * (a + b)) - np.cbrt(4.0 * (a - b))) / (2.0 * np.sqrt(-3.0 * z)) - 1.0
    return float(value)


def partial_sum(z: float, terms: int = SYSTEM_CONFIG["partial_sum_terms"]) -> float:
    """sum_{1<=n<=terms} [z^n]T~ z^n in floating point"""
    counts = np.array([float(ternary_count(n)) for n in range(1, terms + 1)])
    powers = np.power(float(z), np.arange(1, terms + 1))
    return float(np.dot(counts, powers))


def ternary_sequence(n_max: int) -> List[int]:
    return [ternary_count(n) for n in range(n_max + 1)]
