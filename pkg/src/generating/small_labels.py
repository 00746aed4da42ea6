"""
Small-label generating functions
T_j(z): embedded trees with no internal label greater than j, from the truncated
label system and from the closed form in T and X.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from loguru import logger

from src.generating.ternary import series_T, series_X
from src.models.reports import CaseResult, SuiteRanges, VerificationReport, timed
from src.series.polynomial import MarkPolynomial
from src.series.power_series import PowerSeries, ps_shift
from src.series.solver import fixed_point_solve
from src.services.series_cache import series_cache
from src.trees.step_sets import StepSet
from src.utils.combinatorics import binomial, fibonacci, require_integer
from src.utils.errors import ConsistencyError, DomainError

LAMBDA = "lam"


@dataclass
class SmallLabelFamily:
    """T_j for -1 <= j <= j_max, all to one order"""
    j_max: int
    order: int
    series: Dict[int, PowerSeries] = field(default_factory=dict)

    def __getitem__(self, j: int) -> PowerSeries:
        return self.series[j]


# ------------------------------------------------------------------------ system

def _boundary(steps: StepSet, order: int) -> int:
    """Labels at or above this index are unreachable by trees of size <= order"""
    return max(1, order * max(1, steps.max_increment))


def _solve_system(steps: StepSet, order: int) -> Tuple[PowerSeries, ...]:
    K = _boundary(steps, order)
    T = series_T(steps.arity, order)
    one = PowerSeries.constant(1, order)
    logger.debug(f"🧮 Solving {K} small-label equations for steps {steps}")

    def F(ys: Tuple[PowerSeries, ...]) -> Tuple[PowerSeries, ...]:
        def member(k: int) -> PowerSeries:
            if k < 0:
                return one
            if k >= K:
                return T
            return ys[k]

        updated = []
        for k in range(K):
            product = member(k - steps.increments[0])
            for b in steps.increments[1:]:
                product = product * member(k - b)
            updated.append(1 + ps_shift(product))
        return tuple(updated)

    return fixed_point_solve(F, tuple(PowerSeries.constant(1, 0) for _ in range(K)), order)


def small_label_system(steps: StepSet, j: int, order: int) -> PowerSeries:
    """T_j = 1 + z prod_l T_{j - b_l}, with T_k = 1 for k < 0 and T_k = T beyond the reachable labels"""
    if steps.arity < 2:
        raise DomainError(f"small-label systems need arity >= 2, got {steps.arity}")
    if j < 0:
        return PowerSeries.constant(1, order)
    if j >= _boundary(steps, order):
        return series_T(steps.arity, order)
    solution = series_cache.get("small-label-system", steps.increments, order,
                                lambda n: _solve_system(steps, n))
    return solution[j]


def tj_system(j: int, order: int) -> PowerSeries:
    """Ternary system T_j = 1 + z T_{j-1} T_j T_{j+1}, T_{-1} = 1"""
    if j < -1:
        raise DomainError(f"T_j is defined for j >= -1, got {j}")
    return small_label_system(StepSet.ternary(), j, order)


# ------------------------------------------------------------------- closed form

def tj_closed(j: int, order: int, verify: bool = False) -> PowerSeries:
    """T (1 - X^{j+2})(1 - X^{j+5}) / ((1 - X^{j+3})(1 - X^{j+4}))"""
    if j < -1:
        raise DomainError(f"closed form holds for j >= -1, got {j}")
    T = series_T(3, order)
    X = series_X(order)
    result = T * (1 - X ** (j + 2)) * (1 - X ** (j + 5)) / ((1 - X ** (j + 3)) * (1 - X ** (j + 4)))
    if verify:
        n = result.first_difference(tj_system(j, order))
        if n is not None:
            raise ConsistencyError(f"closed form and system for T_{j} differ at z^{n}")
    return result


def t0_closed(order: int) -> PowerSeries:
    """T_0 = 3T - 1 - T^2"""
    T = series_T(3, order)
    return 3 * T - 1 - T * T


def t1_closed(order: int) -> PowerSeries:
    """T_1 = (T - 2) T^3 / (T^2 - 3T + 1)"""
    T = series_T(3, order)
    return (T - 2) * T ** 3 / (T * T - 3 * T + 1)


def small_label_family(j_max: int, order: int) -> SmallLabelFamily:
    family = SmallLabelFamily(j_max=j_max, order=order)
    for j in range(-1, j_max + 1):
        family.series[j] = tj_system(j, order)
    return family


# ------------------------------------------------------------ explicit formulas

def t0_coeff(n: int) -> int:
    """2 C(3n, n) / ((n+1)(2n+1)); 1 at n = 0"""
    if n == 0:
        return 1
    return require_integer(Fraction(2 * binomial(3 * n, n), (n + 1) * (2 * n + 1)), f"[z^{n}]T_0")


def t1_coeff(n: int) -> int:
    """Fibonacci-weighted binomial sum for [z^n]T_1; 1 at n = 0"""
    if n == 0:
        return 1
    total = Fraction(2 * binomial(3 * n, n), n + 1)
    for k in range(n + 1):
        weight = n * (11 * k + 5) - 2 * k * (k + 1)
        term = Fraction(fibonacci(k + 1) * binomial(3 * n, n - k) * weight, n * (2 * n + k + 1))
        total += -term if k % 2 == 0 else term
    return require_integer(total, f"[z^{n}]T_1")


# ---------------------------------------------------------------- lambda family

def _shifted_v(X: PowerSeries, lam: PowerSeries, k: int) -> Tuple[PowerSeries, int]:
    """X^a (1 - lam X^{k+1}) with the least a >= 0 making it a power series"""
    a = max(0, -(k + 1))
    return X ** a - lam * X ** (a + k + 1), a


def _lambda_terms(j: int, order: int, lambda_degree: int) -> Tuple[PowerSeries, PowerSeries, PowerSeries]:
    """The three products of the family identity, aligned on a common power of X"""
    T = series_T(3, order).embed((LAMBDA,))
    X = series_X(order).embed((LAMBDA,))
    lam = PowerSeries.constant(MarkPolynomial.variable((LAMBDA,), LAMBDA), order, (LAMBDA,))
    v = {k: _shifted_v(X, lam, k) for k in range(j, j + 6)}

    def product(multiplicities: Dict[int, int]) -> Tuple[PowerSeries, int]:
        result = PowerSeries.constant(1, order, (LAMBDA,))
        shift = 0
        for index, power in multiplicities.items():
            factor, a = v[j + index]
            result = (result * factor ** power).truncate_marks(lambda_degree)
            shift += a * power
        return result, shift

    left, s1 = product({1: 2, 2: 1, 3: 1, 4: 2})
    middle, s2 = product({1: 1, 2: 2, 3: 2, 4: 1})
    right, s3 = product({i: 1 for i in range(6)})
    left = T * left
    right = ps_shift(T ** 3 * right)
    top = max(s1, s2, s3)
    aligned = [(term * X ** (top - s)).truncate_marks(lambda_degree)
               for term, s in ((left, s1), (middle, s2), (right, s3))]
    return aligned[0], aligned[1], aligned[2]


def _first_mark_difference(a: PowerSeries, b: PowerSeries) -> Optional[Tuple[int, int]]:
    for n in range(min(a.order, b.order) + 1):
        diff = a[n] - b[n]
        if diff:
            return n, min(exps[0] for exps in diff.terms)
    return None


def verify_lambda_family(j_min: int, j_max: int, order: int, lambda_degree: int) -> VerificationReport:
    """T v_{j+1}^2 v_{j+2} v_{j+3} v_{j+4}^2 = v_{j+1} v_{j+2}^2 v_{j+3}^2 v_{j+4} + zT^3 v_j...v_{j+5}, v_k = 1 - lam X^{k+1}"""
    ranges = SuiteRanges(j_min=j_min, j_max=j_max, order=order, lambda_degree=lambda_degree)
    with timed() as clock:
        cases: List[CaseResult] = []
        for j in range(j_min, j_max + 1):
            left, middle, right = _lambda_terms(j, order, lambda_degree)
            rhs = middle + right
            where = _first_mark_difference(left, rhs)
            if where is None:
                cases.append(CaseResult.match({"j": j}, "identity"))
            else:
                n, power = where
                cases.append(CaseResult.mismatch(
                    {"j": j, "n": n, "lambda_power": power}, str(left[n]), str(rhs[n])
                ))
    return VerificationReport(suite="lambda-family", ranges=ranges, cases=cases, elapsed_seconds=clock.elapsed)
