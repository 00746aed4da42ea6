"""
Characteristic equations of embedded d-ary trees
P(X) = sum_l X^{b_l} for a step set, the check 1 - z T^{d-1} P(X) = 0 for the
step sets with a proved root, and the formal solution family of (2k+1)-ary trees.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from loguru import logger

from src.generating.small_labels import LAMBDA
from src.generating.ternary import series_T, series_X
from src.models.reports import CaseResult, SuiteRanges, VerificationReport, timed
from src.series.polynomial import MarkPolynomial
from src.series.power_series import PowerSeries, ps_power, ps_shift, substitute_power
from src.series.solver import fixed_point_solve
from src.services.series_cache import series_cache
from src.trees.step_sets import StepSet
from src.utils.errors import DomainError


@dataclass(frozen=True)
class LaurentPolynomial:
    """Finite sum of c_e X^e with integer exponents of either sign"""
    terms: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {e: c for e, c in self.terms.items() if c})

    @classmethod
    def from_steps(cls, steps: StepSet) -> "LaurentPolynomial":
        terms: Dict[int, int] = {}
        for b in steps.increments:
            terms[b] = terms.get(b, 0) + 1
        return cls(terms)

    @property
    def min_exponent(self) -> int:
        return min(self.terms, default=0)

    @property
    def max_exponent(self) -> int:
        return max(self.terms, default=0)

    def reflect(self) -> "LaurentPolynomial":
        """P(1/X)"""
        return LaurentPolynomial({-e: c for e, c in self.terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.reflect()

    def cleared(self) -> Tuple[int, Tuple[int, ...]]:
        """(shift, coefficients) with X^shift P(X) = sum_i coefficients[i] X^i"""
        shift = max(0, -self.min_exponent)
        width = self.max_exponent + shift + 1
        return shift, tuple(self.terms.get(i - shift, 0) for i in range(width))

    def evaluate(self, x: PowerSeries) -> PowerSeries:
        """X^shift P(X) at a series argument"""
        shift, coefficients = self.cleared()
        result = PowerSeries.constant(0, x.order, x.variables)
        power = PowerSeries.constant(1, x.order, x.variables)
        for c in coefficients:
            if c:
                result = result + power * c
            power = power * x
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms):
            c = self.terms[e]
            monomial = "1" if e == 0 else ("X" if e == 1 else f"X^{e}")
            if c == 1:
                pieces.append(monomial)
            elif e == 0:
                pieces.append(str(c))
            else:
                pieces.append(f"{c}*{monomial}")
        return " + ".join(pieces)


@dataclass(frozen=True)
class CharacteristicEquation:
    """1 - z T^{|S|-1}(z) P(X) = 0 for a step set"""
    steps: StepSet
    polynomial: LaurentPolynomial
    T: PowerSeries

    @classmethod
    def of(cls, steps: StepSet, order: int) -> "CharacteristicEquation":
        return cls(steps, characteristic_poly(steps), series_T(steps.arity, order))

    def residual(self, X: PowerSeries) -> PowerSeries:
        """X^shift (1 - z T^{d-1} P(X)), cleared of negative powers of X"""
        shift, _ = self.polynomial.cleared()
        T = self.T.truncate(min(self.T.order, X.order))
        return X ** shift - ps_shift(T ** (self.steps.arity - 1) * self.polynomial.evaluate(X))


def characteristic_poly(steps: StepSet) -> LaurentPolynomial:
    return LaurentPolynomial.from_steps(steps)


def _binary_X(order: int) -> PowerSeries:
    """X = zT(1 + X^2) for binary trees"""
    T = series_T(2, order)
    return fixed_point_solve(lambda x: ps_shift(T * (1 + x * x)), PowerSeries.constant(0, 0), order)


def characteristic_root(steps: StepSet, order: int) -> PowerSeries:
    if steps.increments == StepSet.ternary().increments:
        return series_X(order)
    if steps.increments == StepSet.binary().increments:
        return series_cache.get("X-binary", (), order, _binary_X)
    raise DomainError(f"no proved characteristic root for step set {steps}")


def verify_char_root(steps: StepSet, order: int) -> VerificationReport:
    """The residual of the characteristic equation vanishes to the given order"""
    ranges = SuiteRanges(order=order, d=steps.arity)
    with timed() as clock:
        equation = CharacteristicEquation.of(steps, order)
        residual = equation.residual(characteristic_root(steps, order))
        valuation = residual.valuation()
        if valuation > residual.order:
            cases = [CaseResult.match({"steps": str(steps)}, "residual 0")]
        else:
            cases = [CaseResult.mismatch({"steps": str(steps), "valuation": valuation}, 0, residual[valuation])]
    return VerificationReport(suite="char-root", ranges=ranges, cases=cases, elapsed_seconds=clock.elapsed)


# ---------------------------------------------------------------- formal family

def _odd_arity_root(k: int, order: int) -> PowerSeries:
    """
    Small root of X^k = z T^{2k} (1 + X + ... + X^{2k}) in the variable s with z = s^k.

    Returned to s-order k * order, i.e. z-order `order`.
    """
    T = substitute_power(series_T(2 * k + 1, order), k)
    alpha = Fraction(1, k)

    def F(x: PowerSeries) -> PowerSeries:
        steps = PowerSeries.constant(1, x.order)
        for i in range(1, 2 * k + 1):
            steps = steps + x ** i
        return ps_shift(T * T * ps_power(steps, alpha))

    return fixed_point_solve(F, PowerSeries.constant(0, 0), k * order)


def formal_family_check(k: int, order: int, lambda_degree: int) -> VerificationReport:
    """
    Substitute T_j = T (1 - lam X^{k+1+j})(1 - lam X^{2k+3+j}) / ((1 - lam X^{k+2+j})(1 - lam X^{2k+2+j}))
    into T_j = 1 + z prod_{|l|<=k} T_{j+l} for j = -1..2k, working in s = z^{1/k}.
    Below j = -1 some member would need a negative power of X.

    k = 1 is the ternary family and must hold; for k >= 2 the report is informational.
    """
    if k < 1:
        raise DomainError(f"family parameter must be at least 1, got {k}")
    ranges = SuiteRanges(d=2 * k + 1, order=order, lambda_degree=lambda_degree)
    with timed() as clock:
        variables = (LAMBDA,)
        s_order = k * order
        X = _odd_arity_root(k, order).embed(variables)
        T = substitute_power(series_T(2 * k + 1, order), k).truncate(s_order).embed(variables)
        lam = PowerSeries.constant(MarkPolynomial.variable(variables, LAMBDA), s_order, variables)

        def factor(exponent: int) -> PowerSeries:
            return 1 - lam * X ** exponent

        def member(j: int) -> PowerSeries:
            value = T * factor(k + 1 + j) * factor(2 * k + 3 + j) / (factor(k + 2 + j) * factor(2 * k + 2 + j))
            return value.truncate_marks(lambda_degree)

        members = {j: member(j) for j in range(-k - 1, 3 * k + 1)}
        cases = []
        for j in range(-1, 2 * k + 1):
            product = members[j - k]
            for l in range(-k + 1, k + 1):
                product = (product * members[j + l]).truncate_marks(lambda_degree)
            rhs = (1 + ps_shift(product, k)).truncate(s_order)
            n = members[j].first_difference(rhs)
            if n is None:
                cases.append(CaseResult.match({"j": j}, "family member"))
            else:
                cases.append(CaseResult.mismatch({"j": j, "s_power": n}, members[j][n], rhs[n]))
    report = VerificationReport(suite="formal-family", ranges=ranges, cases=cases,
                                elapsed_seconds=clock.elapsed, informational=k >= 2)
    if k >= 2:
        report.notes.append("single-root family for arity >= 5 is exploratory; no acceptance attached")
    logger.debug(f"🔬 formal family k={k}: {'holds' if report.passed else 'fails'}")
    return report

