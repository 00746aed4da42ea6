"""
Label-marked generating functions
S_j(z, u) marks internal nodes with label j; S_{j,j+-1}(z, u0, u1) additionally marks
labels j +- 1; the general system marks labels j +- k with u_k for k <= m.
"""

from dataclasses import dataclass
from typing import Dict, Literal, Tuple

from loguru import logger

from src.generating.ternary import series_T, series_X
from src.series.polynomial import MarkPolynomial
from src.series.power_series import PowerSeries, ps_shift
from src.series.solver import fixed_point_solve
from src.services.series_cache import series_cache
from src.utils.errors import ConsistencyError, DomainError

SINGLE_MARK = ("u",)
PAIR_MARKS = ("u0", "u1")


def mark_names(m: int) -> Tuple[str, ...]:
    return tuple(f"u{k}" for k in range(m + 1))


def _shifted_names(variables: Tuple[str, ...]) -> Tuple[str, ...]:
    return tuple("t" + name[1:] for name in variables)


@dataclass(frozen=True)
class MarkedSystem:
    """Solution S_0..S_{K-1} of the marked label system; S_{-j} = S_j and S_k = T for k >= K"""
    m: int
    order: int
    variables: Tuple[str, ...]
    members: Tuple[PowerSeries, ...]
    boundary: PowerSeries

    def __getitem__(self, j: int) -> PowerSeries:
        j = abs(j)
        return self.members[j] if j < len(self.members) else self.boundary

    def truncate(self, order: int) -> "MarkedSystem":
        return MarkedSystem(self.m, order, self.variables,
                            tuple(s.truncate(order) for s in self.members),
                            self.boundary.truncate(order))


@dataclass(frozen=True)
class MuSeries:
    """
    Auxiliary series of the marked closed forms, in t = u - 1 variables.

    x_shift is the power of X folded into the unknown: 0 for the one-mark
    series, 1 for the two-mark series where the unknown is mu * X.
    """
    series: PowerSeries
    x_shift: int = 0

    @property
    def order(self) -> int:
        return self.series.order

    def truncate(self, order: int) -> "MuSeries":
        return MuSeries(self.series.truncate(order), self.x_shift)


# ------------------------------------------------------------------------ system

def _solve_marked(m: int, order: int, variables: Tuple[str, ...]) -> MarkedSystem:
    K = order + m + 1
    T = series_T(3, order).embed(variables)
    marks = [MarkPolynomial.variable(variables, name) for name in variables]
    logger.debug(f"🧮 Solving {K} marked label equations over {variables}")

    def F(ys: Tuple[PowerSeries, ...]) -> Tuple[PowerSeries, ...]:
        def member(k: int) -> PowerSeries:
            k = abs(k)
            return ys[k] if k < K else T

        updated = []
        for k in range(K):
            step = ps_shift(member(k - 1) * ys[k] * member(k + 1))
            if k <= m:
                step = step * marks[k]
            updated.append(1 + step)
        return tuple(updated)

    seed = tuple(PowerSeries.constant(1, 0, variables) for _ in range(K))
    return MarkedSystem(m, order, variables, fixed_point_solve(F, seed, order), T)


def _marked_system(m: int, order: int, variables: Tuple[str, ...]) -> MarkedSystem:
    return series_cache.get("marked-system", (m, variables), order,
                            lambda n: _solve_marked(m, n, variables))


def sj_system(j: int, order: int) -> PowerSeries:
    """S_j = 1 + z S_{j-1} S_j S_{j+1} (j != 0), S_0 = 1 + u z S_0 S_1^2"""
    return _marked_system(0, order, SINGLE_MARK)[j]


def sj_pm_system(j: int, order: int) -> PowerSeries:
    """Label 0 marked by u0, labels +-1 by u1"""
    return _marked_system(1, order, PAIR_MARKS)[j]


def s_general_system(m: int, order: int) -> MarkedSystem:
    """Labels +-k marked by u_k for 0 <= k <= m"""
    if m < 0:
        raise DomainError(f"mark window must be non-negative, got {m}")
    return _marked_system(m, order, mark_names(m))


# -------------------------------------------------------------------- one mark

def _x_context(order: int, variables: Tuple[str, ...]):
    T = series_T(3, order).embed(variables)
    X = series_X(order).embed(variables)
    powers = {0: PowerSeries.constant(1, order, variables), 1: X}
    for k in range(2, 10):
        powers[k] = powers[k - 1] * X
    D = (1 + X) ** 2 * (1 - X) ** 3
    return T, X, powers, D


def _power(powers: Dict[int, PowerSeries], k: int) -> PowerSeries:
    if k not in powers:
        powers[k] = powers[k - 1] * powers[1]
    return powers[k]


def _build_mu(order: int) -> MuSeries:
    variables = ("t",)
    _, X, powers, D = _x_context(order, variables)
    t = MarkPolynomial.variable(variables, "t")

    def F(mu: PowerSeries) -> PowerSeries:
        f = lambda k: 1 + mu * powers[k]
        numerator = f(1) * f(2) ** 2 * f(5)
        denominator = D * (1 - mu * mu * powers[5])
        return numerator / denominator * t

    mu = fixed_point_solve(F, PowerSeries.constant(0, 0, variables), order)
    return MuSeries(mu, x_shift=0)


def mu_series(order: int) -> MuSeries:
    """mu = (u-1)(1 + mu X)(1 + mu X^2)^2 (1 + mu X^5) / ((1+X)^2 (1-X)^3 (1 - mu^2 X^5)), in t = u - 1"""
    return series_cache.get("mu", (), order, _build_mu)


def _to_u(series: PowerSeries, variables: Tuple[str, ...]) -> PowerSeries:
    shifted = _shifted_names(variables)
    return series.translate({name: -1 for name in shifted}).rename(dict(zip(shifted, variables)))


def sj_closed_formula(j: int, order: int) -> PowerSeries:
    """T (1 + mu X^{j+1})(1 + mu X^{j+4}) / ((1 + mu X^{j+2})(1 + mu X^{j+3})) read literally"""
    if j < -1:
        raise DomainError(f"closed form is stated for j >= -1, got {j}")
    mu = mu_series(order).series
    T, _, powers, _ = _x_context(order, ("t",))
    f = lambda k: 1 + mu * _power(powers, k)
    return _to_u(T * f(j + 1) * f(j + 4) / (f(j + 2) * f(j + 3)), SINGLE_MARK)


def sj_closed(j: int, order: int) -> PowerSeries:
    """S_j from mu for j >= 0; negative labels through S_{-j} = S_j"""
    return sj_closed_formula(abs(j), order)


# -------------------------------------------------------------------- two marks

def _pm_numerator_valuation(order: int) -> int:
    variables = ("t0", "t1")
    _, X, powers, _ = _x_context(order, variables)
    mu = PowerSeries.constant(0, order, variables)
    numerator = (1 + X + powers[2]) * (1 + mu * powers[2]) ** 2 * (1 + mu * powers[3]) ** 2
    return numerator.valuation()


def _build_nu(order: int) -> MuSeries:
    variables = ("t0", "t1")
    _, X, powers, D = _x_context(order, variables)
    t0 = MarkPolynomial.variable(variables, "t0")
    t1 = MarkPolynomial.variable(variables, "t1")

    def F(nu: PowerSeries) -> PowerSeries:
        f = lambda k: 1 + nu * powers[k]
        common = D * (1 - nu * nu * powers[3])
        first = X * f(0) * f(1) ** 2 * f(4) / common * t0
        second = (1 + powers[2]) * f(1) * f(2) ** 3 * f(3) / (f(4) * common) * t1
        return first + second

    nu = fixed_point_solve(F, PowerSeries.constant(0, 0, variables), order)
    return MuSeries(nu, x_shift=1)


def mu_pm_series(order: int, form: Literal["derived", "printed"] = "derived") -> MuSeries:
    """
    Auxiliary series of the two-mark closed form.

    The printed equation divides its (u1 - 1) term by X although that
    numerator has X-adic valuation 0; form="printed" checks this precondition
    and raises. The derived form solves for nu = mu X:
      nu = (u0-1) X (1+nu)(1+nu X)^2 (1+nu X^4) / (D (1 - nu^2 X^3))
         + (u1-1) (1+X^2)(1+nu X)(1+nu X^2)^3 (1+nu X^3) / ((1+nu X^4) D (1 - nu^2 X^3))
    with D = (1+X)^2 (1-X)^3.
    """
    if form == "printed":
        valuation = _pm_numerator_valuation(order)
        if valuation < 1:
            raise ConsistencyError(
                f"printed two-mark equation divides by X a numerator of X-adic valuation {valuation}"
            )
    elif form != "derived":
        raise DomainError(f"unknown form {form!r}")
    return series_cache.get("nu", (), order, _build_nu)


def sj_pm_formula(j: int, order: int) -> PowerSeries:
    """T (1 + nu X^j)(1 + nu X^{j+3}) / ((1 + nu X^{j+1})(1 + nu X^{j+2})) read literally, j >= 0"""
    if j < 0:
        raise DomainError(f"two-mark formula is read for j >= 0, got {j}")
    nu = mu_pm_series(order).series
    T, _, powers, _ = _x_context(order, ("t0", "t1"))
    f = lambda k: 1 + nu * _power(powers, k)
    return _to_u(T * f(j) * f(j + 3) / (f(j + 1) * f(j + 2)), PAIR_MARKS)


def sj_pm_closed(j: int, order: int) -> PowerSeries:
    """Closed form for j >= 1, S_0 = 1 / (1 - u0 z S_1^2), negative labels by symmetry"""
    if j < -1:
        raise DomainError(f"closed form is stated for j >= -1, got {j}")
    j = abs(j)
    if j >= 1:
        return sj_pm_formula(j, order)
    S1 = sj_pm_formula(1, order)
    u0 = MarkPolynomial.variable(PAIR_MARKS, "u0")
    return (1 / (1 - ps_shift(S1 * S1) * u0)).truncate(order)


# ----------------------------------------------------------------- conservation

def marked_node_total(n: int, order: int) -> int:
    """sum over j in [-n, n] of [z^n] dS_j/du at u = 1; equals n T_n"""
    if n > order:
        raise DomainError(f"size {n} exceeds order {order}")
    total = 0
    for j in range(-n, n + 1):
        derivative = sj_system(j, order).mark_derivative("u").evaluate_marks()
        total += derivative[n]
    return total
