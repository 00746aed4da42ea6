"""
Truncated formal power series
One class covers numeric coefficients (TruncatedSeries) and MarkPolynomial
coefficients (PolySeries); the univariate case is the empty variable set.
"""

from fractions import Fraction
from typing import Callable, List, Mapping, Optional, Sequence, Tuple, Union

from src.series.coefficients import Number, as_number, inverse, normalize
from src.series.polynomial import MarkPolynomial
from src.utils.combinatorics import require_integer
from src.utils.errors import IncompatibleVariablesError, NonInvertibleError

Coefficient = Union[int, Fraction, MarkPolynomial]


def _zero(variables: Tuple[str, ...]) -> Coefficient:
    return MarkPolynomial.zero(variables) if variables else 0


def _one(variables: Tuple[str, ...]) -> Coefficient:
    return MarkPolynomial.constant(variables, 1) if variables else 1


def _lift(coeff, variables: Tuple[str, ...]) -> Coefficient:
    if not variables:
        if isinstance(coeff, MarkPolynomial):
            if coeff.variables or not coeff.is_constant():
                raise IncompatibleVariablesError(
                    f"polynomial coefficient {coeff} in a series without marking variables"
                )
            return coeff.constant_term
        return as_number(coeff)
    if isinstance(coeff, MarkPolynomial):
        if coeff.variables == variables:
            return coeff
        if not coeff.variables:
            return MarkPolynomial.constant(variables, coeff.constant_term)
        raise IncompatibleVariablesError(f"coefficient over {coeff.variables}, series over {variables}")
    return MarkPolynomial.constant(variables, as_number(coeff))


class PowerSeries:
    """Series sum_{n<=order} c_n z^n known exactly up to its truncation order"""

    __slots__ = ("coeffs", "variables")

    def __init__(self, coeffs: Sequence, variables: Sequence[str] = ()):
        variables = tuple(variables)
        if not len(coeffs):
            raise ValueError("a truncated series keeps at least its z^0 coefficient")
        self.variables: Tuple[str, ...] = variables
        self.coeffs: Tuple[Coefficient, ...] = tuple(_lift(c, variables) for c in coeffs)

    @classmethod
    def _make(cls, coeffs: Sequence[Coefficient], variables: Tuple[str, ...]) -> "PowerSeries":
        series = cls.__new__(cls)
        series.coeffs = tuple(coeffs)
        series.variables = variables
        return series

    @classmethod
    def constant(cls, value, order: int, variables: Sequence[str] = ()) -> "PowerSeries":
        variables = tuple(variables)
        return cls._make((_lift(value, variables),) + (_zero(variables),) * order, variables)

    @classmethod
    def monomial(cls, power: int, order: int, coefficient=1, variables: Sequence[str] = ()) -> "PowerSeries":
        """coefficient * z^power"""
        variables = tuple(variables)
        coeffs = [_zero(variables)] * (order + 1)
        if power <= order:
            coeffs[power] = _lift(coefficient, variables)
        return cls._make(coeffs, variables)

    # ------------------------------------------------------------------ queries

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Coefficient:
        if n < 0 or n > self.order:
            raise IndexError(f"z^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient, order + 1 for the zero series"""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return self.order + 1

    def first_difference(self, other: "PowerSeries", upto: Optional[int] = None) -> Optional[int]:
        """Smallest n <= upto where the coefficients differ, None if they agree"""
        upto = min(self.order, other.order) if upto is None else upto
        for n in range(upto + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    def integer_coefficients(self, context: str = "series") -> List[int]:
        if self.variables:
            raise IncompatibleVariablesError(f"{context} still carries marks {self.variables}")
        return [require_integer(c, f"{context} at z^{n}") for n, c in enumerate(self.coeffs)]

    # ----------------------------------------------------------- transformations

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot truncate a series of order {self.order} to order {order}")
        return PowerSeries._make(self.coeffs[:order + 1], self.variables)

    def pad(self, order: int) -> "PowerSeries":
        """Extend with zero coefficients up to order (truncates when order is smaller)"""
        if order <= self.order:
            return self.truncate(order)
        return PowerSeries._make(
            self.coeffs + (_zero(self.variables),) * (order - self.order), self.variables
        )

    def map_coefficients(self, fn: Callable[[Coefficient], Coefficient], variables: Sequence[str]) -> "PowerSeries":
        return PowerSeries(tuple(fn(c) for c in self.coeffs), variables)

    def embed(self, variables: Sequence[str]) -> "PowerSeries":
        variables = tuple(variables)
        if variables == self.variables:
            return self
        if not self.variables:
            return PowerSeries(self.coeffs, variables)
        return self.map_coefficients(lambda c: c.embed(variables), variables)

    def specialize(self, values: Mapping[str, Number]) -> "PowerSeries":
        """Fix some marking variables; fixing all of them yields a numeric series"""
        if not values:
            return self
        rest = tuple(v for v in self.variables if v not in values)
        return self.map_coefficients(lambda c: c.specialize(values), rest)

    def evaluate_marks(self, values: Optional[Mapping[str, Number]] = None) -> "PowerSeries":
        """All marks set to the given values (default 1)"""
        values = dict(values or {})
        for name in self.variables:
            values.setdefault(name, 1)
        return self.specialize(values)

    def translate(self, shifts: Mapping[str, Number]) -> "PowerSeries":
        return self.map_coefficients(lambda c: c.translate(shifts), self.variables)

    def rename(self, mapping: Mapping[str, str]) -> "PowerSeries":
        variables = tuple(mapping.get(v, v) for v in self.variables)
        return self.map_coefficients(lambda c: c.rename(mapping), variables)

    def mark_derivative(self, name: str) -> "PowerSeries":
        return self.map_coefficients(lambda c: c.derivative(name), self.variables)

    def truncate_marks(self, max_degree: int, names: Optional[Sequence[str]] = None) -> "PowerSeries":
        return self.map_coefficients(lambda c: c.truncate_degree(max_degree, names), self.variables)

    # ---------------------------------------------------------------- operators

    def __add__(self, other):
        return ps_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return ps_sub(self, other)

    def __rsub__(self, other):
        return ps_add(ps_neg(self), other)

    def __neg__(self):
        return ps_neg(self)

    def __mul__(self, other):
        return ps_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ps_div(self, _as_series(other, self))

    def __rtruediv__(self, other):
        return ps_div(_as_series(other, self), self)

    def __pow__(self, exponent: int):
        return ps_pow(self, exponent)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __str__(self) -> str:
        pieces = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            text = str(c)
            if isinstance(c, MarkPolynomial) and len(c.terms) > 1 and n:
                text = f"({text})"
            power = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
            if n and text == "1":
                pieces.append(power)
            else:
                pieces.append(f"{text}*{power}" if power else text)
        pieces.append(f"O(z^{self.order + 1})")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"PowerSeries({self})"


TruncatedSeries = PowerSeries
PolySeries = PowerSeries


def _as_series(value, like: PowerSeries) -> PowerSeries:
    if isinstance(value, PowerSeries):
        return value
    if isinstance(value, MarkPolynomial):
        variables = like.variables or value.variables
        return PowerSeries.constant(value, like.order, variables)
    return PowerSeries.constant(as_number(value), like.order, like.variables)


def _align(a: PowerSeries, b) -> Tuple[PowerSeries, PowerSeries]:
    """Bring both operands onto one variable set; scalars become constants of a's order"""
    b = _as_series(b, a)
    if a.variables == b.variables:
        return a, b
    if not a.variables:
        return a.embed(b.variables), b
    if not b.variables:
        return a, b.embed(a.variables)
    raise IncompatibleVariablesError(f"marking variables differ: {a.variables} vs {b.variables}")


def ps_add(a: PowerSeries, b) -> PowerSeries:
    """Coefficient-wise exact sum, truncated at the smaller order"""
    a, b = _align(a, b)
    order = min(a.order, b.order)
    if a.variables:
        coeffs = [x + y for x, y in zip(a.coeffs[:order + 1], b.coeffs)]
    else:
        coeffs = [normalize(x + y) for x, y in zip(a.coeffs[:order + 1], b.coeffs)]
    return PowerSeries._make(coeffs, a.variables)


def ps_neg(a: PowerSeries) -> PowerSeries:
    return PowerSeries._make([-c for c in a.coeffs], a.variables)


def ps_sub(a: PowerSeries, b) -> PowerSeries:
    return ps_add(a, ps_neg(_as_series(b, a)))


def ps_scale(a: PowerSeries, factor) -> PowerSeries:
    """Multiply every coefficient by a number or a marking polynomial"""
    if isinstance(factor, MarkPolynomial):
        return ps_mul(a, factor)
    factor = as_number(factor)
    if a.variables:
        return PowerSeries._make([c * factor for c in a.coeffs], a.variables)
    return PowerSeries._make([normalize(c * factor) for c in a.coeffs], a.variables)


def ps_mul(a: PowerSeries, b) -> PowerSeries:
    """Cauchy product truncated at the smaller order"""
    if isinstance(b, (int, Fraction)):
        return ps_scale(a, b)
    a, b = _align(a, b)
    order = min(a.order, b.order)
    left = [(i, c) for i, c in enumerate(a.coeffs[:order + 1]) if c]
    right = [(j, c) for j, c in enumerate(b.coeffs[:order + 1]) if c]
    out: List[Coefficient] = [_zero(a.variables)] * (order + 1)
    for i, ca in left:
        for j, cb in right:
            k = i + j
            if k > order:
                break
            out[k] = out[k] + ca * cb
    if not a.variables:
        out = [normalize(c) for c in out]
    return PowerSeries._make(out, a.variables)


def ps_shift(a: PowerSeries, power: int = 1) -> PowerSeries:
    """z^power * a, known to order a.order + power"""
    if power < 0:
        raise ValueError("use ps_div to divide by powers of z")
    return PowerSeries._make((_zero(a.variables),) * power + a.coeffs, a.variables)


def ps_pow(a: PowerSeries, exponent: int) -> PowerSeries:
    """Non-negative integer power by repeated squaring"""
    if not isinstance(exponent, int) or exponent < 0:
        raise ValueError(f"integer power must be non-negative, got {exponent}")
    result = PowerSeries.constant(1, a.order, a.variables)
    base = a
    while exponent:
        if exponent & 1:
            result = ps_mul(result, base)
        exponent >>= 1
        if exponent:
            base = ps_mul(base, base)
    return result


def _unit_inverse(coeff: Coefficient) -> Number:
    if isinstance(coeff, MarkPolynomial):
        if not coeff.is_constant() or not coeff.constant_term:
            raise NonInvertibleError(f"constant term {coeff} is not a unit")
        return inverse(coeff.constant_term)
    if not coeff:
        raise NonInvertibleError("series with zero constant term has no reciprocal")
    return inverse(coeff)


def ps_recip(a: PowerSeries) -> PowerSeries:
    """r with a * r = 1 to the order of a"""
    inv = _unit_inverse(a.coeffs[0])
    support = [(k, c) for k, c in enumerate(a.coeffs) if k and c]
    r: List[Coefficient] = [_lift(inv, a.variables)]
    for n in range(1, a.order + 1):
        acc = _zero(a.variables)
        for k, c in support:
            if k > n:
                break
            acc = acc + c * r[n - k]
        r.append(acc * (-inv) if a.variables else normalize(-inv * acc))
    return PowerSeries._make(r, a.variables)


def ps_power(a: PowerSeries, alpha: Union[int, Fraction]) -> PowerSeries:
    """a^alpha for a with constant term 1 (Miller's recurrence)"""
    if a.coeffs[0] != 1:
        raise NonInvertibleError(f"rational powers need constant term 1, got {a.coeffs[0]}")
    alpha = Fraction(alpha)
    support = [(k, c) for k, c in enumerate(a.coeffs) if k and c]
    r: List[Coefficient] = [_one(a.variables)]
    for n in range(1, a.order + 1):
        acc = _zero(a.variables)
        for k, c in support:
            if k > n:
                break
            weight = alpha * k - (n - k)
            if weight:
                acc = acc + c * r[n - k] * normalize(weight)
        acc = acc * Fraction(1, n)
        r.append(acc if a.variables else normalize(acc))
    return PowerSeries._make(r, a.variables)


def ps_sqrt(a: PowerSeries) -> PowerSeries:
    """Square root with constant term 1"""
    if a.coeffs[0] != 1:
        raise NonInvertibleError(f"square root needs constant term 1, got {a.coeffs[0]}")
    return ps_power(a, Fraction(1, 2))


def ps_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Exact quotient a / b; a divisor of valuation v lowers the order by v"""
    a, b = _align(a, b)
    v = b.valuation()
    if v > b.order:
        raise NonInvertibleError("division by a series that vanishes to its truncation order")
    if v == 0:
        return ps_mul(a, ps_recip(b))
    if a.order < v:
        raise NonInvertibleError(f"dividend of order {a.order} is too short to divide by z^{v}")
    if a.valuation() < v:
        raise NonInvertibleError(
            f"dividend has valuation {a.valuation()}, below the divisor's valuation {v}"
        )
    top = PowerSeries._make(a.coeffs[v:], a.variables)
    bottom = PowerSeries._make(b.coeffs[v:], b.variables)
    return ps_mul(top, ps_recip(bottom))


def inflate(a: PowerSeries, step: int, variable: str = "u", variables: Optional[Sequence[str]] = None) -> PowerSeries:
    """a(z * variable^step): the z^n coefficient picks up variable^(step*n)"""
    if step < 1:
        raise ValueError(f"inflation step must be at least 1, got {step}")
    if a.variables:
        raise IncompatibleVariablesError("inflate expects a series without marking variables")
    variables = tuple(variables) if variables else (variable,)
    index = variables.index(variable)
    width = len(variables)
    coeffs = []
    for n, c in enumerate(a.coeffs):
        exps = tuple(step * n if i == index else 0 for i in range(width))
        coeffs.append(MarkPolynomial._clean(variables, {exps: c} if c else {}))
    return PowerSeries._make(coeffs, variables)


def substitute_power(a: PowerSeries, k: int) -> PowerSeries:
    """a(z^k), known to order k * (a.order + 1) - 1"""
    if k < 1:
        raise ValueError(f"substitution power must be at least 1, got {k}")
    zero = _zero(a.variables)
    coeffs = [zero] * (k * (a.order + 1))
    for n, c in enumerate(a.coeffs):
        coeffs[k * n] = c
    return PowerSeries._make(coeffs, a.variables)
