"""
Sparse marking polynomials
Exact polynomials in the marking variables u, u0..um, t, v1..vd
"""

from fractions import Fraction
from operator import add
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from src.series.coefficients import Number, as_number, inverse, normalize
from src.utils.combinatorics import binomial
from src.utils.errors import IncompatibleVariablesError, NonInvertibleError

Exponents = Tuple[int, ...]


class MarkPolynomial:
    """Sparse map from exponent vectors to exact coefficients; zero terms are never stored"""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Exponents, Number]] = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate marking variables in {self.variables}")
        width = len(self.variables)
        cleaned: Dict[Exponents, Number] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != width or any(e < 0 for e in exps):
                raise ValueError(f"exponent vector {exps} does not fit variables {self.variables}")
            coeff = as_number(coeff)
            if coeff:
                cleaned[exps] = coeff
        self.terms: Dict[Exponents, Number] = cleaned

    @classmethod
    def _clean(cls, variables: Tuple[str, ...], terms: Dict[Exponents, Number]) -> "MarkPolynomial":
        poly = cls.__new__(cls)
        poly.variables = variables
        poly.terms = terms
        return poly

    @classmethod
    def constant(cls, variables: Sequence[str], value: Number) -> "MarkPolynomial":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MarkPolynomial":
        return cls._clean(tuple(variables), {})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str, power: int = 1) -> "MarkPolynomial":
        variables = tuple(variables)
        if name not in variables:
            raise IncompatibleVariablesError(f"{name} is not one of {variables}")
        exps = tuple(power if v == name else 0 for v in variables)
        return cls(variables, {exps: 1})

    # ------------------------------------------------------------------ queries

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self.terms)

    @property
    def constant_term(self) -> Number:
        return self.terms.get((0,) * len(self.variables), 0)

    def total_degree(self) -> int:
        """Largest total degree of a stored term, 0 for the zero polynomial"""
        return max((sum(exps) for exps in self.terms), default=0)

    def coefficient(self, exponents: Union[Exponents, Mapping[str, int]]) -> Number:
        if isinstance(exponents, Mapping):
            unknown = set(exponents) - set(self.variables)
            if unknown:
                raise IncompatibleVariablesError(f"{sorted(unknown)} not among {self.variables}")
            exponents = tuple(exponents.get(v, 0) for v in self.variables)
        return self.terms.get(tuple(exponents), 0)

    def items(self) -> Iterator[Tuple[Exponents, Number]]:
        return iter(sorted(self.terms.items()))

    def _index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise IncompatibleVariablesError(f"{name} is not one of {self.variables}") from None

    # --------------------------------------------------------------- arithmetic

    def _coerce(self, other) -> Optional["MarkPolynomial"]:
        if isinstance(other, MarkPolynomial):
            if other.variables == self.variables:
                return other
            if not other.variables:
                return MarkPolynomial.constant(self.variables, other.constant_term)
            if not self.variables:
                return None
            raise IncompatibleVariablesError(
                f"marking variables differ: {self.variables} vs {other.variables}"
            )
        if isinstance(other, (int, Fraction)):
            return MarkPolynomial.constant(self.variables, other)
        return None

    def __add__(self, other):
        if isinstance(other, MarkPolynomial) and not self.variables and other.variables:
            return other.__add__(self)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            value = normalize(terms.get(exps, 0) + coeff)
            if value:
                terms[exps] = value
            else:
                terms.pop(exps, None)
        return MarkPolynomial._clean(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MarkPolynomial":
        return MarkPolynomial._clean(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (MarkPolynomial, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MarkPolynomial.zero(self.variables)
            return MarkPolynomial._clean(
                self.variables, {e: normalize(c * other) for e, c in self.terms.items()}
            )
        if isinstance(other, MarkPolynomial) and not self.variables and other.variables:
            return other.__mul__(self)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return MarkPolynomial.zero(self.variables)
        terms: Dict[Exponents, Number] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(map(add, ea, eb))
                terms[key] = terms.get(key, 0) + ca * cb
        return MarkPolynomial._clean(
            self.variables, {e: normalize(c) for e, c in terms.items() if c}
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise NonInvertibleError("division of a marking polynomial by zero")
            return self * inverse(other)
        if isinstance(other, MarkPolynomial):
            other = self._coerce(other)
            if other.is_constant() and other.constant_term:
                return self * inverse(other.constant_term)
            raise NonInvertibleError(f"{other} is not a unit of the polynomial ring")
        return NotImplemented

    def __pow__(self, exponent: int) -> "MarkPolynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial powers need a non-negative int, got {exponent}")
        result = MarkPolynomial.constant(self.variables, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_term == other
        if isinstance(other, MarkPolynomial):
            if self.variables == other.variables:
                return self.terms == other.terms
            if self.is_constant() and other.is_constant():
                return self.constant_term == other.constant_term
            return False
        return NotImplemented

    __hash__ = None

    # ----------------------------------------------------------- transformations

    def specialize(self, values: Mapping[str, Number]) -> "MarkPolynomial":
        """Substitute numbers for some variables; the rest are kept in order"""
        indices = [self._index(name) for name in values]
        keep = [i for i in range(len(self.variables)) if i not in indices]
        fixed = [(i, as_number(values[self.variables[i]])) for i in indices]
        terms: Dict[Exponents, Number] = {}
        for exps, coeff in self.terms.items():
            for i, value in fixed:
                coeff = coeff * value ** exps[i]
            key = tuple(exps[i] for i in keep)
            terms[key] = terms.get(key, 0) + coeff
        return MarkPolynomial(tuple(self.variables[i] for i in keep), terms)

    def evaluate(self, values: Mapping[str, Number]) -> Number:
        missing = set(self.variables) - set(values)
        if missing:
            raise IncompatibleVariablesError(f"no value given for {sorted(missing)}")
        return normalize(self.specialize({v: values[v] for v in self.variables}).constant_term)

    def translate(self, shifts: Mapping[str, Number]) -> "MarkPolynomial":
        """p(x + c) for the given shifts c; t = u - 1 becomes u via translate({'t': -1})"""
        terms = dict(self.terms)
        for name, shift in shifts.items():
            index = self._index(name)
            shift = as_number(shift)
            moved: Dict[Exponents, Number] = {}
            for exps, coeff in terms.items():
                e = exps[index]
                for k in range(e + 1):
                    key = exps[:index] + (k,) + exps[index + 1:]
                    moved[key] = moved.get(key, 0) + coeff * binomial(e, k) * shift ** (e - k)
            terms = {e: normalize(c) for e, c in moved.items() if c}
        return MarkPolynomial._clean(self.variables, terms)

    def rename(self, mapping: Mapping[str, str]) -> "MarkPolynomial":
        return MarkPolynomial(tuple(mapping.get(v, v) for v in self.variables), self.terms)

    def embed(self, variables: Sequence[str]) -> "MarkPolynomial":
        """Re-express over a superset of the variables"""
        variables = tuple(variables)
        missing = [v for v in self.variables if v not in variables]
        if missing:
            raise IncompatibleVariablesError(f"cannot embed {self.variables} into {variables}")
        positions = [self.variables.index(v) if v in self.variables else None for v in variables]
        terms = {
            tuple(exps[p] if p is not None else 0 for p in positions): coeff
            for exps, coeff in self.terms.items()
        }
        return MarkPolynomial._clean(variables, terms)

    def derivative(self, name: str) -> "MarkPolynomial":
        index = self._index(name)
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[index]:
                key = exps[:index] + (exps[index] - 1,) + exps[index + 1:]
                terms[key] = coeff * exps[index]
        return MarkPolynomial._clean(self.variables, terms)

    def truncate_degree(self, max_degree: int, names: Optional[Sequence[str]] = None) -> "MarkPolynomial":
        """Drop terms whose degree in `names` (all variables by default) exceeds max_degree"""
        indices = [self._index(n) for n in names] if names else range(len(self.variables))
        terms = {
            exps: coeff for exps, coeff in self.terms.items()
            if sum(exps[i] for i in indices) <= max_degree
        }
        return MarkPolynomial._clean(self.variables, terms)

    # ------------------------------------------------------------------ display

    def _monomial(self, exps: Exponents) -> str:
        parts = []
        for name, e in zip(self.variables, exps):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))
        pieces = []
        for exps, coeff in ordered:
            monomial = self._monomial(exps)
            magnitude = abs(coeff)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MarkPolynomial({self.variables!r}, {self})"
