"""
Finite continued fractions
<a_n, ..., a_0> = 1/(1 - a_n/(1 - a_{n-1}/( ... /(1 - a_0)))) = k_{n-1}/k_n, where
k_{-1} = 1, k_0 = 1 - a_0 and k_n = k_{n-1} - a_n k_{n-2}.
"""

from fractions import Fraction
from typing import Iterator, List, Literal, Sequence, Tuple

from src.generating.label_marks import s_general_system
from src.models.reports import CaseResult, SuiteRanges, VerificationReport, timed
from src.series.polynomial import MarkPolynomial
from src.series.power_series import PowerSeries, ps_div, ps_shift
from src.utils.errors import ConsistencyError, NonInvertibleError


def _sparse_index_sets(n: int, start: int = 0) -> Iterator[Tuple[int, ...]]:
    """Subsets of {start..n} with consecutive chosen indices at least two apart"""
    if start > n:
        yield ()
        return
    yield from _sparse_index_sets(n, start + 1)
    for rest in _sparse_index_sets(n, start + 2):
        yield (start,) + rest


def _kn_recurrence(n: int, terms: Sequence):
    previous, current = 1, 1 - terms[0]
    for i in range(1, n + 1):
        previous, current = current, current - terms[i] * previous
    return current


def _kn_explicit(n: int, terms: Sequence):
    total = 1
    for chosen in _sparse_index_sets(n):
        if not chosen:
            continue
        product = terms[chosen[0]]
        for i in chosen[1:]:
            product = product * terms[i]
        total = total - product if len(chosen) % 2 else total + product
    return total


def kn_poly(n: int, terms: Sequence, method: Literal["recurrence", "explicit", "both"] = "both"):
    """
    k_n for terms (a_0, ..., a_n).

    The explicit form sums (-1)^|I| prod_{i in I} a_i over index sets I of
    {0..n} with no two adjacent indices. With method="both" the two forms are
    computed and required to agree.
    """
    if n < -1:
        raise ValueError(f"k_n is defined for n >= -1, got {n}")
    if n == -1:
        return 1
    if len(terms) < n + 1:
        raise ValueError(f"k_{n} needs {n + 1} terms, got {len(terms)}")
    if method == "recurrence":
        return _kn_recurrence(n, terms)
    if method == "explicit":
        return _kn_explicit(n, terms)
    recurrence = _kn_recurrence(n, terms)
    explicit = _kn_explicit(n, terms)
    if not recurrence == explicit:
        raise ConsistencyError(f"k_{n}: recurrence {recurrence} differs from explicit sum {explicit}")
    return recurrence


def _divide(numerator, denominator):
    if isinstance(denominator, PowerSeries) or isinstance(numerator, PowerSeries):
        like = denominator if isinstance(denominator, PowerSeries) else numerator
        if not isinstance(numerator, PowerSeries):
            numerator = PowerSeries.constant(numerator, like.order, like.variables)
        if not isinstance(denominator, PowerSeries):
            denominator = PowerSeries.constant(denominator, like.order, like.variables)
        return ps_div(numerator, denominator)
    if isinstance(numerator, MarkPolynomial):
        return numerator / denominator
    if isinstance(denominator, MarkPolynomial):
        return MarkPolynomial.constant(denominator.variables, numerator) / denominator
    if not denominator:
        raise NonInvertibleError("continued fraction with k_n = 0")
    return Fraction(numerator) / denominator


def cf_eval(terms_desc: Sequence):
    """<a_n, ..., a_0> = k_{n-1}/k_n for terms given as (a_n, ..., a_0)"""
    if not terms_desc:
        raise ValueError("a continued fraction needs at least a_0")
    terms = list(reversed(terms_desc))
    n = len(terms) - 1
    return _divide(kn_poly(n - 1, terms, "recurrence"), kn_poly(n, terms, "recurrence"))


def cf_nested(terms_desc: Sequence):
    """Direct nested evaluation, innermost 1 - a_0 first"""
    terms = list(reversed(terms_desc))
    value = _divide(1, 1 - terms[0])
    for a in terms[1:]:
        value = _divide(1, 1 - a * value)
    return value


def gen1_terms(m: int, order: int) -> List[PowerSeries]:
    """(a_m, ..., a_0) with a_i = z u_i S_{i+1} for i >= 1 and a_0 = z u_0 S_1^2"""
    system = s_general_system(m, order)
    marks = [MarkPolynomial.variable(system.variables, name) for name in system.variables]
    terms = []
    for i in range(m, 0, -1):
        terms.append(ps_shift(system[i + 1]) * marks[i])
    terms.append(ps_shift(system[1] * system[1]) * marks[0])
    return terms


def verify_gen1(m_max: int, order: int, m_min: int = 0) -> VerificationReport:
    """S_m equals <z u_m S_{m+1}, ..., z u_1 S_2, z u_0 S_1^2> for each m"""
    ranges = SuiteRanges(m_max=m_max, order=order)
    with timed() as clock:
        cases = []
        for m in range(m_min, m_max + 1):
            expected = s_general_system(m, order)[m]
            actual = cf_eval(gen1_terms(m, order)).truncate(order)
            n = expected.first_difference(actual)
            if n is None:
                cases.append(CaseResult.match({"m": m}, "continued fraction"))
            else:
                cases.append(CaseResult.mismatch({"m": m, "n": n}, expected[n], actual[n]))
    return VerificationReport(suite="gen1", ranges=ranges, cases=cases, elapsed_seconds=clock.elapsed)
