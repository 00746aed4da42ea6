"""
Embedded Trees Verification Suites
Each suite compares a formula module against the oracle or against a second
route to the same numbers and returns a VerificationReport.
"""

from fractions import Fraction
from typing import Callable, Dict, List, Optional

from loguru import logger

from config.tree_config import SUITE_DEFAULTS, SYSTEM_CONFIG, oracle_size
from src.generating.continued_fractions import verify_gen1
from src.generating.frontier import formal_family_check, verify_char_root
from src.generating.label_marks import (
    PAIR_MARKS,
    SINGLE_MARK,
    s_general_system,
    sj_closed,
    sj_closed_formula,
    sj_pm_closed,
    sj_pm_formula,
    sj_pm_system,
    sj_system,
)
from src.generating.leaf_depths import (
    dary_leaf_depth_count,
    leaf_depth_distribution,
    leaf_depth_table,
    leaf_depth_table_from_series,
)
from src.generating.small_labels import (
    small_label_system,
    t0_closed,
    t0_coeff,
    t1_closed,
    t1_coeff,
    tj_closed,
    tj_system,
    verify_lambda_family,
)
from src.generating.ternary import (
    cardano_eval,
    chu_vandermonde_power_coeff,
    dary_count,
    dary_power_coeff,
    partial_sum,
    series_T,
    series_X,
)
from src.models.reports import CaseResult, SuiteRanges, VerificationReport, timed
from src.oracle.brute_force import label_mark_tally, leaf_depth_tally, mark_polynomial, small_label_tally
from src.series.polynomial import MarkPolynomial
from src.series.power_series import PowerSeries
from src.trees.step_sets import StepSet
from src.utils.errors import ConsistencyError, UnknownSuiteError

Suite = Callable[[SuiteRanges], VerificationReport]

# Known X coefficients, an independent anchor for the x-series suite
X_PREFIX = (0, 1, 3, 13, 64, 338, 1866, 10622)


def _series_case(case: Dict, expected: PowerSeries, actual: PowerSeries) -> CaseResult:
    n = expected.first_difference(actual)
    if n is None:
        return CaseResult.match(case, f"equal to z^{min(expected.order, actual.order)}")
    return CaseResult.mismatch({**case, "n": n}, expected[n], actual[n])


def _oracle_options(ranges: SuiteRanges) -> Dict:
    return {"workers": ranges.workers or SYSTEM_CONFIG["workers"]}


# ------------------------------------------------------------------ oracle suites

def _small_labels(ranges: SuiteRanges) -> VerificationReport:
    d = ranges.d or 3
    steps = StepSet.natural(d)
    n_max = ranges.n_max if ranges.n_max is not None else oracle_size(d)
    cases: List[CaseResult] = []
    for n in range(n_max + 1):
        tally = small_label_tally(n, steps, **_oracle_options(ranges))
        for j in range(ranges.j_min, ranges.j_max + 1):
            counted = sum(count for label, count in tally.counts.items() if label <= j)
            formula = small_label_system(steps, j, n_max)[n]
            witness = tally.witness(j) or tally.witness(j + 1)
            cases.append(CaseResult.compare({"d": d, "j": j, "n": n}, counted, formula, witness))
    return VerificationReport(suite="small-labels", ranges=ranges.model_copy(update={"n_max": n_max}), cases=cases)


def _marked_series(j: int, m: int, order: int) -> PowerSeries:
    if m == 0:
        return sj_system(j, order)
    if m == 1:
        return sj_pm_system(j, order)
    return s_general_system(m, order)[j]


def _label_marks(ranges: SuiteRanges) -> VerificationReport:
    n_max = ranges.n_max if ranges.n_max is not None else oracle_size(3)
    windows = [(j, m) for j in range(ranges.j_min, ranges.j_max + 1) for m in range(ranges.m_max + 1)]
    cases: List[CaseResult] = []
    for n in range(n_max + 1):
        tally = label_mark_tally(n, windows, **_oracle_options(ranges))
        for j, m in windows:
            series = _marked_series(j, m, n_max)
            counted = mark_polynomial(tally, j, m, series.variables)
            cases.append(CaseResult.compare({"j": j, "m": m, "n": n}, counted, series[n]))
    return VerificationReport(suite="label-marks", ranges=ranges.model_copy(update={"n_max": n_max}), cases=cases)


def _table_cases(label: Dict, oracle_tally, table: Dict) -> List[CaseResult]:
    cases = []
    for cell in sorted(set(oracle_tally.counts) | set(table)):
        counted = oracle_tally.counts.get(cell, 0)
        formula = table.get(cell, 0)
        if counted != formula:
            s, m = cell
            cases.append(CaseResult.mismatch({**label, "s": s, "m": list(m)}, counted, formula,
                                             oracle_tally.witness(cell)))
    if not cases:
        cases.append(CaseResult.match(label, f"{len(table)} cells"))
    return cases


def _leaf_depths(ranges: SuiteRanges) -> VerificationReport:
    n_max = ranges.n_max if ranges.n_max is not None else oracle_size(3)
    cases: List[CaseResult] = []
    notes: List[str] = []
    for n in range(1, n_max + 1):
        tally = leaf_depth_tally(n, 3, **_oracle_options(ranges))
        table = leaf_depth_table(n)
        cases.extend(_table_cases({"n": n, "check": "oracle"}, tally, table))

        general = {cell: dary_leaf_depth_count(3, n, cell[0], cell[1]) for cell in table}
        cases.append(CaseResult.compare({"n": n, "check": "d-ary extraction"}, table, general))

        mirrored = {(2 * n - s, tuple(reversed(m))): count for (s, m), count in table.items()}
        cases.append(CaseResult.compare({"n": n, "check": "mirror"}, table, mirrored))

        for s in range(2 * n + 1):
            total = sum(leaf_depth_distribution(n, s).values())
            cases.append(CaseResult.compare({"n": n, "s": s, "check": "distribution"}, Fraction(1), total))

        printed = leaf_depth_table(n, reading="printed")
        if printed != table:
            notes.append(f"n={n}: printed index range differs from enumeration on "
                         f"{len(set(printed.items()) ^ set(table.items()))} cells")
    return VerificationReport(suite="leaf-depths", ranges=ranges.model_copy(update={"n_max": n_max}),
                              cases=cases, notes=notes)


def _dary_leaf_depths(ranges: SuiteRanges) -> VerificationReport:
    d = ranges.d
    n_max = ranges.n_max if ranges.n_max is not None else oracle_size(d)
    cases: List[CaseResult] = []
    for n in range(1, n_max + 1):
        tally = leaf_depth_tally(n, d, **_oracle_options(ranges))
        cases.extend(_table_cases({"d": d, "n": n}, tally, leaf_depth_table(n, d)))
    return VerificationReport(suite="dary-leaf-depths", ranges=ranges.model_copy(update={"d": d, "n_max": n_max}),
                              cases=cases)


def _dary_totality(ranges: SuiteRanges) -> VerificationReport:
    arities = [ranges.d] if ranges.d else [2, 3, 4]
    cases: List[CaseResult] = []
    for d in arities:
        for n in range(1, ranges.n_max + 1):
            table = leaf_depth_table(n, d)
            cases.append(CaseResult.compare({"d": d, "n": n, "check": "leaves"},
                                            ((d - 1) * n + 1) * dary_count(d, n), sum(table.values())))
            if n <= 4:
                cases.append(CaseResult.compare({"d": d, "n": n, "check": "generating function"},
                                                table, leaf_depth_table_from_series(n, d)))
    return VerificationReport(suite="dary-totality", ranges=ranges, cases=cases)


# -------------------------------------------------------------- identity suites

def _closed_vs_system(ranges: SuiteRanges) -> VerificationReport:
    order = ranges.order
    marked_order = ranges.marked_order or order
    cases: List[CaseResult] = []
    for j in range(ranges.j_min, ranges.j_max + 1):
        cases.append(_series_case({"family": "small-label", "j": j}, tj_system(j, order), tj_closed(j, order)))
    for j in range(-1, ranges.marked_j_max + 1):
        cases.append(_series_case({"family": "label-mark", "j": j},
                                  sj_system(j, marked_order), sj_closed(j, marked_order)))
        cases.append(_series_case({"family": "label-pair", "j": j},
                                  sj_pm_system(j, marked_order), sj_pm_closed(j, marked_order)))
    u = MarkPolynomial.variable(SINGLE_MARK, "u")
    cases.append(_series_case({"family": "label-mark", "j": -1, "check": "formula below the mark"},
                              sj_system(1, marked_order) * u, sj_closed_formula(-1, marked_order)))
    u1 = MarkPolynomial.variable(PAIR_MARKS, "u1")
    cases.append(_series_case({"family": "label-pair", "j": 0, "check": "formula at the mark"},
                              sj_pm_system(0, marked_order) * u1, sj_pm_formula(0, marked_order)))
    return VerificationReport(suite="closed-vs-system", ranges=ranges, cases=cases)


def _corollary(ranges: SuiteRanges) -> VerificationReport:
    order = ranges.order
    T0 = tj_system(0, order)
    T1 = tj_system(1, order)
    cases = [
        _series_case({"j": 0, "route": "3T - 1 - T^2"}, T0, t0_closed(order)),
        _series_case({"j": 1, "route": "(T - 2)T^3 / (T^2 - 3T + 1)"}, T1, t1_closed(order)),
    ]
    for n in range(order + 1):
        cases.append(CaseResult.compare({"j": 0, "n": n, "route": "binomial"}, T0[n], t0_coeff(n)))
        cases.append(CaseResult.compare({"j": 1, "n": n, "route": "fibonacci"}, T1[n], t1_coeff(n)))
    return VerificationReport(suite="corollary", ranges=ranges, cases=cases)


def _gen1(ranges: SuiteRanges) -> VerificationReport:
    report = verify_gen1(ranges.m_max, ranges.order)
    report.ranges = ranges
    return report


def _lambda_family(ranges: SuiteRanges) -> VerificationReport:
    return verify_lambda_family(ranges.j_min, ranges.j_max, ranges.order, ranges.lambda_degree)


def _power_coeff(ranges: SuiteRanges) -> VerificationReport:
    arities = [ranges.d] if ranges.d else [2, 3, 4]
    cases: List[CaseResult] = []
    for d in arities:
        T = series_T(d, ranges.n_max)
        power = PowerSeries.constant(1, ranges.n_max)
        for k in range(ranges.k_max + 1):
            for n in range(ranges.n_max + 1):
                closed = dary_power_coeff(d, n, k)
                routes = {"convolution": power[n], "chu-vandermonde": chu_vandermonde_power_coeff(d, n, k)}
                for route, value in routes.items():
                    cases.append(CaseResult.compare({"d": d, "k": k, "n": n, "route": route}, closed, value))
            power = power * T
    return VerificationReport(suite="power-coeff", ranges=ranges, cases=cases)


def _x_series(ranges: SuiteRanges) -> VerificationReport:
    try:
        X = series_X(ranges.order)
    except ConsistencyError as exc:
        return VerificationReport(suite="x-series", ranges=ranges,
                                  cases=[CaseResult.mismatch({"check": "identities"}, "hold", str(exc))])
    cases = [CaseResult.match({"check": "identities"}, f"hold to z^{ranges.order}")]
    prefix = tuple(X.coeffs[:len(X_PREFIX)])
    cases.append(CaseResult.compare({"check": "prefix"}, X_PREFIX[:len(prefix)], prefix))
    return VerificationReport(suite="x-series", ranges=ranges, cases=cases)


def _char_root(ranges: SuiteRanges) -> VerificationReport:
    cases: List[CaseResult] = []
    for steps in (StepSet.ternary(), StepSet.binary()):
        cases.extend(verify_char_root(steps, ranges.order).cases)
    return VerificationReport(suite="char-root", ranges=ranges, cases=cases)


def _formal_family(ranges: SuiteRanges) -> VerificationReport:
    report = formal_family_check(1, ranges.order, ranges.lambda_degree)
    report.ranges = ranges
    exploratory = formal_family_check(2, ranges.order, ranges.lambda_degree)
    state = "holds" if exploratory.passed else f"fails ({len(exploratory.mismatches)} of {len(exploratory.cases)} members)"
    report.notes.append(f"arity 5 single-root family {state}; exploratory, not gated")
    return report


def _cardano(ranges: SuiteRanges) -> VerificationReport:
    cases: List[CaseResult] = []
    for z in ranges.points:
        tolerance = 1e-12 if abs(z) <= 0.05 else 1e-6
        closed = cardano_eval(z)
        series = partial_sum(z)
        error = abs(closed - series)
        case = {"z": z, "tolerance": tolerance}
        detail = f"|difference| = {error:.3e}"
        if error < tolerance:
            cases.append(CaseResult.match(case, f"{closed:.15f}", detail))
        else:
            cases.append(CaseResult.mismatch(case, f"{series:.15f}", f"{closed:.15f}", detail=detail))
    return VerificationReport(suite="cardano", ranges=ranges, cases=cases)


SUITES: Dict[str, Suite] = {
    "small-labels": _small_labels,
    "label-marks": _label_marks,
    "leaf-depths": _leaf_depths,
    "dary-leaf-depths": _dary_leaf_depths,
    "dary-totality": _dary_totality,
    "closed-vs-system": _closed_vs_system,
    "corollary": _corollary,
    "gen1": _gen1,
    "lambda-family": _lambda_family,
    "power-coeff": _power_coeff,
    "x-series": _x_series,
    "char-root": _char_root,
    "formal-family": _formal_family,
    "cardano": _cardano,
}


def run_suite(name: str, ranges: Optional[SuiteRanges] = None) -> VerificationReport:
    """Run one named suite; unset ranges take the suite defaults"""
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; known suites: {', '.join(SUITES)}")
    ranges = (ranges or SuiteRanges()).merged(SUITE_DEFAULTS.get(name, {}))
    logger.info(f"🔍 Running suite {name}")
    with timed() as clock:
        report = SUITES[name](ranges)
    report.elapsed_seconds = clock.elapsed
    if report.passed:
        logger.info(f"✅ {name}: {len(report.cases)} cases match")
    elif report.informational:
        logger.warning(f"⚠️ {name}: {len(report.mismatches)} informational mismatches")
    else:
        logger.error(f"❌ {name}: {len(report.mismatches)} of {len(report.cases)} cases mismatch")
    return report
