"""
Embedded Trees Commands
seq emits sequences and tables, verify runs suites; both return process exit codes.
"""

import sys
from typing import Callable, Dict, List, Optional, TextIO

from loguru import logger

from src.cli.formatting import format_records, format_reports
from src.generating.label_marks import s_general_system, sj_pm_system, sj_system
from src.generating.leaf_depths import leaf_depth_table
from src.generating.small_labels import small_label_system
from src.generating.ternary import dary_count, dary_power_coeff
from src.models.cli_config import CliConfig
from src.models.records import SequenceRecord
from src.models.reports import SuiteRanges
from src.services.verification_service import VerificationService
from src.trees.step_sets import StepSet
from src.utils.errors import (
    DomainError,
    EmbeddedTreesError,
    EnumerationCapError,
    UnknownFamilyError,
    UnknownSuiteError,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

# Sizes emitted when --n-max is not given
DEFAULT_N_MAX = 10
DEFAULT_LEAF_DEPTH_N_MAX = 4

USAGE_ERRORS = (UnknownFamilyError, UnknownSuiteError, DomainError, EnumerationCapError)


def _n_max(config: CliConfig, default: int = DEFAULT_N_MAX) -> int:
    return config.n_max if config.n_max is not None else default


def _count(config: CliConfig) -> List[SequenceRecord]:
    return [SequenceRecord(family="count", n=n, value=dary_count(config.arity, n))
            for n in range(_n_max(config) + 1)]


def _small_label(config: CliConfig) -> List[SequenceRecord]:
    n_max = _n_max(config)
    j = config.j if config.j is not None else 0
    if j < -1:
        raise DomainError(f"small-label series start at j = -1, got {j}")
    series = small_label_system(StepSet.natural(config.arity), j, n_max)
    return [SequenceRecord(family="small-label", n=n, value=c)
            for n, c in enumerate(series.integer_coefficients(f"T_{j}"))]


def _label_mark(config: CliConfig) -> List[SequenceRecord]:
    if config.arity != 3:
        raise DomainError("label-mark series are built for ternary trees only")
    n_max = _n_max(config)
    j = config.j if config.j is not None else 0
    m = config.m if config.m is not None else 0
    if m == 0:
        series = sj_system(j, n_max)
    elif m == 1:
        series = sj_pm_system(j, n_max)
    else:
        series = s_general_system(m, n_max)[j]
    return [SequenceRecord(family="label-mark", n=n, value=str(series[n])) for n in range(n_max + 1)]


def _leaf_depth(config: CliConfig) -> List[SequenceRecord]:
    records = []
    for n in range(1, _n_max(config, DEFAULT_LEAF_DEPTH_N_MAX) + 1):
        for (s, m), count in sorted(leaf_depth_table(n, config.arity).items()):
            records.append(SequenceRecord(family="leaf-depth", n=n, s=s, m=list(m), value=count))
    return records


def _power_coeff(config: CliConfig) -> List[SequenceRecord]:
    k = config.k if config.k is not None else 1
    return [SequenceRecord(family="power-coeff", n=n, value=dary_power_coeff(config.arity, n, k))
            for n in range(_n_max(config) + 1)]


FAMILIES: Dict[str, Callable[[CliConfig], List[SequenceRecord]]] = {
    "count": _count,
    "small-label": _small_label,
    "label-mark": _label_mark,
    "leaf-depth": _leaf_depth,
    "power-coeff": _power_coeff,
}


def _exit_code(error: EmbeddedTreesError) -> int:
    logger.error(f"❌ {error}")
    return EXIT_USAGE if isinstance(error, USAGE_ERRORS) else EXIT_MISMATCH


def cmd_seq(config: CliConfig, stream: Optional[TextIO] = None) -> int:
    """Emit one record per n (or per leaf-depth cell) of a family"""
    stream = stream or sys.stdout
    try:
        if config.target not in FAMILIES:
            raise UnknownFamilyError(
                f"unknown family {config.target!r}; choose one of {', '.join(FAMILIES)}"
            )
        records = FAMILIES[config.target](config)
    except EmbeddedTreesError as exc:
        return _exit_code(exc)
    stream.write(format_records(records, config.format))
    logger.debug(f"📤 Emitted {len(records)} {config.target} records")
    return EXIT_OK


def suite_ranges(config: CliConfig) -> SuiteRanges:
    return SuiteRanges(n_max=config.n_max, j_max=config.j, m_max=config.m, d=config.d,
                       k_max=config.k, order=config.order, workers=config.workers)


def cmd_verify(config: CliConfig, stream: Optional[TextIO] = None,
               service: Optional[VerificationService] = None) -> int:
    """Run a suite or group; exit 0 iff every gating case matches"""
    stream = stream or sys.stdout
    service = service or VerificationService()
    try:
        reports = service.run(config.target, suite_ranges(config))
    except EmbeddedTreesError as exc:
        return _exit_code(exc)
    stream.write(format_reports(reports, config.format))
    return EXIT_OK if service.passed(reports) else EXIT_MISMATCH
