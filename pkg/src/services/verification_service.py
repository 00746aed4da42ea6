"""
Embedded Trees Verification Service
Resolves suite groups, runs each member suite and keeps a summary of the run
"""

from typing import Dict, List, Optional

from loguru import logger

from config.tree_config import SUITE_GROUPS
from src.models.reports import SuiteRanges, VerificationReport
from src.oracle.suites import SUITES, run_suite
from src.services.series_cache import series_cache
from src.utils.errors import UnknownSuiteError


class VerificationService:
    """Runs named suites or suite groups and remembers their reports"""

    def __init__(self):
        self.reports: Dict[str, VerificationReport] = {}
        logger.info(f"🚀 Verification service ready with {len(SUITES)} suites")

    def resolve(self, target: str) -> List[str]:
        """Suite names for a suite or group name"""
        if target in SUITE_GROUPS:
            return list(SUITE_GROUPS[target])
        if target in SUITES:
            return [target]
        known = sorted(set(SUITES) | set(SUITE_GROUPS))
        raise UnknownSuiteError(f"unknown suite {target!r}; choose one of {', '.join(known)}")

    def run(self, target: str, ranges: Optional[SuiteRanges] = None) -> List[VerificationReport]:
        names = self.resolve(target)
        logger.info(f"📥 Verifying {target}: {', '.join(names)}")
        results = []
        for name in names:
            report = run_suite(name, ranges)
            self.reports[name] = report
            results.append(report)
        failed = [r.suite for r in results if not r.passed and r.gates]
        if failed:
            logger.error(f"❌ {len(failed)} suite(s) failed: {', '.join(failed)}")
        else:
            logger.info(f"✅ All {len(results)} suite(s) passed")
        return results

    @staticmethod
    def passed(reports: List[VerificationReport]) -> bool:
        """Whether every gating report passed"""
        return all(r.passed or not r.gates for r in reports)

    def get_system_status(self) -> Dict:
        return {
            "suites": sorted(SUITES),
            "groups": sorted(SUITE_GROUPS),
            "reports": {name: r.passed for name, r in self.reports.items()},
            "cache": series_cache.get_status(),
        }

    def clear(self) -> None:
        self.reports.clear()
        series_cache.clear()
        logger.info("🧹 Verification reports cleared")
