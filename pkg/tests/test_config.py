import pytest
from loguru import logger
from pydantic import ValidationError

from config.tree_config import SUITE_DEFAULTS, SUITE_GROUPS, enumeration_cap, oracle_size
from src.models.cli_config import CliConfig
from src.oracle.suites import SUITES
from src.series.power_series import PowerSeries
from src.services.series_cache import SeriesCache
from src.services.verification_service import VerificationService
from src.utils.errors import UnknownSuiteError
from src.utils.log_setup import configure_logging


def test_enumeration_caps():
    assert enumeration_cap(2) == 16
    assert enumeration_cap(3) == 12
    assert enumeration_cap(4) == 9
    assert enumeration_cap(7) == 8


def test_cap_override(monkeypatch):
    monkeypatch.setenv("EMBEDDED_TREES_CAP", "5")
    assert enumeration_cap(3) == 5
    assert oracle_size(3) == 5
    assert oracle_size(2) == 5


def test_oracle_sizes():
    assert oracle_size(3) == 8
    assert oracle_size(4) == 6


def test_groups_name_known_suites():
    for names in SUITE_GROUPS.values():
        assert set(names) <= set(SUITES)
    assert set(SUITE_DEFAULTS) == set(SUITES)
    assert SUITE_GROUPS["all"] == list(SUITES)


def test_cache_serves_lower_orders_by_truncation():
    cache = SeriesCache()
    built = []

    def build(order):
        built.append(order)
        return PowerSeries([1] * (order + 1))

    assert cache.get("ones", (), 8, build).order == 8
    assert cache.get("ones", (), 5, build).order == 5
    assert built == [8]
    assert cache.hits == 1
    cache.get("ones", (), 10, build)
    assert built == [8, 10]
    assert cache.get_status()["entries"] == {"ones()": 10}
    cache.clear()
    assert cache.get_status() == {"entries": {}, "hits": 0, "builds": 0}



def test_building_a_cache_logs_nothing_at_debug():
    messages = []
    sink = logger.add(messages.append, level="DEBUG")
    try:
        SeriesCache()
    finally:
        logger.remove(sink)
    assert messages == []

def test_cache_keys_include_parameters():
    cache = SeriesCache()
    cache.get("power", (2,), 3, lambda n: PowerSeries([2] * (n + 1)))
    cache.get("power", (3,), 3, lambda n: PowerSeries([3] * (n + 1)))
    assert cache.builds == 2


def test_service_resolves_groups_and_suites():
    service = VerificationService()
    assert service.resolve("oracle") == SUITE_GROUPS["oracle"]
    assert service.resolve("gen1") == ["gen1"]
    with pytest.raises(UnknownSuiteError):
        service.resolve("everything")


def test_service_remembers_reports():
    service = VerificationService()
    reports = service.run("x-series")
    assert service.passed(reports)
    assert service.get_system_status()["reports"] == {"x-series": True}


def test_cli_config_normalizes_fields():
    config = CliConfig(subcommand="seq", target="count", format="json-lines", log_level="debug")
    assert config.format == "jsonl"
    assert config.log_level == "DEBUG"
    assert config.arity == 3
    assert CliConfig(subcommand="seq", target="count", d=4).arity == 4


@pytest.mark.parametrize("field, value", [("d", 1), ("m", -1), ("workers", 0), ("format", "xml")])
def test_cli_config_rejects(field, value):
    with pytest.raises(ValidationError):
        CliConfig(subcommand="seq", target="count", **{field: value})


def test_logging_level():
    assert configure_logging("warning") == "WARNING"
    assert configure_logging() in ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")
