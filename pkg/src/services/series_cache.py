"""
Embedded Trees Series Cache
Builds shared series (T, X, system solutions) once and serves any lower order by truncation
"""

import threading
from typing import Any, Callable, Dict, Hashable, Tuple

from loguru import logger

from src.series.power_series import PowerSeries


def _order_of(value: Any) -> int:
    if isinstance(value, PowerSeries):
        return value.order
    if isinstance(value, tuple):
        return min(_order_of(v) for v in value)
    if isinstance(value, dict):
        return min(_order_of(v) for v in value.values())
    return getattr(value, "order")


def _truncate(value: Any, order: int) -> Any:
    if isinstance(value, PowerSeries):
        return value.truncate(order)
    if isinstance(value, tuple):
        return tuple(_truncate(v, order) for v in value)
    if isinstance(value, dict):
        return {k: _truncate(v, order) for k, v in value.items()}
    return value.truncate(order)


class SeriesCache:
    """Order-aware memo of expensive series, keyed by (name, parameters)"""

    def __init__(self):
        self.entries: Dict[Tuple[str, Hashable], Any] = {}
        self.hits = 0
        self.builds = 0
        self._lock = threading.RLock()
        logger.trace("🗄️ Series cache initialized")

    def get(self, name: str, params: Hashable, order: int, builder: Callable[[int], Any]) -> Any:
        """Cached value truncated to order, building it at that order on a miss"""
        key = (name, params)
        with self._lock:
            cached = self.entries.get(key)
            if cached is not None and _order_of(cached) >= order:
                self.hits += 1
                return _truncate(cached, order)
        logger.info(f"🔄 Building {name}{params if params != () else ''} to order {order}")
        value = builder(order)
        with self._lock:
            self.builds += 1
            current = self.entries.get(key)
            if current is None or _order_of(current) < _order_of(value):
                self.entries[key] = value
        logger.debug(f"✅ {name} ready to order {order}")
        return _truncate(value, order)

    def clear(self) -> None:
        with self._lock:
            self.entries.clear()
            self.hits = 0
            self.builds = 0
        logger.info("🧹 Series cache cleared")

    def get_status(self) -> Dict[str, Any]:
        with self._lock:
            return {
                "entries": {f"{name}{params}": _order_of(v) for (name, params), v in self.entries.items()},
                "hits": self.hits,
                "builds": self.builds,
            }


series_cache = SeriesCache()
