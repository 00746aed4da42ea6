"""
Fixed-point solver for implicit series equations
Solves y = F(y) (or a system given as a tuple) one coefficient of precision at a time.
"""

from typing import Callable, Sequence, Tuple, Union

from loguru import logger

from src.series.power_series import PowerSeries
from src.utils.errors import NonContractionError

SeriesOrSystem = Union[PowerSeries, Tuple[PowerSeries, ...]]


def _components(value) -> Tuple[PowerSeries, ...]:
    if isinstance(value, PowerSeries):
        return (value,)
    if isinstance(value, (tuple, list)):
        return tuple(value)
    raise TypeError(f"fixed-point maps work on series or tuples of series, got {type(value).__name__}")


def _fit(parts: Sequence[PowerSeries], order: int) -> Tuple[PowerSeries, ...]:
    fitted = []
    for part in parts:
        if part.order < order:
            raise ValueError(
                f"map returned a series of order {part.order}, precision {order} was requested; "
                f"a constant inside the map was built to a lower order"
            )
        fitted.append(part.truncate(order))
    return tuple(fitted)


def fixed_point_solve(F: Callable, seed: SeriesOrSystem, order: int) -> SeriesOrSystem:
    """
    Unique fixed point of F to the given order.

    F must be a contraction in the z-adic metric. Precision grows by one
    coefficient per iteration: the iterate at precision p is fed to F padded
    to order p, every coefficient below p must come back unchanged, and one
    final application at full order confirms stabilization (order + 2 calls).
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    single = isinstance(seed, PowerSeries)
    parts = tuple(part.pad(0) for part in _components(seed))
    width = len(parts)

    def apply(current: Tuple[PowerSeries, ...], precision: int) -> Tuple[PowerSeries, ...]:
        result = _components(F(current[0] if single else current))
        if len(result) != width:
            raise ValueError(f"map returned {len(result)} components, expected {width}")
        return _fit(result, precision)

    current = apply(parts, 0)
    for precision in range(1, order + 1):
        candidate = apply(tuple(part.pad(precision) for part in current), precision)
        for index, (old, new) in enumerate(zip(current, candidate)):
            changed = old.first_difference(new, precision - 1)
            if changed is not None:
                raise NonContractionError(precision, changed, index if not single else None)
        current = candidate
        logger.trace(f"fixed point settled through z^{precision}")

    confirm = apply(current, order)
    for index, (old, new) in enumerate(zip(current, confirm)):
        changed = old.first_difference(new)
        if changed is not None:
            raise NonContractionError(order + 1, changed, index if not single else None)
    return current[0] if single else current
