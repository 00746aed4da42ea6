"""
Embedded Trees Logging
Single loguru sink on stderr so stdout stays reserved for emitted data
"""

import sys
from typing import Optional

from loguru import logger

from config.tree_config import SYSTEM_CONFIG

_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {name}:{function} - {message}"


def configure_logging(level: Optional[str] = None) -> str:
    """Replace loguru's default sink; returns the level in effect"""
    level = (level or SYSTEM_CONFIG["log_level"]).upper()
    logger.remove()
    logger.add(sys.stderr, level=level, format=_FORMAT)
    logger.debug(f"🔧 Logging configured at {level}")
    return level
