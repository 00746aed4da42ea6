"""
Embedded Trees Configuration
Step-set presets, enumeration caps and verification defaults
"""

import os
from dataclasses import dataclass
from typing import Dict, List, Tuple

from dotenv import load_dotenv

load_dotenv()

@dataclass
class StepSetConfig:
    """Named label-increment preset for one arity"""
    name: str
    increments: Tuple[int, ...]
    description: str = ""

# Default embeddings: one increment per child slot, left to right
STEP_SET_CONFIGS: Dict[str, StepSetConfig] = {
    "binary": StepSetConfig(
        name="Embedded binary trees",
        increments=(-1, 1),
        description="left child one label down, right child one label up"
    ),

    "ternary": StepSetConfig(
        name="Embedded ternary trees",
        increments=(-1, 0, 1),
        description="left, center and right edges of types e1, e2, e3"
    ),

    "quaternary": StepSetConfig(
        name="Embedded quaternary trees",
        increments=(-2, -1, 1, 2)
    ),

    "quinary": StepSetConfig(
        name="Embedded quinary trees",
        increments=(-2, -1, 0, 1, 2)
    ),

    "quaternary-odd": StepSetConfig(
        name="Quaternary trees with odd increments",
        increments=(-3, -1, 1, 3),
        description="alternative embedding, no closed forms"
    ),
}

# Largest size the brute-force enumerator will agree to walk, per arity
ENUMERATION_CAPS: Dict[int, int] = {
    2: 16,
    3: 12,
    4: 9,
}
DEFAULT_ENUMERATION_CAP = 8

# Sizes the oracle suites enumerate unless told otherwise
ORACLE_SIZES: Dict[int, int] = {
    2: 10,
    3: 8,
    4: 6,
}

# Suite groups resolved by the verification service
SUITE_GROUPS: Dict[str, List[str]] = {
    "all": [
        "small-labels",
        "label-marks",
        "leaf-depths",
        "dary-leaf-depths",
        "dary-totality",
        "closed-vs-system",
        "corollary",
        "gen1",
        "lambda-family",
        "power-coeff",
        "x-series",
        "char-root",
        "formal-family",
        "cardano",
    ],
    "oracle": ["small-labels", "label-marks", "leaf-depths", "dary-leaf-depths"],
    "identities": ["closed-vs-system", "corollary", "gen1", "lambda-family", "x-series", "char-root"],
}

# Per-suite parameter defaults, overridden by CLI flags
SUITE_DEFAULTS: Dict[str, Dict] = {
    "small-labels": {"j_min": 0, "j_max": 8},
    "label-marks": {"j_min": 0, "j_max": 3, "m_max": 2},
    "leaf-depths": {},
    "dary-leaf-depths": {"d": 2},
    "dary-totality": {"n_max": 6},
    "closed-vs-system": {"j_min": -1, "j_max": 10, "order": 30, "marked_order": 20, "marked_j_max": 6},
    "corollary": {"order": 30},
    "gen1": {"m_max": 3, "order": 12},
    "lambda-family": {"j_min": -3, "j_max": 5, "order": 12, "lambda_degree": 6},
    "power-coeff": {"n_max": 20, "k_max": 6},
    "x-series": {"order": 50},
    "char-root": {"order": 30},
    "formal-family": {"order": 8, "lambda_degree": 3},
    "cardano": {"points": [-0.1, -0.05, 0.05, 0.1]},
}

SYSTEM_CONFIG = {
    "default_arity": 3,
    "log_level": os.getenv("EMBEDDED_TREES_LOG_LEVEL", "INFO"),
    "workers": int(os.getenv("EMBEDDED_TREES_WORKERS", "1")),
    "memoize_shapes_below": 20000,
    "partial_sum_terms": 40,
}

def enumeration_cap(arity: int) -> int:
    """Cap for an arity, with EMBEDDED_TREES_CAP overriding every entry"""
    override = os.getenv("EMBEDDED_TREES_CAP")
    if override:
        return int(override)
    return ENUMERATION_CAPS.get(arity, DEFAULT_ENUMERATION_CAP)

def oracle_size(arity: int) -> int:
    """Default oracle size, never beyond the enumeration cap"""
    return min(ORACLE_SIZES.get(arity, 4), enumeration_cap(arity))
