"""
Embedded Trees Errors
Exception hierarchy shared by the series engine, generating functions and oracle
"""

from typing import Optional


class EmbeddedTreesError(Exception):
    """Base class for every error raised by this package"""


class IncompatibleVariablesError(EmbeddedTreesError, ValueError):
    """Two series or polynomials carry different marking-variable sets"""


class NonInvertibleError(EmbeddedTreesError, ZeroDivisionError):
    """Reciprocal, root or quotient requested of a non-unit"""


class NonContractionError(EmbeddedTreesError):
    """Fixed-point iteration changed an already settled coefficient"""

    def __init__(self, iteration: int, coefficient: int, component: Optional[int] = None):
        self.iteration = iteration
        self.coefficient = coefficient
        self.component = component
        where = f" in component {component}" if component is not None else ""
        super().__init__(
            f"map is not a contraction: iteration {iteration} changed coefficient "
            f"z^{coefficient}{where}"
        )


class ConsistencyError(EmbeddedTreesError):
    """An internal identity between two computations failed"""


class NonIntegralError(ConsistencyError):
    """A count extracted from exact rationals is not an integer"""


class EnumerationCapError(EmbeddedTreesError):
    """Exhaustive enumeration requested beyond the configured size cap"""

    def __init__(self, arity: int, size: int, cap: int):
        self.arity = arity
        self.size = size
        self.cap = cap
        super().__init__(
            f"refusing to enumerate {arity}-ary trees of size {size}: cap is {cap} "
            f"(raise it with --cap or EMBEDDED_TREES_CAP)"
        )


class DomainError(EmbeddedTreesError, ValueError):
    """Argument outside the domain of a routine"""


class UnknownSuiteError(EmbeddedTreesError, KeyError):
    """No verification suite registered under the name"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown suite"


class UnknownFamilyError(EmbeddedTreesError, KeyError):
    """No sequence family registered under the name"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown family"
