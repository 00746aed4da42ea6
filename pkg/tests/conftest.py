import pytest

from src.series.polynomial import MarkPolynomial
from src.trees.step_sets import StepSet


@pytest.fixture
def ternary():
    return StepSet.ternary()


@pytest.fixture
def binary():
    return StepSet.binary()


@pytest.fixture
def u():
    """The single marking variable u as a polynomial"""
    return MarkPolynomial.variable(("u",), "u")


@pytest.fixture(autouse=True)
def _no_cap_override(monkeypatch):
    monkeypatch.delenv("EMBEDDED_TREES_CAP", raising=False)
