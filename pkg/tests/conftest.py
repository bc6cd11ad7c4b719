from fractions import Fraction
from pathlib import Path

import pytest

from tropval.poly import WeightVector
from tropval.textio import parse_presentation

FIXTURES = Path(__file__).parent / "fixtures"


def W(*entries) -> WeightVector:
    return WeightVector(tuple(Fraction(e) for e in entries))


def load(name: str):
    return parse_presentation((FIXTURES / name).read_text()).presentation


@pytest.fixture
def line():
    return load("line.ideal")


@pytest.fixture
def hyperbola():
    return load("hyperbola.ideal")


@pytest.fixture
def cubic():
    return load("cubic.ideal")
