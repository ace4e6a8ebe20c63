from fractions import Fraction

import pytest
from python.models.measure import GraphMeasure

from .strategies import midpoint_mass, unit_star


@pytest.fixture
def single_mass_star() -> GraphMeasure:
    """
    Three unit edges, a unit mass at the middle of the first one.
    """
    return GraphMeasure(graph=unit_star(), edge_measures={"e1": midpoint_mass()})


@pytest.fixture
def symmetric_star() -> GraphMeasure:
    """
    Three unit edges, a unit mass at the middle of each.
    """
    return GraphMeasure(graph=unit_star(), edge_measures={eid: midpoint_mass() for eid in ("e1", "e2", "e3")})


@pytest.fixture
def central_star() -> GraphMeasure:
    return GraphMeasure(graph=unit_star(), central_mass=Fraction(1))


@pytest.fixture
def empty_star() -> GraphMeasure:
    return GraphMeasure(graph=unit_star())
