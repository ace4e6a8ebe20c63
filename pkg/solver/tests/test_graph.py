from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from python.common.kernels import eval_T, eval_Y, growth_integral, trace_integral
from python.exceptions import DomainError
from python.models.characteristic import PiecewiseLinearFn
from python.models.graph import Edge, StarGraph, harmonic_lengths
from python.models.measure import EdgeMeasure, GraphMeasure, PointMass, integrate

from .strategies import lengths, unit_star


def test_harmonic_lengths_of_unit_star():
    L, coharmonic = harmonic_lengths(unit_star())
    assert L == Fraction(1, 3)
    assert coharmonic == {"e1": Fraction(1, 2), "e2": Fraction(1, 2), "e3": Fraction(1, 2)}


def test_harmonic_lengths_of_uneven_star():
    graph = StarGraph.from_lengths({"a": 1, "b": 2})
    L, coharmonic = harmonic_lengths(graph)
    assert L == Fraction(2, 3)
    assert coharmonic == {"a": Fraction(2), "b": Fraction(1)}


@pytest.mark.parametrize(
    "edges",
    [
        (Edge("a", Fraction(1)),),
        (Edge("a", Fraction(1)), Edge("a", Fraction(2))),
        (Edge("a", Fraction(1)), Edge("b", Fraction(0))),
    ],
)
def test_invalid_graphs(edges):
    with pytest.raises(DomainError) as err:
        StarGraph(edges)
    assert err.value.code == "invalid_graph"


def test_kernels_on_unit_star():
    graph = unit_star()
    assert eval_Y(graph, "e1", Fraction(1, 2)) == Fraction(1, 6)
    assert eval_T(graph, "e1", Fraction(1, 2)) == Fraction(1, 3)
    assert eval_T(graph, "e2", Fraction(0)) == Fraction(1, 3)
    assert eval_T(graph, "e3", Fraction(1)) == 0


def test_kernel_outside_edge():
    with pytest.raises(DomainError):
        eval_T(unit_star(), "e1", Fraction(3, 2))


def test_trace_integral_of_single_mass(single_mass_star):
    assert trace_integral(single_mass_star) == Fraction(1, 3)
    assert growth_integral(single_mass_star) == Fraction(1, 6)


def test_trace_integral_of_central_mass(central_star):
    assert trace_integral(central_star) == Fraction(1, 3)


def test_trace_integral_of_empty_measure(empty_star):
    assert trace_integral(empty_star) == 0
    assert empty_star.is_empty


def test_integrate_counts_central_mass_once(central_star):
    assert integrate(central_star, lambda edge, x: Fraction(1)) == 1


@pytest.mark.parametrize(
    "masses",
    [
        (PointMass(Fraction(1, 2), Fraction(1)), PointMass(Fraction(1, 4), Fraction(1))),
        (PointMass(Fraction(1, 2), Fraction(1)), PointMass(Fraction(1, 2), Fraction(2))),
        (PointMass(Fraction(1, 2), Fraction(0)),),
    ],
)
def test_invalid_edge_measures(masses):
    with pytest.raises(DomainError):
        EdgeMeasure(masses)


@pytest.mark.parametrize("position", [Fraction(0), Fraction(1), Fraction(2)])
def test_mass_outside_open_edge(position):
    with pytest.raises(DomainError) as err:
        GraphMeasure(graph=unit_star(), edge_measures={"e1": EdgeMeasure((PointMass(position, Fraction(1)),))})
    assert err.value.code == "invalid_measure"


def test_negative_central_mass():
    with pytest.raises(DomainError):
        GraphMeasure(graph=unit_star(), central_mass=Fraction(-1))


def test_measure_equality_is_structural(single_mass_star):
    explicit = GraphMeasure(
        graph=unit_star(),
        edge_measures={
            "e1": EdgeMeasure((PointMass(Fraction(1, 2), Fraction(1)),)),
            "e2": EdgeMeasure(),
            "e3": EdgeMeasure(),
        },
    )
    assert explicit == single_mass_star


def test_harmonic_length_of_three_lengths():
    graph = StarGraph.from_lengths({"a": 1, "b": 2, "c": 3})
    assert graph.harmonic_length == Fraction(6, 11)


graphs = st.lists(lengths, min_size=2, max_size=4).map(
    lambda ls: StarGraph.from_lengths({f"e{i + 1}": length for i, length in enumerate(ls)})
)
values = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@given(graphs)
def test_harmonic_weights_sum_to_one(graph):
    L, coharmonic = harmonic_lengths(graph)
    assert sum(L / edge.length for edge in graph.edges) == 1
    assert all(coharmonic[edge.id] > L > 0 for edge in graph.edges)


@given(graphs, st.data())
def test_trace_kernel_factors_through_Y(graph, data):
    _, coharmonic = harmonic_lengths(graph)
    for edge in graph.edges:
        x = edge.length * data.draw(st.fractions(min_value=0, max_value=1, max_denominator=16))
        assert eval_T(graph, edge.id, x) == eval_Y(graph, edge.id, x) * (1 + x / coharmonic[edge.id])


@given(graphs, st.data())
def test_trace_kernel_is_positive_and_bounded_by_its_maximum(graph, data):
    _, coharmonic = harmonic_lengths(graph)
    for edge in graph.edges:
        # (1 + x/L_e)(1 - x/l_e) peaks at (l_e - L_e)/2, clamped to the edge
        peak = max((edge.length - coharmonic[edge.id]) / 2, Fraction(0))
        top = eval_T(graph, edge.id, peak)
        x = edge.length * Fraction(data.draw(st.integers(1, 31)), 32)
        assert 0 < eval_T(graph, edge.id, x) <= top


@given(graphs, values, st.data())
@settings(deadline=None)
def test_Y_reproduces_the_central_value(graph, centre, data):
    total = Fraction(0)
    for edge in graph.edges:
        slots = data.draw(st.lists(st.integers(1, 7), unique=True, max_size=4))
        inner = [edge.length * Fraction(j, 8) for j in sorted(slots)]
        h = PiecewiseLinearFn(
            breakpoints=(Fraction(0), *inner, edge.length),
            values=(centre, *(data.draw(values) for _ in inner), Fraction(0)),
        )
        Y_slope = (eval_Y(graph, edge.id, edge.length) - eval_Y(graph, edge.id, Fraction(0))) / edge.length
        total += sum(
            (s * Y_slope * (x1 - x0) for s, x0, x1 in zip(h.slopes, h.breakpoints, h.breakpoints[1:])),
            Fraction(0),
        )
    assert total == centre
