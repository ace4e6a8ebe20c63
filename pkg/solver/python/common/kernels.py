from fractions import Fraction

from ..exceptions import DomainError
from ..models.graph import StarGraph
from ..models.measure import GraphMeasure, integrate


def _check_position(graph: StarGraph, edge: str, x: Fraction) -> Fraction:
    length = graph.length(edge)
    if not 0 <= x <= length:
        raise DomainError(f"Position {x} outside [0, {length}] on edge {edge}")
    return length


def eval_Y(graph: StarGraph, edge: str, x: Fraction) -> Fraction:
    """
    Y_e(x) = L (1 - x/l_e); equals L at the central vertex and vanishes at the outer vertex.
    """
    length = _check_position(graph, edge, x)
    return graph.harmonic_length * (1 - x / length)


def eval_T(graph: StarGraph, edge: str, x: Fraction) -> Fraction:
    """
    T_e(x) = L (1 + x/L_e)(1 - x/l_e), the diagonal of the Green's function.
    """
    length = _check_position(graph, edge, x)
    return graph.harmonic_length * (1 + x / graph.coharmonic_length(edge)) * (1 - x / length)


def growth_integral(measure: GraphMeasure) -> Fraction:
    return integrate(measure, lambda edge, x: eval_Y(measure.graph, edge, x))


def trace_integral(measure: GraphMeasure) -> Fraction:
    return integrate(measure, lambda edge, x: eval_T(measure.graph, edge, x))


def edge_trace_integral(measure: GraphMeasure, edge: str) -> Fraction:
    length = measure.graph.length(edge)
    return sum((m.weight * m.position * (1 - m.position / length) for m in measure.on(edge)), Fraction(0))
