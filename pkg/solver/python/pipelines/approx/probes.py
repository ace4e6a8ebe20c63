"""
Fixed panel of test functions for the weak* diagnostics.

Per edge, hats centred at the configured fractions of the edge length with the configured half-width,
plus the cap Y/L that equals 1 at the centre and vanishes at every outer vertex. Every probe is
integrated against T times the measure.
"""

from fractions import Fraction

from ... import config
from ...common.kernels import eval_T, eval_Y
from ...models.graph import StarGraph
from ...models.measure import GraphFunction, GraphMeasure, integrate


def hat(graph: StarGraph, edge: str, centre: Fraction, half_width: Fraction) -> GraphFunction:
    length = graph.length(edge)

    def f(eid: str, x: Fraction) -> Fraction:
        if eid != edge:
            return Fraction(0)
        return max(Fraction(0), 1 - abs(x - centre * length) / (half_width * length))

    return f


def cap(graph: StarGraph) -> GraphFunction:
    def f(eid: str, x: Fraction) -> Fraction:
        return eval_Y(graph, eid, x) / graph.harmonic_length

    return f


def probe_panel(graph: StarGraph) -> dict[str, GraphFunction]:
    panel: dict[str, GraphFunction] = {}
    for eid in graph.edge_ids:
        for centre in config.probe_hat_centres:
            panel[f"probe_{eid}_{centre}"] = hat(graph, eid, centre, config.probe_hat_half_width)
    panel["probe_cap"] = cap(graph)
    return panel


def probe_integrals(measure: GraphMeasure, panel: dict[str, GraphFunction]) -> dict[str, Fraction]:
    graph = measure.graph
    return {
        name: integrate(measure, lambda eid, x, f=f: f(eid, x) * eval_T(graph, eid, x)) for name, f in panel.items()
    }
