from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

from ..exceptions import DomainError


class Edge(NamedTuple):
    id: str
    length: Fraction


@dataclass(frozen=True)
class StarGraph:
    """
    Star graph: finitely many intervals joined at a central vertex, Dirichlet conditions at the outer vertices.

    Positions on an edge are measured from the central vertex, so x = 0 is the centre and x = length
    is the outer vertex of that edge.
    """

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if len(self.edges) < 2:
            raise DomainError("A star graph needs at least 2 edges", code="invalid_graph")
        ids = [edge.id for edge in self.edges]
        if len(set(ids)) != len(ids):
            raise DomainError(f"Edge identifiers must be unique, got {ids}", code="invalid_graph")
        for edge in self.edges:
            if not edge.length > 0:
                raise DomainError(f"Edge {edge.id} has non-positive length {edge.length}", code="invalid_graph")

    @classmethod
    def from_lengths(cls, lengths: dict[str, Fraction | int | str]) -> "StarGraph":
        return cls(tuple(Edge(str(eid), Fraction(length)) for eid, length in lengths.items()))

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(edge.id for edge in self.edges)

    @cached_property
    def lengths(self) -> dict[str, Fraction]:
        return {edge.id: edge.length for edge in self.edges}

    def length(self, edge: str) -> Fraction:
        try:
            return self.lengths[edge]
        except KeyError as err:
            raise DomainError(f"Unknown edge {edge!r}", code="unknown_edge") from err

    @cached_property
    def harmonic_length(self) -> Fraction:
        return 1 / sum(1 / edge.length for edge in self.edges)

    def coharmonic_length(self, edge: str) -> Fraction:
        return 1 / (1 / self.harmonic_length - 1 / self.length(edge))


def harmonic_lengths(graph: StarGraph) -> tuple[Fraction, dict[str, Fraction]]:
    """
    Harmonic length L with 1/L = sum of 1/l_e, and the co-harmonic lengths L_e with 1/L_e = 1/L - 1/l_e.
    """
    return graph.harmonic_length, {eid: graph.coharmonic_length(eid) for eid in graph.edge_ids}
