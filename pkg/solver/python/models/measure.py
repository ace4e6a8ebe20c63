from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction

from ..exceptions import DomainError
from .graph import StarGraph


@dataclass(frozen=True, order=True)
class PointMass:
    position: Fraction
    weight: Fraction


@dataclass(frozen=True)
class EdgeMeasure:
    """
    Finitely many point masses on one edge, ordered by strictly increasing position.
    """

    masses: tuple[PointMass, ...] = ()

    def __post_init__(self) -> None:
        for prev, curr in zip(self.masses, self.masses[1:]):
            if not curr.position > prev.position:
                raise DomainError(
                    f"Mass positions must be strictly increasing, got {prev.position} then {curr.position}",
                    code="invalid_measure",
                )
        for mass in self.masses:
            if not mass.weight > 0:
                raise DomainError(f"Mass weight must be positive, got {mass.weight}", code="invalid_measure")

    def __len__(self) -> int:
        return len(self.masses)

    def __iter__(self) -> Iterator[PointMass]:
        return iter(self.masses)

    @property
    def positions(self) -> tuple[Fraction, ...]:
        return tuple(m.position for m in self.masses)

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(m.weight for m in self.masses)


# A pointwise function on the graph: f(edge, x) with x measured from the centre.
# At x = 0 the value must not depend on the edge.
GraphFunction = Callable[[str, Fraction], Fraction]


@dataclass(frozen=True)
class GraphMeasure:
    """
    Stieltjes-string weight on a star graph: a central mass plus a finite EdgeMeasure per edge.
    """

    graph: StarGraph
    central_mass: Fraction = Fraction(0)
    edge_measures: dict[str, EdgeMeasure] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.central_mass < 0:
            raise DomainError(f"Central mass must be non-negative, got {self.central_mass}", code="invalid_measure")
        unknown = set(self.edge_measures) - set(self.graph.edge_ids)
        if unknown:
            raise DomainError(f"Measure refers to unknown edges {sorted(unknown)}", code="invalid_measure")
        # Every edge gets an entry, in graph order, so that equality is structural
        normalized = {eid: self.edge_measures.get(eid, EdgeMeasure()) for eid in self.graph.edge_ids}
        object.__setattr__(self, "edge_measures", normalized)
        for eid, edge_measure in normalized.items():
            length = self.graph.length(eid)
            for mass in edge_measure:
                if not 0 < mass.position < length:
                    raise DomainError(
                        f"Mass position {mass.position} on edge {eid} outside the open interval (0, {length})",
                        code="invalid_measure",
                    )

    def on(self, edge: str) -> EdgeMeasure:
        return self.edge_measures[edge]

    @property
    def mass_count(self) -> int:
        return sum(len(em) for em in self.edge_measures.values())

    @property
    def is_empty(self) -> bool:
        return self.central_mass == 0 and self.mass_count == 0


def integrate(measure: GraphMeasure, f: GraphFunction) -> Fraction:
    """
    Exact integral of f against the measure: f at the centre times the central mass plus the weighted
    values of f at every point mass.
    """
    first_edge = measure.graph.edge_ids[0]
    total = Fraction(0)
    if measure.central_mass:
        total += f(first_edge, Fraction(0)) * measure.central_mass
    for eid, edge_measure in measure.edge_measures.items():
        for mass in edge_measure:
            total += f(eid, mass.position) * mass.weight
    return total
