import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ...models.measure import EdgeMeasure, GraphMeasure


logger = logging.getLogger(__name__)

CENTRE = "c"


@dataclass(frozen=True)
class AssembledSystem:
    """
    Stiffness and mass matrices of the piecewise-linear weak form, over the nodes (edge, position).

    The outer vertices carry Dirichlet conditions and are eliminated. The centre node, when present,
    is the first one and is labelled (CENTRE, 0).
    """

    K: np.ndarray
    M: np.ndarray
    nodes: tuple[tuple[str, Fraction], ...]

    @property
    def rank(self) -> int:
        return int(np.count_nonzero(np.diag(self.M)))


def _add_segment(K: np.ndarray, i: int | None, j: int | None, length: Fraction) -> None:
    """
    Adds the energy (u_j - u_i)^2 / length; None stands for a Dirichlet end.
    """
    k = float(1 / length)
    for a in (i, j):
        if a is not None:
            K[a, a] += k
    if i is not None and j is not None:
        K[i, j] -= k
        K[j, i] -= k


def _chain(K: np.ndarray, start: int | None, first: int, masses: EdgeMeasure, length: Fraction) -> None:
    left, x = start, Fraction(0)
    for offset, mass in enumerate(masses):
        _add_segment(K, left, first + offset, mass.position - x)
        left, x = first + offset, mass.position
    _add_segment(K, left, None, length - x)


def assemble(measure: GraphMeasure) -> AssembledSystem:
    """
    Nodes are the centre and every point mass; each edge is a chain Laplacian joined at the centre.
    """
    graph = measure.graph
    nodes = [(CENTRE, Fraction(0))]
    for eid in graph.edge_ids:
        nodes.extend((eid, position) for position in measure.on(eid).positions)

    K = np.zeros((len(nodes), len(nodes)))
    M = np.zeros((len(nodes), len(nodes)))
    M[0, 0] = float(measure.central_mass)
    first = 1
    for eid in graph.edge_ids:
        masses = measure.on(eid)
        _chain(K, 0, first, masses, graph.length(eid))
        for offset, weight in enumerate(masses.weights):
            M[first + offset, first + offset] = float(weight)
        first += len(masses)
    logger.debug("Assembled a %dx%d system", len(nodes), len(nodes))
    return AssembledSystem(K, M, tuple(nodes))


def assemble_edge(edge: str, length: Fraction, masses: EdgeMeasure) -> AssembledSystem:
    """
    One edge with Dirichlet conditions at both ends: the centre is clamped.
    """
    K = np.zeros((len(masses), len(masses)))
    _chain(K, None, 0, masses, length)
    M = np.diag([float(w) for w in masses.weights]) if len(masses) else np.zeros((0, 0))
    return AssembledSystem(K, M, tuple((edge, position) for position in masses.positions))
