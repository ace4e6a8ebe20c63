from fractions import Fraction

import numpy as np

from ... import config
from ...models.graph import StarGraph
from ...models.measure import EdgeMeasure, GraphMeasure, PointMass


PRNG_NAME = "numpy.random.PCG64"


def _fraction(rng: np.random.Generator, numerators: list[int], denominators: list[int]) -> Fraction:
    num = int(rng.integers(numerators[0], numerators[1], endpoint=True))
    den = int(rng.integers(denominators[0], denominators[1], endpoint=True))
    return Fraction(num, den)


def random_measure(seed: int, max_edges: int | None = None, max_masses: int | None = None) -> GraphMeasure:
    """
    Seeded random Stieltjes string with rational data.

    Mass positions sit on the grid l_e * j / (2 * (max_masses + 1)), drawn without replacement, so they are
    distinct and strictly inside the edge.
    """
    settings = config.random_measure
    max_edges = settings["max_edges"] if max_edges is None else max_edges
    max_masses = settings["max_masses"] if max_masses is None else max_masses
    rng = np.random.Generator(np.random.PCG64(seed))

    n_edges = int(rng.integers(2, max_edges, endpoint=True))
    graph = StarGraph.from_lengths(
        {
            f"e{i + 1}": _fraction(rng, settings["length_numerators"], settings["length_denominators"])
            for i in range(n_edges)
        }
    )

    grid = 2 * (max_masses + 1)
    edge_measures = {}
    for edge in graph.edges:
        n_masses = int(rng.integers(0, max_masses, endpoint=True))
        slots = sorted(int(j) for j in rng.choice(np.arange(1, grid), size=n_masses, replace=False))
        edge_measures[edge.id] = EdgeMeasure(
            tuple(
                PointMass(
                    edge.length * Fraction(j, grid),
                    _fraction(rng, settings["weight_numerators"], settings["weight_denominators"]),
                )
                for j in slots
            )
        )

    central = Fraction(0)
    if rng.random() < settings["central_mass_probability"]:
        central = _fraction(rng, settings["weight_numerators"], settings["weight_denominators"])
    return GraphMeasure(graph=graph, central_mass=central, edge_measures=edge_measures)


def loaded_measure(seed: int, n_edges: int, n_masses: int) -> GraphMeasure:
    """
    Random string with exactly n_masses masses on each of n_edges unit edges and no central mass.
    """
    settings = config.random_measure
    rng = np.random.Generator(np.random.PCG64(seed))
    graph = StarGraph.from_lengths({f"e{i + 1}": 1 for i in range(n_edges)})
    grid = 2 * (n_masses + 1)
    edge_measures = {}
    for edge in graph.edges:
        slots = sorted(int(j) for j in rng.choice(np.arange(1, grid), size=n_masses, replace=False))
        edge_measures[edge.id] = EdgeMeasure(
            tuple(
                PointMass(
                    Fraction(j, grid), _fraction(rng, settings["weight_numerators"], settings["weight_denominators"])
                )
                for j in slots
            )
        )
    return GraphMeasure(graph=graph, edge_measures=edge_measures)
