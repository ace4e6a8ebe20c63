from fractions import Fraction

from ..models.measure import GraphMeasure


def relative_deviation(a: Fraction, b: Fraction) -> Fraction:
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale else Fraction(0)


def measure_deviation(reference: GraphMeasure, other: GraphMeasure) -> dict[str, Fraction | None]:
    """
    Largest relative deviation per field, with edges paired by identifier.

    Edge lengths enter as a field of their own, so that a graph whose lengths went through decimal
    rounding is still comparable. Lengths, positions and weights are None when the edge identifiers
    differ or some edge carries a different number of masses.
    """
    deviation = {"central_mass": relative_deviation(reference.central_mass, other.central_mass)}
    edge_ids = reference.graph.edge_ids
    if sorted(edge_ids) != sorted(other.graph.edge_ids) or any(
        len(reference.on(eid)) != len(other.on(eid)) for eid in edge_ids
    ):
        return {**deviation, "lengths": None, "positions": None, "weights": None}

    lengths, positions, weights = Fraction(0), Fraction(0), Fraction(0)
    for eid in edge_ids:
        lengths = max(lengths, relative_deviation(reference.graph.length(eid), other.graph.length(eid)))
        for a, b in zip(reference.on(eid), other.on(eid)):
            positions = max(positions, relative_deviation(a.position, b.position))
            weights = max(weights, relative_deviation(a.weight, b.weight))
    return {**deviation, "lengths": lengths, "positions": positions, "weights": weights}


def max_deviation(deviation: dict[str, Fraction | None]) -> Fraction | None:
    if any(value is None for value in deviation.values()):
        return None
    return max(deviation.values(), default=Fraction(0))


def format_short(value: Fraction | None) -> str:
    """
    Short decimal rendering for messages. Exact values can carry numerators too long for str().
    """
    return "unpaired" if value is None else f"{float(value):.3e}"
