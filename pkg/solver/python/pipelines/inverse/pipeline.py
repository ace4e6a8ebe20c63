import logging
from dataclasses import dataclass
from fractions import Fraction

from ...exceptions import ValidationFailed
from ...models.measure import GraphMeasure
from ...models.spectral import SpectralData, WeylFunction
from .continued_fraction import stieltjes_cf_reconstruct
from .regularity import UniquenessProfile, uniqueness_profile
from .residues import central_mass, residues_eta
from .validate import validate_spectral_data
from .weyl import check_reconstruction, edge_weyl_functions


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InverseResult:
    data: SpectralData
    eta: dict[Fraction, Fraction]
    weyl: dict[str, WeylFunction]
    uniqueness: UniquenessProfile
    measure: GraphMeasure


def pipeline(data: SpectralData) -> InverseResult:
    """
    Note: raises ValidationFailed before any reconstruction when the data violate a hypothesis
    """
    violations = validate_spectral_data(data)
    if violations:
        raise ValidationFailed(violations)

    eta = residues_eta(data)
    central = central_mass(data)
    weyl = edge_weyl_functions(data, eta)
    check_reconstruction(data, weyl, central)
    logger.info("Central mass %s, %d norming constants", central, len(eta))

    edge_measures = {eid: stieltjes_cf_reconstruct(weyl[eid], data.graph.length(eid)) for eid in data.graph.edge_ids}
    measure = GraphMeasure(graph=data.graph, central_mass=central, edge_measures=edge_measures)
    logger.info("Reconstructed %d masses", measure.mass_count)
    return InverseResult(data=data, eta=eta, weyl=weyl, uniqueness=uniqueness_profile(data), measure=measure)


def solve(data: SpectralData) -> GraphMeasure:
    """
    The unique Stieltjes string on the graph with the given spectral data.
    """
    return pipeline(data).measure
