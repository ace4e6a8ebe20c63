import logging
from fractions import Fraction

from ...exceptions import DomainError
from ...models.characteristic import GraphCharacteristic
from ...models.measure import GraphMeasure
from ...models.spectral import CouplingMatrix
from .exceptions import CouplingAssertionError
from .transfer import dot_P, edge_eigenfunction
from .wronskian import wronskian


logger = logging.getLogger(__name__)


def coupling_weights(characteristic: GraphCharacteristic, lam: Fraction) -> dict[str, Fraction]:
    """
    a_e = |phi_e(lam, .)|^2 / Pdot_e(lam)^2 over the edges sharing lam; the coupling entries are a_e / a_d.
    """
    members = characteristic.shared_sets.get(lam, ())
    if not members:
        raise DomainError(f"Eigenvalue {lam} is not shared by any edge", code="no_shared_edges")
    weights = {}
    for eid in members:
        ec = characteristic.edges[eid]
        weights[eid] = edge_eigenfunction(ec, lam).h1_norm_sq / dot_P(ec, lam) ** 2
    return weights


def coupling_matrix(characteristic: GraphCharacteristic, lam: Fraction) -> CouplingMatrix:
    matrix = CouplingMatrix.from_weights(coupling_weights(characteristic, lam))
    issues = matrix.violations()
    if issues or matrix.identity_sum() != 1:
        raise CouplingAssertionError(
            {"detail": f"Coupling matrix at {lam} is not of class R", "violations": [v.as_dict() for v in issues]}
        )
    return matrix


def coupling_matrices(
    measure: GraphMeasure, characteristic: GraphCharacteristic | None = None
) -> dict[Fraction, CouplingMatrix]:
    characteristic = characteristic or wronskian(measure)
    matrices = {
        lam: coupling_matrix(characteristic, lam) for lam, members in characteristic.shared_sets.items() if members
    }
    logger.info("Computed %d coupling matrices", len(matrices))
    return matrices
