import logging
from fractions import Fraction

from ...common.poly import poly
from ...common.polyrat import RatFun, poly_from_roots
from ...models.spectral import SpectralData, WeylFunction
from .exceptions import ReconstructionMismatch
from .residues import minus_inverse_green, residues_eta


logger = logging.getLogger(__name__)


def edge_residues(data: SpectralData, eta: dict[Fraction, Fraction]) -> dict[str, dict[Fraction, Fraction]]:
    """
    Splits -1/eta_mu over the edges sharing mu in proportion to the coupling matrix.
    """
    residues = {}
    for eid, values in data.sigma_e.items():
        residues[eid] = {}
        for mu in values:
            share = data.coupling[mu].column_sum(eid) if mu in data.sigma else 1
            residues[eid][mu] = -1 / eta[mu] / share
    return residues


def weyl_function(edge: str, length: Fraction, residues: dict[Fraction, Fraction]) -> WeylFunction:
    """
    m = -1/l + sum of rho (1/(z - mu) + 1/mu), as Q / P with P(0) = 1.
    """
    P = poly_from_roots((mu, 1) for mu in residues)
    Q = poly([-1 / length]) * P
    for mu, rho in residues.items():
        pole = poly([-mu, 1])
        Q = Q + poly([rho]) * (P.exquo(pole) + P * poly([1 / mu]))
    return WeylFunction(edge=edge, length=length, residues=residues, numerator=Q, denominator=P)


def edge_weyl_functions(data: SpectralData, eta: dict[Fraction, Fraction] | None = None) -> dict[str, WeylFunction]:
    eta = residues_eta(data) if eta is None else eta
    residues = edge_residues(data, eta)
    for mu, value in eta.items():
        shared = sum((residues[eid][mu] for eid in data.shared_edges(mu)), Fraction(0))
        if shared != -1 / value:
            raise ReconstructionMismatch(f"Edge residues at {mu} sum to {shared} instead of {-1 / value}")
    weyl = {eid: weyl_function(eid, data.graph.length(eid), residues[eid]) for eid in data.graph.edge_ids}
    logger.info("Assembled Weyl functions on %d edges", len(weyl))
    return weyl


def check_reconstruction(data: SpectralData, weyl: dict[str, WeylFunction], central: Fraction) -> None:
    """
    central z + sum of m_e must equal -V / (L prod P_e) as rational functions.
    """
    total = RatFun.from_poly(poly([0, central]))
    for function in weyl.values():
        total = total + RatFun.from_polys(function.numerator, function.denominator)
    expected = minus_inverse_green(data)
    if total != expected:
        raise ReconstructionMismatch(
            f"Reconstruction gives {total.numerator.as_expr()} / {total.denominator.as_expr()}, "
            f"expected {expected.numerator.as_expr()} / {expected.denominator.as_expr()}"
        )
    logger.debug("Reconstruction identity holds")

