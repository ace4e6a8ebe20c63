import logging
from fractions import Fraction

from sympy import Poly

from ...common.poly import degree, leading_coefficient, poly, product
from ...common.polyrat import RatFun, poly_from_roots
from ...exceptions import ValidationFailed, Violation
from ...models.spectral import SpectralData


logger = logging.getLogger(__name__)


def spectral_polys(data: SpectralData) -> tuple[Poly, dict[str, Poly]]:
    """
    V = prod (1 - z/lambda)^kappa over the graph spectrum and P_e = prod (1 - z/mu) over each edge spectrum.
    """
    V = poly_from_roots((lam, data.kappa(lam)) for lam in data.sigma)
    edge_polys = {eid: poly_from_roots((mu, 1) for mu in values) for eid, values in data.sigma_e.items()}
    return V, edge_polys


def minus_inverse_green(data: SpectralData) -> RatFun:
    """
    -V / (L prod P_e), the negative reciprocal of the Green's function at the centre.
    """
    V, edge_polys = spectral_polys(data)
    L = data.graph.harmonic_length
    return RatFun.from_polys(-V, poly([L]) * product(list(edge_polys.values())))


def residues_eta(data: SpectralData) -> dict[Fraction, Fraction]:
    """
    Norming constants: -1/eta_mu is the residue of -V / (L prod P_e) at every edge eigenvalue mu.
    """
    f = minus_inverse_green(data)
    eta = {}
    for mu in data.edge_values:
        residue = f.residue(mu)
        if not residue < 0:
            raise ValidationFailed(
                [Violation("non_positive_eta", "negative residues", f"residue {residue} at {mu}")]
            )
        eta[mu] = -1 / residue
    logger.debug("Computed %d norming constants", len(eta))
    return eta


def central_mass(data: SpectralData) -> Fraction:
    """
    Reads the central mass off the degrees: it is non-zero only when deg V = deg prod P_e + 1, and then
    equals -(1/L) lc(V) / lc(prod P_e).
    """
    V, edge_polys = spectral_polys(data)
    edge_product = product(list(edge_polys.values()))
    excess = (degree(V) or 0) - (degree(edge_product) or 0)
    if excess > 1:
        raise ValidationFailed(
            [Violation("degree_excess", "Herglotz-Nevanlinna product", f"deg V exceeds deg prod P_e by {excess}")]
        )
    if excess < 1:
        return Fraction(0)
    mass = -leading_coefficient(V) / (data.graph.harmonic_length * leading_coefficient(edge_product))
    if mass < 0:
        raise ValidationFailed([Violation("negative_central_mass", "non-negative central mass", f"got {mass}")])
    return mass
