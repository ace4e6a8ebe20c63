import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ...common.poly import derivative, evaluate
from ...exceptions import DomainError
from ...models.graph import StarGraph
from ...models.spectral import SpectralData
from .residues import residues_eta, spectral_polys


logger = logging.getLogger(__name__)


def _terms(data: SpectralData, edge: str) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
    """
    (mu, eta_mu, Pdot_e(mu), column sum of the coupling matrix or 1) for every mu in the edge spectrum.
    """
    if edge not in data.sigma_e:
        raise DomainError(f"Unknown edge {edge!r}", code="unknown_edge")
    _, edge_polys = spectral_polys(data)
    dP = derivative(edge_polys[edge])
    eta = residues_eta(data)
    return [
        (mu, eta[mu], evaluate(dP, mu), data.coupling[mu].column_sum(edge) if mu in data.sigma else Fraction(1))
        for mu in data.sigma_e[edge]
    ]


def regularity_sum(data: SpectralData, edge: str) -> Fraction:
    """
    Sum over the edge spectrum of eta_mu / (mu^2 Pdot_e(mu)^2), each term scaled by the coupling column sum
    when mu is also a graph eigenvalue. Finite for finite data; an empty edge gives 0.
    """
    return sum((eta * share / (mu * mu * dp * dp) for mu, eta, dp, share in _terms(data, edge)), Fraction(0))


class RegularityReport(NamedTuple):
    edge: str
    regularity_sum: Fraction
    norm_sum: Fraction | None
    bound_lhs: Fraction | None
    bound_rhs: Fraction


def regularity_profile(
    data: SpectralData, edge: str, h1_norms: dict[Fraction, Fraction] | None = None
) -> RegularityReport:
    """
    Next to the regularity sum, reports sum of 1/(mu h1_mu) over the eigenfunction norms of the
    reconstructed edge (equal to the regularity sum) and the bound
    sum h1_mu / (mu^3 Pdot_e(mu)^2) <= sum 1 / (mu^2 eta_mu).
    """
    terms = _terms(data, edge)
    norm_sum = bound_lhs = None
    if h1_norms is not None:
        norm_sum = sum((1 / (mu * h1_norms[mu]) for mu, *_ in terms), Fraction(0))
        bound_lhs = sum((h1_norms[mu] / (mu**3 * dp * dp) for mu, _, dp, _ in terms), Fraction(0))
    bound_rhs = sum((1 / (mu * mu * eta) for mu, eta, *_ in terms), Fraction(0))
    return RegularityReport(edge, regularity_sum(data, edge), norm_sum, bound_lhs, bound_rhs)


@dataclass(frozen=True)
class UniquenessProfile:
    """
    Which parts of the measure the spectra alone determine. The central mass always is; an edge is when
    none of its eigenvalues is a graph eigenvalue; the whole measure is when no coupling matrix is needed.
    """

    graph: StarGraph
    edges: dict[str, bool]
    central_mass: bool = True

    @property
    def measure(self) -> bool:
        return all(self.edges.values())


def uniqueness_profile(data: SpectralData) -> UniquenessProfile:
    sigma = set(data.sigma)
    return UniquenessProfile(
        graph=data.graph,
        edges={eid: not (sigma & set(values)) for eid, values in data.sigma_e.items()},
    )


def perturb_coupling(data: SpectralData, lam: Fraction, edge: str, factor: Fraction) -> SpectralData:
    """
    Same spectra, with the coupling ratios towards `edge` at `lam` multiplied by factor.
    """
    if lam not in data.coupling:
        raise DomainError(f"No coupling matrix at {lam}", code="no_shared_edges")
    coupling = dict(data.coupling)
    coupling[lam] = coupling[lam].scaled(edge, Fraction(factor))
    logger.debug("Perturbed coupling at %s towards %s by %s", lam, edge, factor)
    return SpectralData(data.graph, data.sigma, data.sigma_e, coupling, exact=data.exact)
