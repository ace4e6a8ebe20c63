import logging
from dataclasses import dataclass
from fractions import Fraction

from ...common.deviation import format_short
from ...common.polyrat import RatFun
from ...exceptions import InvariantViolation
from ...models.characteristic import GraphCharacteristic
from ...models.measure import GraphMeasure
from ...models.spectral import CouplingMatrix, SpectralData
from .coupling import coupling_matrices
from .invariants import Verdict, invariant_verdicts
from .traces import TraceCheck, trace_checks
from .wronskian import greens_function, wronskian


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ForwardResult:
    measure: GraphMeasure
    characteristic: GraphCharacteristic
    greens: RatFun
    coupling: dict[Fraction, CouplingMatrix]
    traces: list[TraceCheck]
    verdicts: list[Verdict]
    spectral_data: SpectralData


def _bundle(
    measure: GraphMeasure, characteristic: GraphCharacteristic, coupling: dict[Fraction, CouplingMatrix]
) -> SpectralData:
    return SpectralData(
        graph=measure.graph,
        sigma=characteristic.eigenvalues,
        sigma_e=characteristic.edge_spectra,
        coupling=coupling,
        exact=characteristic.exact,
    )


def export_spectral_data(measure: GraphMeasure, rel_tol: Fraction | None = None) -> SpectralData:
    """
    Spectrum of the graph, spectra of the edges and the coupling matrices of the shared eigenvalues.
    Irrational eigenvalues are refined to rel_tol, which defaults to a width scaled with the degree.
    """
    characteristic = wronskian(measure, rel_tol)
    return _bundle(measure, characteristic, coupling_matrices(measure, characteristic))


def pipeline(measure: GraphMeasure) -> ForwardResult:
    """
    Full forward solution with trace identities and invariant verdicts.

    Note: any failed verdict raises, the identities hold for every admissible measure
    """
    logger.info("Forward pipeline on %d edges with %d masses", len(measure.graph.edges), measure.mass_count)
    characteristic = wronskian(measure)
    G = greens_function(measure, characteristic)
    coupling = coupling_matrices(measure, characteristic)
    traces = trace_checks(measure, characteristic)
    verdicts = invariant_verdicts(measure, characteristic, G, coupling)

    failed = [v for v in verdicts if not v.passed]
    if failed:
        raise InvariantViolation(
            {
                "detail": f"{len(failed)} forward identities fail",
                "checks": [
                    {"check": v.check, "scope": v.scope, "deviation": format_short(v.deviation)} for v in failed
                ],
            }
        )

    return ForwardResult(
        measure=measure,
        characteristic=characteristic,
        greens=G,
        coupling=coupling,
        traces=traces,
        verdicts=verdicts,
        spectral_data=_bundle(measure, characteristic, coupling),
    )
