import logging
from dataclasses import dataclass
from fractions import Fraction

import pandas as pd

from ... import config
from ...common.deviation import format_short, max_deviation, measure_deviation, relative_deviation
from ...common.kernels import trace_integral
from ...common.parallel import map_cases
from ...exceptions import DomainError
from ...models.measure import GraphMeasure
from ...models.spectral import SpectralData
from ..forward.pipeline import export_spectral_data
from ..inverse.pipeline import solve
from .exceptions import StabilizationFailed, TruncatedTraceMismatch
from .probes import probe_integrals, probe_panel
from .truncate import truncate


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ApproximationReport:
    frame: pd.DataFrame
    measures: dict[Fraction, GraphMeasure]


def partial_trace(data: SpectralData, cutoff: Fraction) -> Fraction:
    """
    Sum of kappa / lambda over the eigenvalues below the cutoff.
    """
    return sum((Fraction(data.kappa(lam)) / lam for lam in data.sigma if lam < cutoff), Fraction(0))


def _agrees(a: Fraction | None, b: Fraction, exact: bool) -> bool:
    if exact:
        return a == b
    return a is not None and relative_deviation(a, b) <= config.roundtrip_rel_tol


def _reconstruct(case: tuple[SpectralData, Fraction]) -> GraphMeasure:
    data, cutoff = case
    return solve(truncate(data, cutoff))


def approximation_sequence(
    measure: GraphMeasure, cutoffs: list[Fraction], jobs: int | None = None
) -> ApproximationReport:
    """
    Reconstructs the measure from its spectral data cut off at every cutoff and reports the trace, the
    partial eigenvalue sum, the probe integrals and the mass counts.

    Note: the trace must equal the partial sum, and a cutoff above every eigenvalue must give back the measure
    """
    cutoffs = [Fraction(c) for c in cutoffs]
    if any(b <= a for a, b in zip(cutoffs, cutoffs[1:])):
        raise DomainError(
            f"Cutoffs must be strictly increasing, got {[str(c) for c in cutoffs]}", code="invalid_cutoff"
        )

    data = export_spectral_data(measure)
    reconstructions = map_cases(_reconstruct, [(data, cutoff) for cutoff in cutoffs], jobs)
    panel = probe_panel(measure.graph)
    largest = max(data.all_values, default=Fraction(0))

    rows = []
    for cutoff, approximation in zip(cutoffs, reconstructions):
        trace = trace_integral(approximation)
        partial = partial_trace(data, cutoff)
        if not _agrees(trace, partial, data.exact):
            raise TruncatedTraceMismatch(
                f"Cutoff {format_short(cutoff)}: trace {format_short(trace)}, partial sum {format_short(partial)}"
            )

        if cutoff > largest:
            deviation = max_deviation(measure_deviation(measure, approximation))
            if data.exact:
                stable = approximation == measure
            else:
                stable = deviation is not None and deviation <= config.roundtrip_rel_tol
            if not stable:
                raise StabilizationFailed(
                    f"Cutoff {format_short(cutoff)} above every eigenvalue, deviation {format_short(deviation)}"
                )

        row = {"cutoff": cutoff, "trace": trace, "partial_sum": partial, "central_mass": approximation.central_mass}
        row.update(probe_integrals(approximation, panel))
        row.update({f"masses_{eid}": len(approximation.on(eid)) for eid in measure.graph.edge_ids})
        rows.append(row)
        logger.info(
            "Cutoff %s: %d masses, trace %s", format_short(cutoff), approximation.mass_count, format_short(trace)
        )

    return ApproximationReport(pd.DataFrame(rows), dict(zip(cutoffs, reconstructions)))
