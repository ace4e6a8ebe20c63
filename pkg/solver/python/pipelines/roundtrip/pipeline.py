import logging
from dataclasses import dataclass
from fractions import Fraction

import pandas as pd

from ... import config
from ...common.codec import spectral_from_document, spectral_to_document
from ...common.deviation import format_short, max_deviation, measure_deviation
from ...common.parallel import map_cases
from ...exceptions import RoundTripMismatch
from ...models.measure import GraphMeasure
from ..forward.pipeline import export_spectral_data
from ..inverse.pipeline import solve
from .random_measure import PRNG_NAME, random_measure


logger = logging.getLogger(__name__)

REPORT_COLUMNS = [
    "seed",
    "edges",
    "masses",
    "central_mass",
    "exact",
    "central_mass_deviation",
    "lengths_deviation",
    "positions_deviation",
    "weights_deviation",
    "serialized_deviation",
    "passed",
]


@dataclass(frozen=True)
class RoundTripResult:
    measure: GraphMeasure
    reconstructed: GraphMeasure
    exact: bool
    deviation: dict[str, Fraction | None]
    serialized_deviation: Fraction | None

    @property
    def passed(self) -> bool:
        return self.serialized_deviation is not None and self.serialized_deviation <= config.roundtrip_rel_tol


@dataclass(frozen=True)
class RoundTripReport:
    frame: pd.DataFrame
    header: str

    @property
    def passed(self) -> bool:
        return bool(self.frame["passed"].all()) if len(self.frame) else True


def roundtrip(measure: GraphMeasure, digits: int | None = None) -> RoundTripResult:
    """
    Maps the measure to its spectral data and back, once in memory and once through the decimal document form.

    Note: rational spectra must give back the measure exactly, all others within the round-trip tolerance
    """
    data = export_spectral_data(measure)
    reconstructed = solve(data)
    deviation = measure_deviation(measure, reconstructed)

    if data.exact and reconstructed != measure:
        raise RoundTripMismatch(
            {
                "detail": "Rational spectral data did not reproduce the measure exactly",
                "deviation": {k: format_short(v) for k, v in deviation.items()},
            }
        )

    serialized = solve(spectral_from_document(spectral_to_document(data, digits)))
    serialized_deviation = max_deviation(measure_deviation(measure, serialized))
    result = RoundTripResult(measure, reconstructed, data.exact, deviation, serialized_deviation)
    if not result.passed:
        raise RoundTripMismatch(
            {
                "detail": f"Serialized round-trip deviates by {format_short(serialized_deviation)}",
                "tolerance": str(config.roundtrip_rel_tol),
            }
        )
    logger.info(
        "Round-trip of %d masses, exact=%s, deviation %s",
        measure.mass_count,
        data.exact,
        format_short(serialized_deviation),
    )
    return result


def _row(result: RoundTripResult) -> dict:
    return {
        "central_mass": result.measure.central_mass,
        "edges": len(result.measure.graph.edges),
        "masses": result.measure.mass_count,
        "exact": result.exact,
        "central_mass_deviation": result.deviation["central_mass"],
        "lengths_deviation": result.deviation["lengths"],
        "positions_deviation": result.deviation["positions"],
        "weights_deviation": result.deviation["weights"],
        "serialized_deviation": result.serialized_deviation,
        "passed": result.passed,
    }


def _seed_case(case: tuple[int, int | None]) -> dict:
    seed, digits = case
    return {"seed": seed, **_row(roundtrip(random_measure(seed), digits))}


def roundtrip_suite(seeds: list[int], digits: int | None = None, jobs: int | None = None) -> RoundTripReport:
    """
    Round-trip of the seeded random measures; the header names the generator for reproducibility.
    """
    rows = map_cases(_seed_case, [(seed, digits) for seed in seeds], jobs)
    header = f"prng={PRNG_NAME} seeds={len(seeds)}"
    logger.info("Round-trip suite over %d seeds passed", len(rows))
    return RoundTripReport(pd.DataFrame(rows, columns=REPORT_COLUMNS), header)


def measure_report(result: RoundTripResult) -> RoundTripReport:
    return RoundTripReport(pd.DataFrame([{"seed": None, **_row(result)}], columns=REPORT_COLUMNS), "measure")
