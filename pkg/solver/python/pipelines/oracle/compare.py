import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import pandas as pd

from ... import config
from ...models.measure import GraphMeasure
from ..forward.wronskian import wronskian
from .assemble import assemble, assemble_edge
from .eigen import OracleSpectrum, cluster, generalized_eigen
from .exceptions import OracleMismatch


logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["scope", "index", "exact", "oracle", "deviation", "kappa", "oracle_kappa", "rayleigh", "passed"]


@dataclass(frozen=True)
class OracleReport:
    frame: pd.DataFrame
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.frame["passed"].all()) if len(self.frame) else True

    @property
    def max_deviation(self) -> float:
        return float(self.frame["deviation"].max()) if len(self.frame) else 0.0


def _rows(
    scope: str,
    spectrum: list[tuple[Fraction, int]],
    oracle: OracleSpectrum,
    tol: float,
    gap: float | None,
) -> list[dict]:
    expanded = [lam for lam, kappa in spectrum for _ in range(kappa)]
    kappas = {lam: kappa for lam, kappa in spectrum}
    found = oracle.values
    if len(expanded) != found.size:
        return [
            {
                "scope": scope,
                "index": -1,
                "exact": str(len(expanded)),
                "oracle": float(found.size),
                "deviation": float("inf"),
                "kappa": len(expanded),
                "oracle_kappa": int(found.size),
                "rayleigh": float("nan"),
                "passed": False,
            }
        ]

    # multiplicity of the oracle cluster around each exact eigenvalue
    oracle_kappa = {}
    for centre, count in cluster(found, gap):
        nearest = min(kappas, key=lambda lam: abs(float(lam) - centre))
        oracle_kappa[nearest] = oracle_kappa.get(nearest, 0) + count

    rows = []
    for index, (lam, value) in enumerate(zip(expanded, found)):
        exact = float(lam)
        deviation = abs(value - exact) / exact
        rayleigh = abs(oracle.energies[index] - value * oracle.mass_norms[index]) / (value * oracle.mass_norms[index])
        rows.append(
            {
                "scope": scope,
                "index": index,
                "exact": str(lam),
                "oracle": float(value),
                "deviation": float(deviation),
                "kappa": kappas[lam],
                "oracle_kappa": oracle_kappa.get(lam, 0),
                "rayleigh": float(rayleigh),
                "passed": bool(deviation <= tol and rayleigh <= tol and oracle_kappa.get(lam, 0) == kappas[lam]),
            }
        )
    return rows


def compare(
    measure: GraphMeasure, tol: float | None = None, gap: float | None = None, strict: bool = True
) -> OracleReport:
    """
    Matches the eigenvalues of the assembled matrices against the polynomial spectra of the graph and of
    every edge clamped at the centre. With strict, any mismatch raises OracleMismatch.
    """
    tol = config.oracle_rel_tol if tol is None else tol
    characteristic = wronskian(measure)
    rows = _rows("graph", list(characteristic.spectrum), generalized_eigen(assemble(measure)), tol, gap)
    for eid in measure.graph.edge_ids:
        system = assemble_edge(eid, measure.graph.length(eid), measure.on(eid))
        spectrum = [(mu, 1) for mu in characteristic.edge_spectra[eid]]
        rows.extend(_rows(eid, spectrum, generalized_eigen(system), tol, gap))

    report = OracleReport(pd.DataFrame(rows, columns=REPORT_COLUMNS), tol)
    logger.info("Oracle comparison over %d eigenvalues, max deviation %.3e", len(rows), report.max_deviation)
    if strict and not report.passed:
        failed = report.frame[~report.frame["passed"]]
        raise OracleMismatch(
            {
                "detail": f"{len(failed)} eigenvalues disagree beyond {tol}",
                "scopes": sorted(set(failed["scope"])),
            }
        )
    return report


def rank_matches(measure: GraphMeasure) -> bool:
    """
    rank(M) equals the number of eigenvalues counted with multiplicity.
    """
    system = assemble(measure)
    return system.rank == wronskian(measure).eigenvalue_count and bool(np.all(np.diag(system.M) >= 0))
