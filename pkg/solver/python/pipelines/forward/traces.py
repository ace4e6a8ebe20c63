import logging
from fractions import Fraction
from typing import NamedTuple

from ... import config
from ...common.deviation import format_short
from ...common.kernels import edge_trace_integral, trace_integral
from ...common.poly import derivative, evaluate
from ...models.characteristic import GraphCharacteristic
from ...models.measure import GraphMeasure
from .exceptions import TraceMismatch
from .wronskian import wronskian


logger = logging.getLogger(__name__)


class TraceCheck(NamedTuple):
    """
    One trace identity: the integral against the measure, the eigenvalue sum and the same sum read off
    the first-order coefficient of the characteristic polynomial.
    """

    scope: str
    integral: Fraction
    root_sum: Fraction
    coefficient_sum: Fraction
    deviation: Fraction
    passed: bool


def _check(scope: str, integral: Fraction, root_sum: Fraction, coefficient_sum: Fraction, exact: bool) -> TraceCheck:
    deviation = abs(root_sum - integral) / integral if integral else abs(root_sum)
    # positive terms, each with relative error below root_rel_tol
    tolerance = 0 if exact else 2 * config.root_rel_tol
    passed = integral == coefficient_sum and deviation <= tolerance
    return TraceCheck(scope, integral, root_sum, coefficient_sum, deviation, passed)


def trace_checks(measure: GraphMeasure, characteristic: GraphCharacteristic | None = None) -> list[TraceCheck]:
    """
    Per edge: sum of m x (1 - x/l_e) against sum of 1/mu over the edge spectrum.
    For the graph: integral of T against sum of kappa/lambda.

    Raises TraceMismatch when some identity fails.
    """
    characteristic = characteristic or wronskian(measure)
    checks = []
    for eid, ec in characteristic.edges.items():
        spectrum = characteristic.edge_spectra[eid]
        checks.append(
            _check(
                eid,
                edge_trace_integral(measure, eid),
                sum((1 / mu for mu in spectrum), Fraction(0)),
                -evaluate(derivative(ec.P), 0),
                characteristic.exact,
            )
        )
    checks.append(
        _check(
            "graph",
            trace_integral(measure),
            sum((Fraction(kappa) / lam for lam, kappa in characteristic.spectrum), Fraction(0)),
            -evaluate(derivative(characteristic.W), 0),
            characteristic.exact,
        )
    )

    failed = [check for check in checks if not check.passed]
    if failed:
        raise TraceMismatch(
            {
                "detail": f"Trace identities fail on {[c.scope for c in failed]}",
                "checks": [{"scope": c.scope, "deviation": format_short(c.deviation)} for c in failed],
            }
        )
    logger.debug("Trace identities hold on %d scopes", len(checks))
    return checks
