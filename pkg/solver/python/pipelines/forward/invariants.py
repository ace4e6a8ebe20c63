"""
Verdicts for the identities a forward solution satisfies.

Every identity is evaluated independently of the quantity it cross-checks. With rational eigenvalues the
comparison is exact; otherwise values agree to `identity_rel_tol`.
"""

import logging
from fractions import Fraction
from typing import NamedTuple

from ... import config
from ...common.poly import constant, evaluate, poly
from ...common.polyrat import RatFun, is_rational_herglotz
from ...models.characteristic import GraphCharacteristic
from ...models.measure import GraphMeasure
from ...models.spectral import CouplingMatrix
from .transfer import dot_P, edge_eigenfunction
from .wronskian import spectral_values


logger = logging.getLogger(__name__)


class Verdict(NamedTuple):
    check: str
    scope: str
    passed: bool
    deviation: Fraction


def _agree(check: str, scope: str, a: Fraction, b: Fraction, exact: bool) -> Verdict:
    scale = max(abs(a), abs(b))
    deviation = abs(a - b) / scale if scale else Fraction(0)
    passed = a == b if exact else deviation <= config.identity_rel_tol
    return Verdict(check, scope, passed, deviation)


def _edge_verdicts(characteristic: GraphCharacteristic) -> list[Verdict]:
    verdicts = []
    for eid, spectrum in characteristic.edge_spectra.items():
        ec = characteristic.edges[eid]
        for mu in spectrum:
            scope = f"{eid}@{mu}"
            eig = edge_eigenfunction(ec, mu)
            exact = characteristic.exact
            verdicts.append(_agree("norm_identity", scope, eig.h1_norm_sq, mu * eig.omega_norm_sq, exact))
            verdicts.append(
                _agree(
                    "dot_phi",
                    scope,
                    eig.omega_norm_sq,
                    -dot_P(ec, mu) * evaluate(ec.Q, mu),
                    exact,
                )
            )
    return verdicts


def _residue_verdicts(
    characteristic: GraphCharacteristic,
    G: RatFun,
    coupling: dict[Fraction, CouplingMatrix],
) -> list[Verdict]:
    verdicts = []
    edges = characteristic.edges
    weyl_sum = RatFun.from_polys(poly([0]), constant(1))
    for ec in edges.values():
        weyl_sum = weyl_sum + RatFun.from_polys(ec.Q, ec.P)
    minus_inverse_G = -G.reciprocal()

    for lam, members in characteristic.shared_sets.items():
        if not members:
            continue
        scope = str(lam)
        by_values = sum((evaluate(edges[e].Q, lam) / dot_P(edges[e], lam) for e in members), Fraction(0))
        by_norms = -sum(
            (edge_eigenfunction(edges[e], lam).h1_norm_sq / (lam * dot_P(edges[e], lam) ** 2) for e in members),
            Fraction(0),
        )
        by_residue = weyl_sum.residue(lam)
        verdicts.append(_agree("residue_bookkeeping", scope, by_values, by_norms, characteristic.exact))
        verdicts.append(_agree("residue_bookkeeping", scope, by_values, by_residue, characteristic.exact))

        matrix = coupling[lam]
        green_residue = minus_inverse_G.residue(lam)
        for eid in members:
            edge_residue = evaluate(edges[eid].Q, lam) / dot_P(edges[eid], lam)
            verdicts.append(
                _agree(
                    "residue_coupling",
                    f"{eid}@{lam}",
                    green_residue,
                    edge_residue * matrix.column_sum(eid),
                    characteristic.exact,
                )
            )
        verdicts.append(Verdict("row_sum", scope, matrix.identity_sum() == 1, abs(matrix.identity_sum() - 1)))
    return verdicts


def invariant_verdicts(
    measure: GraphMeasure,
    characteristic: GraphCharacteristic,
    G: RatFun,
    coupling: dict[Fraction, CouplingMatrix],
) -> list[Verdict]:
    expected = measure.mass_count + (1 if measure.central_mass > 0 else 0)
    verdicts = [
        Verdict(
            "eigenvalue_count",
            "graph",
            characteristic.eigenvalue_count == expected,
            Fraction(abs(characteristic.eigenvalue_count - expected)),
        )
    ]

    candidates = spectral_values(characteristic)
    for name, f in (("herglotz_G", G), ("herglotz_minus_inverse_G", -G.reciprocal())):
        verdicts.append(Verdict(name, "graph", bool(is_rational_herglotz(f, candidates)), Fraction(0)))

    eigenvalues = characteristic.eigenvalues
    for eid, spectrum in characteristic.edge_spectra.items():
        if spectrum:
            verdicts.append(
                Verdict("small_eigenvalue", eid, bool(eigenvalues) and eigenvalues[0] < spectrum[0], Fraction(0))
            )

    verdicts.extend(_edge_verdicts(characteristic))
    verdicts.extend(_residue_verdicts(characteristic, G, coupling))
    logger.info("Evaluated %d invariant verdicts", len(verdicts))
    return verdicts
