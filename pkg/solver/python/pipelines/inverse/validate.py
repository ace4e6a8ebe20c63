import logging
from fractions import Fraction

from ...common.poly import product
from ...common.polyrat import RatFun, is_rational_herglotz
from ...exceptions import Violation
from ...models.spectral import SpectralData
from .residues import spectral_polys


logger = logging.getLogger(__name__)


def _value_violations(data: SpectralData) -> list[Violation]:
    issues = []
    named = [("sigma", data.sigma)] + [(f"sigma_e[{eid}]", values) for eid, values in data.sigma_e.items()]
    for name, values in named:
        for value in values:
            if not value > 0:
                issues.append(Violation("non_positive_value", "positivity", f"{name} contains {value}"))
        if len(set(values)) != len(values):
            issues.append(Violation("repeated_value", "distinctness", f"{name} repeats a value"))
    return issues


def _coupling_violations(data: SpectralData) -> list[Violation]:
    issues = []
    for lam in data.sigma:
        members = data.shared_edges(lam)
        if not members:
            continue
        matrix = data.coupling.get(lam)
        if matrix is None:
            issues.append(Violation("coupling_missing", "coupling matrix per shared eigenvalue", f"none at {lam}"))
            continue
        if set(matrix.edges) != set(members):
            issues.append(
                Violation(
                    "coupling_edges",
                    "coupling matrix over the shared edges",
                    f"matrix at {lam} spans {sorted(matrix.edges)}, shared edges are {sorted(members)}",
                )
            )
        issues.extend(Violation(v.code, v.hypothesis, f"at {lam}: {v.detail}") for v in matrix.violations())
    for lam in data.coupling:
        if lam not in data.sigma or not data.shared_edges(lam):
            issues.append(
                Violation("unexpected_coupling", "coupling matrix per shared eigenvalue", f"{lam} is not shared")
            )
    return issues


def validate_spectral_data(data: SpectralData) -> list[Violation]:
    """
    Checks the hypotheses under which spectral data belong to a unique Stieltjes string on the graph.

    Membership of eigenvalues in the edge spectra is exact equality of rationals.
    An empty list means the data are valid.
    """
    issues = _value_violations(data)
    if issues:
        return issues

    for lam in data.sigma:
        members = data.shared_edges(lam)
        if len(members) == 1:
            issues.append(Violation("kappa_zero", "multiplicity at least one", f"kappa_{lam} = 0 (only {members[0]})"))
    issues.extend(_coupling_violations(data))
    if any(issue.code == "kappa_zero" for issue in issues):
        return issues

    V, edge_polys = spectral_polys(data)
    certificate = is_rational_herglotz(RatFun.from_polys(product(list(edge_polys.values())), V), data.all_values)
    if not certificate:
        issues.append(Violation("herglotz", "Herglotz-Nevanlinna product", certificate.reason))

    for eid, values in data.sigma_e.items():
        if values and not (data.sigma and data.sigma[0] < values[0]):
            issues.append(
                Violation(
                    "small_eigenvalue",
                    "smallest eigenvalue below every edge spectrum",
                    f"min sigma = {data.sigma[0] if data.sigma else None}, min sigma_e[{eid}] = {values[0]}",
                )
            )

    logger.info("Spectral data validation found %d violations", len(issues))
    return issues


def snap_to_matches(data: SpectralData, match_tol: Fraction) -> SpectralData:
    """
    Replaces every edge eigenvalue within relative match_tol of a graph eigenvalue, or of an edge eigenvalue
    already seen, by that value.
    """
    anchors = list(data.sigma)

    def snap(value: Fraction) -> Fraction:
        for anchor in anchors:
            if abs(anchor - value) <= match_tol * anchor:
                return anchor
        anchors.append(value)
        return value

    sigma_e = {eid: tuple(snap(mu) for mu in values) for eid, values in data.sigma_e.items()}
    coupling = {}
    for lam, matrix in data.coupling.items():
        coupling[next((a for a in data.sigma if abs(a - lam) <= match_tol * a), lam)] = matrix
    return SpectralData(data.graph, data.sigma, sigma_e, coupling, exact=data.exact)
