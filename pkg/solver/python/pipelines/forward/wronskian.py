import logging
from fractions import Fraction

from sympy import Poly

from ...common.poly import evaluate, poly, product
from ...common.polyrat import RatFun, is_rational_herglotz
from ...common.roots import count_real_roots, real_roots, refinement_tol
from ...exceptions import InvariantViolation
from ...models.characteristic import EdgeCharacteristic, GraphCharacteristic
from ...models.measure import GraphMeasure
from .exceptions import HerglotzAssertionError, MultiplicityMismatch
from .transfer import edge_roots, edge_transfer


logger = logging.getLogger(__name__)


def edge_characteristics(measure: GraphMeasure) -> dict[str, EdgeCharacteristic]:
    graph = measure.graph
    return {eid: edge_transfer(eid, graph.length(eid), measure.on(eid)) for eid in graph.edge_ids}


def _assemble_W(measure: GraphMeasure, edges: dict[str, EdgeCharacteristic]) -> Poly:
    """
    W = -L [ central_mass z prod P_e + sum_e Q_e prod_{d != e} P_d ]
    """
    total = poly([0, measure.central_mass]) * product([ec.P for ec in edges.values()])
    for eid, ec in edges.items():
        total = total + ec.Q * product([other.P for did, other in edges.items() if did != eid])
    return poly([-measure.graph.harmonic_length]) * total


def wronskian(measure: GraphMeasure, rel_tol: Fraction | None = None) -> GraphCharacteristic:
    """
    Characteristic polynomial of the graph, its eigenvalues with multiplicities and the shared edge sets.

    Roots of W and of the edge polynomials are refined to the same relative width, by default
    refinement_tol of the degree of W, so that a shared eigenvalue has one representative.

    The multiplicity of every root is checked against the count of edges sharing it (one when no edge
    does, the count minus one otherwise).
    """
    edges = edge_characteristics(measure)
    W = _assemble_W(measure, edges)
    if evaluate(W, 0) != 1:
        raise InvariantViolation(f"W(0) = {evaluate(W, 0)} instead of 1", code="wronskian_normalization")

    if rel_tol is None:
        rel_tol = refinement_tol(W.degree())
    edge_root_lists = {eid: edge_roots(ec, rel_tol) for eid, ec in edges.items()}
    edge_spectra = {eid: tuple(r.value for r in roots) for eid, roots in edge_root_lists.items()}
    roots = real_roots(W, rel_tol) if W.degree() > 0 else []

    expected_count = measure.mass_count + (1 if measure.central_mass > 0 else 0)
    real_count = count_real_roots(W)
    if W.degree() != expected_count or real_count != expected_count:
        raise MultiplicityMismatch(
            f"W has degree {W.degree()} with {real_count} real roots, expected {expected_count}",
            code="eigenvalue_count",
        )

    spectrum = []
    shared_sets = {}
    for root in roots:
        if not root.value > 0:
            raise InvariantViolation(f"Non-positive eigenvalue {root.value}", code="eigenvalue_sign")
        members = tuple(eid for eid, values in edge_spectra.items() if root.value in values)
        expected = len(members) - 1 if members else 1
        if root.multiplicity != expected:
            raise MultiplicityMismatch(
                f"Eigenvalue {root.value} has multiplicity {root.multiplicity}, shared by {list(members)}"
            )
        spectrum.append((root.value, root.multiplicity))
        shared_sets[root.value] = members

    # every common root of W and P_e is a shared eigenvalue of e, counted exactly through gcds
    gcd_degree = sum(W.gcd(ec.P).degree() for ec in edges.values())
    if gcd_degree != sum(len(members) for members in shared_sets.values()):
        raise MultiplicityMismatch(
            f"Common roots of W and the edge polynomials ({gcd_degree}) disagree with the shared edge sets",
            code="shared_sets",
        )

    exact = all(r.exact for r in roots) and all(r.exact for rs in edge_root_lists.values() for r in rs)
    logger.info(
        "Assembled W of degree %d with %d distinct eigenvalues (exact: %s)", W.degree(), len(spectrum), exact
    )
    return GraphCharacteristic(
        W=W,
        spectrum=tuple(spectrum),
        shared_sets=shared_sets,
        edges=edges,
        edge_spectra=edge_spectra,
        exact=exact,
    )


def spectral_values(characteristic: GraphCharacteristic) -> set[Fraction]:
    values = set(characteristic.eigenvalues)
    for spectrum in characteristic.edge_spectra.values():
        values.update(spectrum)
    return values


def greens_function(measure: GraphMeasure, characteristic: GraphCharacteristic | None = None) -> RatFun:
    """
    G = L prod P_e / W in lowest terms.

    Both G and -1/G are asserted to be Herglotz-Nevanlinna functions, and the smallest eigenvalue of the
    graph must lie strictly below the smallest eigenvalue of every non-empty edge spectrum.
    """
    characteristic = characteristic or wronskian(measure)
    L = measure.graph.harmonic_length
    G = RatFun.from_polys(poly([L]) * product([ec.P for ec in characteristic.edges.values()]), characteristic.W)
    candidates = spectral_values(characteristic)
    for name, f in (("G", G), ("-1/G", -G.reciprocal())):
        certificate = is_rational_herglotz(f, candidates)
        if not certificate:
            raise HerglotzAssertionError(f"{name} fails the Herglotz test: {certificate.reason}")

    eigenvalues = characteristic.eigenvalues
    for eid, values in characteristic.edge_spectra.items():
        if values and not (eigenvalues and eigenvalues[0] < values[0]):
            smallest = eigenvalues[0] if eigenvalues else None
            raise HerglotzAssertionError(
                f"Smallest eigenvalue {smallest} is not below {values[0]} on edge {eid}",
                code="small_eigenvalue",
            )
    logger.debug("Green's function has %d poles", G.denominator.degree())
    return G
