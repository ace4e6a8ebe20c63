import logging
from fractions import Fraction

from ...common.poly import constant, derivative, evaluate, poly
from ...common.roots import RealRoot, is_root_within, real_roots
from ...exceptions import DomainError, InvariantViolation
from ...models.characteristic import EdgeCharacteristic, EdgeEigenfunction, PiecewiseLinearFn
from ...models.measure import EdgeMeasure


logger = logging.getLogger(__name__)


def edge_transfer(edge: str, length: Fraction, masses: EdgeMeasure) -> EdgeCharacteristic:
    """
    Runs the transfer recursion from the outer vertex towards the centre.

    Starts from f(l) = 0 and f' = -1/l, so that f(x) = 1 - x/l on the outermost free segment.
    A free segment of length d is crossed with f(a) = f(b) - d f'(b), and a mass m at x changes
    the derivative by f'(x-) = f'(x+) + z m f(x).
    """
    value = constant(0)
    slope = constant(-1 / length)
    node_values = []
    right = length
    for mass in reversed(masses.masses):
        value = value - poly([right - mass.position]) * slope
        node_values.append(value)
        slope = slope + poly([0, mass.weight]) * value
        right = mass.position
    P = value - poly([right]) * slope
    logger.debug("Edge %s transfer done over %d masses", edge, len(masses))
    return EdgeCharacteristic(
        edge=edge,
        length=length,
        masses=masses,
        P=P,
        Q=slope,
        node_values=tuple(reversed(node_values)),
    )


def edge_roots(ec: EdgeCharacteristic, rel_tol: Fraction | None = None) -> list[RealRoot]:
    if ec.P.degree() == 0:
        return []
    roots = real_roots(ec.P, rel_tol)
    for root in roots:
        if root.multiplicity != 1 or not root.value > 0:
            raise InvariantViolation(
                f"Edge {ec.edge} has root {root.value} of multiplicity {root.multiplicity}",
                code="edge_spectrum",
            )
    return roots


def edge_spectrum(ec: EdgeCharacteristic, rel_tol: Fraction | None = None) -> list[Fraction]:
    """
    Eigenvalues of the edge with a Dirichlet condition at the centre: the roots of P, simple and positive.
    """
    return [root.value for root in edge_roots(ec, rel_tol)]


def edge_eigenfunction(ec: EdgeCharacteristic, mu: Fraction) -> EdgeEigenfunction:
    if not is_root_within(ec.P, mu):
        raise DomainError(f"{mu} is not an eigenvalue of edge {ec.edge}", code="not_an_eigenvalue")
    breakpoints = (Fraction(0), *ec.masses.positions, ec.length)
    values = (Fraction(0), *(evaluate(p, mu) for p in ec.node_values), Fraction(0))
    phi = PiecewiseLinearFn(breakpoints, values)
    omega_norm_sq = sum((m.weight * v * v for m, v in zip(ec.masses, values[1:-1])), Fraction(0))
    return EdgeEigenfunction(phi, phi.h1_norm_sq, omega_norm_sq)


def dot_P(ec: EdgeCharacteristic, mu: Fraction) -> Fraction:
    """
    Derivative of P with respect to the spectral parameter at mu.
    """
    return evaluate(derivative(ec.P), mu)
