"""
Stieltjes continued fraction of an edge.

With u = -1/m the expansion alternates two steps until u is constant:

    u = d_0 + 1 / (-m_1 z + 1 / (d_1 + 1 / (-m_2 z + ...)))

Each d_j is the free segment length read off u at infinity, each m_j the point mass read off the linear
coefficient of the polynomial part of 1 / (u - d_j). Positions are the partial sums of the lengths.
"""

import logging
from fractions import Fraction

from ...common.poly import coefficients, constant, degree, leading_coefficient, poly
from ...common.polyrat import RatFun
from ...models.measure import EdgeMeasure, PointMass
from ...models.spectral import WeylFunction
from .exceptions import ContinuedFractionError


logger = logging.getLogger(__name__)


def _limit_at_infinity(u: RatFun) -> Fraction:
    excess = u.degree_excess
    if excess > 0:
        raise ContinuedFractionError(f"u grows at infinity with degree excess {excess}")
    if excess < 0:
        return Fraction(0)
    return leading_coefficient(u.numerator) / leading_coefficient(u.denominator)


def stieltjes_cf_reconstruct(m: WeylFunction, length: Fraction) -> EdgeMeasure:
    u = RatFun.from_polys(-m.denominator, m.numerator)
    position = Fraction(0)
    masses = []
    while True:
        d = _limit_at_infinity(u)
        if not d > 0:
            raise ContinuedFractionError(
                f"Non-positive segment length {d} on edge {m.edge}", code="non_positive_length"
            )
        position += d
        rest = u - RatFun.from_poly(constant(d))
        if rest.is_zero:
            break

        w = rest.reciprocal()
        quotient, _ = w.numerator.div(w.denominator)
        if degree(quotient) != 1:
            raise ContinuedFractionError(f"Expected a linear polynomial part, got degree {degree(quotient)}")
        mass = -coefficients(quotient)[1]
        if not mass > 0:
            raise ContinuedFractionError(f"Non-positive mass {mass} on edge {m.edge}", code="non_positive_mass")
        masses.append(PointMass(position, mass))
        logger.debug("Edge %s: mass %s at %s", m.edge, mass, position)
        u = (w + RatFun.from_poly(poly([0, mass]))).reciprocal()

    if position != length:
        raise ContinuedFractionError(f"Segment lengths on edge {m.edge} sum to {position}, expected {length}")
    if len(masses) != len(m.residues):
        raise ContinuedFractionError(f"Extracted {len(masses)} masses for {len(m.residues)} poles on edge {m.edge}")
    return EdgeMeasure(tuple(masses))
