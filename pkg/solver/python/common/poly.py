"""
Thin helpers around sympy's dense univariate polynomials over QQ.

All polynomials of the solver live in the single variable `z` with rational coefficients.
Scalars cross the boundary as `fractions.Fraction`.
"""

from collections.abc import Sequence
from fractions import Fraction
from math import lcm

import sympy as sp
from sympy import QQ, Poly


z = sp.Symbol("z")

Scalar = Fraction | int | sp.Rational


def to_rational(value: Scalar) -> sp.Rational:
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    return sp.Rational(value)


def to_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def poly(coefficients: Sequence[Scalar]) -> Poly:
    """
    Builds a polynomial from coefficients in ascending degree.
    """
    coeffs = [to_rational(c) for c in reversed(list(coefficients))] or [sp.Integer(0)]
    return Poly(coeffs, z, domain=QQ)


def constant(value: Scalar) -> Poly:
    return poly([value])


def linear_factor(root: Fraction) -> Poly:
    """
    1 - z/root
    """
    return poly([1, -1 / Fraction(root)])


def coefficients(p: Poly) -> list[Fraction]:
    """
    Ascending coefficients with trailing zeros stripped; the zero polynomial has none.
    """
    if p.is_zero:
        return []
    return [to_fraction(c) for c in reversed(p.all_coeffs())]


def integer_coefficients(p: Poly) -> list[int]:
    """
    Ascending integer coefficients of a positive multiple of p (same signs everywhere).
    """
    coeffs = coefficients(p)
    scale = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [int(c * scale) for c in coeffs]


def evaluate(p: Poly, x: Scalar) -> Fraction:
    return to_fraction(p.eval(to_rational(x)))


def derivative(p: Poly) -> Poly:
    return p.diff(z)


def leading_coefficient(p: Poly) -> Fraction:
    return to_fraction(p.LC())


def degree(p: Poly) -> int | None:
    """
    Degree of p; None for the zero polynomial.
    """
    return None if p.is_zero else p.degree()


def product(polys: Sequence[Poly]) -> Poly:
    result = constant(1)
    for p in polys:
        result = result * p
    return result
