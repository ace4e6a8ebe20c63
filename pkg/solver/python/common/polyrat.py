import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from sympy import Poly

from ..exceptions import DomainError
from .poly import (
    coefficients,
    constant,
    degree,
    derivative,
    evaluate,
    linear_factor,
    poly,
    product,
    z,
)
from .roots import real_roots


logger = logging.getLogger(__name__)


def poly_from_roots(roots: Iterable[tuple[Fraction, int]]) -> Poly:
    """
    Product of (1 - z/root)^multiplicity, normalized to the value 1 at the origin.
    """
    roots = list(roots)
    values = [Fraction(value) for value, _ in roots]
    if len(set(values)) != len(values):
        raise DomainError(f"Repeated root value in {sorted(values)}", code="repeated_root")
    factors = []
    for value, multiplicity in zip(values, (m for _, m in roots)):
        if not value > 0:
            raise DomainError(f"Root values must be positive, got {value}", code="non_positive_root")
        if multiplicity < 1:
            raise DomainError(f"Multiplicity must be positive, got {multiplicity}", code="invalid_multiplicity")
        factors.append(linear_factor(value) ** multiplicity)
    return product(factors)


@dataclass(frozen=True)
class RatFun:
    """
    Reduced rational function: coprime numerator and monic denominator.
    """

    numerator: Poly
    denominator: Poly

    @classmethod
    def from_polys(cls, numerator: Poly, denominator: Poly) -> "RatFun":
        if denominator.is_zero:
            raise DomainError("Rational function with zero denominator")
        common = numerator.gcd(denominator)
        numerator = numerator.exquo(common)
        denominator = denominator.exquo(common)
        lead = denominator.LC()
        return cls(numerator.quo_ground(lead), denominator.monic())

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFun":
        return cls.from_polys(p, constant(1))

    def __call__(self, x: Fraction) -> Fraction:
        den = evaluate(self.denominator, x)
        if den == 0:
            raise DomainError(f"Evaluation at the pole {x}")
        return evaluate(self.numerator, x) / den

    def __neg__(self) -> "RatFun":
        return RatFun(-self.numerator, self.denominator)

    def __add__(self, other: "RatFun") -> "RatFun":
        return RatFun.from_polys(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __sub__(self, other: "RatFun") -> "RatFun":
        return self + (-other)

    def __mul__(self, other: "RatFun") -> "RatFun":
        return RatFun.from_polys(self.numerator * other.numerator, self.denominator * other.denominator)

    def reciprocal(self) -> "RatFun":
        if self.numerator.is_zero:
            raise DomainError("Reciprocal of the zero function")
        return RatFun.from_polys(self.denominator, self.numerator)

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    @property
    def degree_excess(self) -> int:
        if self.numerator.is_zero:
            return -1 - self.denominator.degree()
        return self.numerator.degree() - self.denominator.degree()

    def residue(self, pole: Fraction) -> Fraction:
        """
        Residue at a simple pole: numerator(pole) / denominator'(pole).
        """
        return evaluate(self.numerator, pole) / evaluate(derivative(self.denominator), pole)


class Pole(NamedTuple):
    location: Fraction
    residue: Fraction


@dataclass(frozen=True)
class PartialFractions:
    """
    alpha + beta z + sum of residue / (z - location).
    """

    alpha: Fraction
    beta: Fraction
    poles: tuple[Pole, ...]
    exact: bool = True

    def __call__(self, x: Fraction) -> Fraction:
        return self.alpha + self.beta * x + sum((p.residue / (x - p.location) for p in self.poles), Fraction(0))

    def reconstruct(self) -> RatFun:
        denominator = product([poly([-p.location, 1]) for p in self.poles])
        numerator = poly([self.alpha, self.beta]) * denominator
        for pole in self.poles:
            others = product([poly([-q.location, 1]) for q in self.poles if q is not pole])
            numerator = numerator + others * poly([pole.residue])
        return RatFun.from_polys(numerator, denominator)


def _simple_poles(denominator: Poly, candidates: Iterable[Fraction] | None) -> tuple[list[Fraction], bool]:
    deg = denominator.degree()
    if deg == 0:
        return [], True
    if candidates is not None:
        exact = sorted(c for c in set(candidates) if evaluate(denominator, c) == 0)
        # a candidate list that accounts for every root certifies simple real poles
        if len(exact) == deg:
            return exact, True
    roots = real_roots(denominator)
    if any(r.multiplicity > 1 for r in roots):
        raise DomainError("Rational function has a non-simple pole", code="non_simple_pole")
    if len(roots) < deg:
        raise DomainError("Rational function has a non-real pole", code="non_real_pole")
    return [r.value for r in roots], all(r.exact for r in roots)


def partial_fractions(f: RatFun, candidates: Iterable[Fraction] | None = None) -> PartialFractions:
    """
    Decomposes f with real simple poles and degree excess at most one.
    `candidates` may list known pole locations; they are confirmed by exact evaluation.
    """
    if f.degree_excess > 1:
        raise DomainError(f"Degree excess {f.degree_excess} exceeds one", code="degree_excess")
    locations, exact = _simple_poles(f.denominator, candidates)
    quotient, _ = f.numerator.div(f.denominator)
    coeffs = coefficients(quotient) + [Fraction(0), Fraction(0)]
    d_den = derivative(f.denominator)
    poles = tuple(Pole(mu, evaluate(f.numerator, mu) / evaluate(d_den, mu)) for mu in locations)
    return PartialFractions(alpha=coeffs[0], beta=coeffs[1], poles=poles, exact=exact)


@dataclass(frozen=True)
class HerglotzCertificate:
    herglotz: bool
    reason: str | None
    sequence: tuple[tuple[Fraction, str], ...] = ()
    interlaced: bool = False

    def __bool__(self) -> bool:
        return self.herglotz


def _interlaced(sequence: Sequence[tuple[Fraction, str]]) -> bool:
    kinds = [kind for _, kind in sequence]
    return all(a != b for a, b in zip(kinds, kinds[1:]))


def is_rational_herglotz(f: RatFun, candidates: Iterable[Fraction] | None = None) -> HerglotzCertificate:
    """
    Tests whether f = alpha + beta z + sum c_j / (mu_j - z) with beta >= 0, c_j > 0 and real mu_j.
    The certificate lists zeros and poles merged in increasing order.
    """
    if f.is_zero:
        return HerglotzCertificate(False, "zero function")
    candidates = list(candidates) if candidates is not None else None
    try:
        pf = partial_fractions(f, candidates)
    except DomainError as err:
        return HerglotzCertificate(False, err.code)

    zeros = []
    if degree(f.numerator):
        zeros, _ = _simple_zeros(f.numerator, candidates)
    sequence = tuple(sorted([(p.location, "pole") for p in pf.poles] + [(x, "zero") for x in zeros]))
    interlaced = _interlaced(sequence)

    if pf.beta < 0:
        return HerglotzCertificate(False, f"negative linear coefficient {pf.beta}", sequence, interlaced)
    for pole in pf.poles:
        if not pole.residue < 0:
            return HerglotzCertificate(
                False, f"residue {pole.residue} at {pole.location} is not negative", sequence, interlaced
            )
    return HerglotzCertificate(True, None, sequence, interlaced)


def _simple_zeros(numerator: Poly, candidates: list[Fraction] | None) -> tuple[list[Fraction], bool]:
    deg = numerator.degree()
    if candidates is not None:
        exact = sorted(c for c in set(candidates) if evaluate(numerator, c) == 0)
        if len(exact) == deg:
            return exact, True
    roots = real_roots(numerator)
    return [r.value for r in roots for _ in range(r.multiplicity)], all(r.exact for r in roots)


__all__ = [
    "HerglotzCertificate",
    "PartialFractions",
    "Pole",
    "RatFun",
    "is_rational_herglotz",
    "partial_fractions",
    "poly_from_roots",
    "real_roots",
    "z",
]
