from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from sympy import Poly

from ..exceptions import DomainError
from .measure import EdgeMeasure


@dataclass(frozen=True)
class PiecewiseLinearFn:
    """
    Continuous function on one edge, linear between consecutive breakpoints.

    Breakpoints are 0, the mass positions and the edge length, in increasing order.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.breakpoints) != len(self.values) or len(self.breakpoints) < 2:
            raise DomainError("A piecewise linear function needs matching breakpoints and values")
        for a, b in zip(self.breakpoints, self.breakpoints[1:]):
            if not b > a:
                raise DomainError(f"Breakpoints must be strictly increasing, got {a} then {b}")

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(
            (v1 - v0) / (x1 - x0)
            for (x0, v0), (x1, v1) in zip(
                zip(self.breakpoints, self.values), zip(self.breakpoints[1:], self.values[1:])
            )
        )

    @property
    def h1_norm_sq(self) -> Fraction:
        """
        Integral of the squared derivative.
        """
        return sum(
            (s * s * (x1 - x0) for s, x0, x1 in zip(self.slopes, self.breakpoints, self.breakpoints[1:])),
            Fraction(0),
        )

    def value_at(self, x: Fraction) -> Fraction:
        if not self.breakpoints[0] <= x <= self.breakpoints[-1]:
            raise DomainError(f"Position {x} outside [{self.breakpoints[0]}, {self.breakpoints[-1]}]")
        for x0, x1, v0, v1 in zip(self.breakpoints, self.breakpoints[1:], self.values, self.values[1:]):
            if x <= x1:
                return v0 + (v1 - v0) * (x - x0) / (x1 - x0)
        return self.values[-1]


@dataclass(frozen=True)
class EdgeCharacteristic:
    """
    Solution of the edge equation normalized at the outer vertex, as polynomials in the spectral parameter.

    `P` is its value and `Q` its derivative at the central vertex; `node_values[k]` is its value at the
    k-th mass (increasing position).
    """

    edge: str
    length: Fraction
    masses: EdgeMeasure
    P: Poly
    Q: Poly
    node_values: tuple[Poly, ...]


class EdgeEigenfunction(NamedTuple):
    phi: PiecewiseLinearFn
    h1_norm_sq: Fraction
    omega_norm_sq: Fraction


@dataclass(frozen=True)
class GraphCharacteristic:
    """
    Characteristic polynomial W of the graph with its roots.

    `spectrum` lists (eigenvalue, multiplicity) in increasing order; `shared_sets` maps every eigenvalue
    to the edges whose characteristic polynomial vanishes there. `exact` is False when some root is an
    approximation of an irrational number.
    """

    W: Poly
    spectrum: tuple[tuple[Fraction, int], ...]
    shared_sets: dict[Fraction, tuple[str, ...]]
    edges: dict[str, EdgeCharacteristic]
    edge_spectra: dict[str, tuple[Fraction, ...]]
    exact: bool = field(default=True, compare=False)

    @property
    def eigenvalues(self) -> tuple[Fraction, ...]:
        return tuple(lam for lam, _ in self.spectrum)

    @property
    def eigenvalue_count(self) -> int:
        return sum(kappa for _, kappa in self.spectrum)
