from dataclasses import dataclass, field
from fractions import Fraction

from sympy import Poly

from ..exceptions import DomainError, Violation
from .graph import StarGraph


@dataclass(frozen=True, eq=False)
class CouplingMatrix:
    """
    Matrix of class R(E): positive entries with r_ed = r_eb r_bd.

    Stored in ratio-vector form: ratios[d] = r_{ref,d}, so that r_ed = ratios[d] / ratios[e]
    and ratios[ref_edge] = 1.
    """

    ref_edge: str
    ratios: dict[str, Fraction]

    def __post_init__(self) -> None:
        if self.ref_edge not in self.ratios:
            object.__setattr__(self, "ratios", {self.ref_edge: Fraction(1), **self.ratios})

    @classmethod
    def from_weights(cls, weights: dict[str, Fraction]) -> "CouplingMatrix":
        """
        Builds r_ed = a_e / a_d from positive edge weights a_e.
        """
        ref = next(iter(weights))
        return cls(ref, {d: weights[ref] / weights[d] for d in weights})

    @classmethod
    def from_matrix(cls, edges: list[str], matrix: list[list[Fraction]]) -> "CouplingMatrix":
        """
        Full |E| x |E| form; multiplicativity is checked exactly.
        """
        n = len(edges)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise DomainError("Coupling matrix must be square over its edge set", code="coupling_shape")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if matrix[i][j] != matrix[i][k] * matrix[k][j]:
                        raise DomainError(
                            f"Coupling matrix is not multiplicative at ({edges[i]}, {edges[j]}) via {edges[k]}",
                            code="coupling_not_multiplicative",
                        )
        return cls(edges[0], {d: Fraction(matrix[0][j]) for j, d in enumerate(edges)})

    @property
    def edges(self) -> tuple[str, ...]:
        return tuple(self.ratios)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CouplingMatrix):
            return NotImplemented
        if set(self.edges) != set(other.edges):
            return False
        return all(self.entry(self.ref_edge, d) == other.entry(self.ref_edge, d) for d in self.edges)

    def __hash__(self) -> int:
        return hash(frozenset(self.edges))

    def entry(self, e: str, d: str) -> Fraction:
        return self.ratios[d] / self.ratios[e]

    def column_sum(self, e: str) -> Fraction:
        """
        sum over d of r_de
        """
        return sum((self.entry(d, e) for d in self.ratios), Fraction(0))

    def identity_sum(self) -> Fraction:
        """
        sum over e of (sum over d of r_de)^-1, which equals 1 on R(E).
        """
        return sum((1 / self.column_sum(e) for e in self.ratios), Fraction(0))

    def as_matrix(self) -> list[list[Fraction]]:
        return [[self.entry(e, d) for d in self.edges] for e in self.edges]

    def scaled(self, edge: str, factor: Fraction) -> "CouplingMatrix":
        """
        Multiplies r_{d,edge} by factor for every other edge d; the result stays in R(E).
        """
        if edge not in self.ratios:
            raise DomainError(f"Edge {edge} is not coupled", code="unknown_edge")
        if not factor > 0:
            raise DomainError(f"Scaling factor must be positive, got {factor}", code="coupling_not_positive")
        if edge == self.ref_edge:
            return CouplingMatrix(self.ref_edge, {d: r if d == edge else r / factor for d, r in self.ratios.items()})
        return CouplingMatrix(self.ref_edge, {d: r * factor if d == edge else r for d, r in self.ratios.items()})

    def violations(self) -> list[Violation]:
        issues = []
        for d, r in self.ratios.items():
            if not r > 0:
                issues.append(Violation("coupling_not_positive", "R(E) positivity", f"ratio {r} for edge {d}"))
        if self.ratios.get(self.ref_edge) != 1:
            issues.append(Violation("coupling_diagonal", "R(E) unit diagonal", f"r_ee = {self.ratios[self.ref_edge]}"))
        return issues


@dataclass(frozen=True)
class SpectralData:
    """
    Spectrum of the whole graph, spectra of the edges and coupling matrices of the shared eigenvalues.
    `exact` is False when some values are refined approximations of irrational eigenvalues.
    """

    graph: StarGraph
    sigma: tuple[Fraction, ...] = ()
    sigma_e: dict[str, tuple[Fraction, ...]] = field(default_factory=dict)
    coupling: dict[Fraction, CouplingMatrix] = field(default_factory=dict)
    exact: bool = field(default=True, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigma", tuple(sorted(self.sigma)))
        normalized = {eid: tuple(sorted(self.sigma_e.get(eid, ()))) for eid in self.graph.edge_ids}
        object.__setattr__(self, "sigma_e", normalized)
        object.__setattr__(self, "coupling", dict(sorted(self.coupling.items())))

    def shared_edges(self, value: Fraction) -> tuple[str, ...]:
        """
        E_value: edges whose spectrum contains value.
        """
        return tuple(eid for eid, spectrum in self.sigma_e.items() if value in spectrum)

    def kappa(self, value: Fraction) -> int:
        shared = len(self.shared_edges(value))
        return 1 if shared == 0 else shared - 1

    @property
    def multiplicities(self) -> dict[Fraction, int]:
        return {lam: self.kappa(lam) for lam in self.sigma}

    @property
    def edge_values(self) -> tuple[Fraction, ...]:
        """
        Union of all edge spectra.
        """
        return tuple(sorted({mu for spectrum in self.sigma_e.values() for mu in spectrum}))

    @property
    def all_values(self) -> tuple[Fraction, ...]:
        return tuple(sorted(set(self.sigma) | set(self.edge_values)))

    @property
    def is_empty(self) -> bool:
        return not self.sigma and not self.edge_values


@dataclass(frozen=True)
class WeylFunction:
    """
    m_e = -1/l_e + sum over mu in sigma_e of rho_mu (1/(z - mu) + 1/mu), with numerator Q and denominator P
    normalized to P(0) = 1.
    """

    edge: str
    length: Fraction
    residues: dict[Fraction, Fraction]
    numerator: Poly
    denominator: Poly
