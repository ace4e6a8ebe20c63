import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg as la

from ... import config
from .assemble import AssembledSystem


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleSpectrum:
    """
    Finite eigenvalues of K u = lambda M u in increasing order with their eigenvectors over all nodes,
    the energies u.K.u and the mass norms u.M.u.
    """

    values: np.ndarray
    vectors: np.ndarray
    energies: np.ndarray
    mass_norms: np.ndarray

    def clusters(self, gap: float | None = None) -> list[tuple[float, int]]:
        return cluster(self.values, gap)


def generalized_eigen(system: AssembledSystem) -> OracleSpectrum:
    """
    Eliminates the massless nodes by a Schur complement and solves the remaining definite pencil.
    """
    n = system.K.shape[0]
    diag = np.diag(system.M)
    loaded = np.flatnonzero(diag > 0)
    free = np.flatnonzero(diag == 0)
    if loaded.size == 0:
        empty = np.zeros(0)
        return OracleSpectrum(empty, np.zeros((n, 0)), empty, empty)

    K = system.K
    K_ll = K[np.ix_(loaded, loaded)]
    if free.size:
        K_lf = K[np.ix_(loaded, free)]
        coupling = la.solve(K[np.ix_(free, free)], K_lf.T, assume_a="pos")
        K_ll = K_ll - K_lf @ coupling
    values, reduced = la.eigh(K_ll, system.M[np.ix_(loaded, loaded)])

    vectors = np.zeros((n, values.size))
    vectors[loaded, :] = reduced
    if free.size:
        vectors[free, :] = -coupling @ reduced
    energies = np.einsum("ij,ik,kj->j", vectors, K, vectors)
    mass_norms = np.einsum("ij,ik,kj->j", vectors, system.M, vectors)
    logger.debug("Oracle found %d finite eigenvalues", values.size)
    return OracleSpectrum(values, vectors, energies, mass_norms)


def cluster(values: np.ndarray, gap: float | None = None) -> list[tuple[float, int]]:
    """
    Groups sorted eigenvalues whose relative distance to the previous one is below gap.
    """
    gap = config.oracle_cluster_gap if gap is None else gap
    groups: list[list[float]] = []
    for value in np.sort(values):
        if groups and abs(value - groups[-1][-1]) <= gap * abs(value):
            groups[-1].append(float(value))
        else:
            groups.append([float(value)])
    return [(float(np.mean(group)), len(group)) for group in groups]
