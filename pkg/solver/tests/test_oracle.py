import numpy as np
import pytest
from python.pipelines.oracle.assemble import CENTRE, assemble, assemble_edge
from python.pipelines.oracle.compare import compare, rank_matches
from python.pipelines.oracle.eigen import cluster, generalized_eigen
from python.pipelines.roundtrip.random_measure import random_measure


def test_assemble_single_mass(single_mass_star):
    system = assemble(single_mass_star)
    assert system.nodes[0] == (CENTRE, 0)
    np.testing.assert_allclose(system.K, [[4, -2], [-2, 4]])
    np.testing.assert_allclose(system.M, [[0, 0], [0, 1]])
    assert system.rank == 1


def test_assemble_empty_measure(empty_star):
    system = assemble(empty_star)
    np.testing.assert_allclose(system.K, [[3]])
    np.testing.assert_allclose(system.M, [[0]])
    assert generalized_eigen(system).values.size == 0


def test_assemble_central_mass(central_star):
    system = assemble(central_star)
    np.testing.assert_allclose(system.K, [[3]])
    np.testing.assert_allclose(system.M, [[1]])
    np.testing.assert_allclose(generalized_eigen(system).values, [3])


def test_eigen_single_mass(single_mass_star):
    spectrum = generalized_eigen(assemble(single_mass_star))
    np.testing.assert_allclose(spectrum.values, [3], rtol=1e-12)
    np.testing.assert_allclose(spectrum.energies, spectrum.values * spectrum.mass_norms, rtol=1e-12)


def test_eigen_symmetric_star(symmetric_star):
    spectrum = generalized_eigen(assemble(symmetric_star))
    np.testing.assert_allclose(spectrum.values, [2, 4, 4], rtol=1e-12)
    assert [count for _, count in spectrum.clusters()] == [1, 2]


def test_edge_system_is_clamped(symmetric_star):
    system = assemble_edge("e1", symmetric_star.graph.length("e1"), symmetric_star.on("e1"))
    np.testing.assert_allclose(system.K, [[4]])
    np.testing.assert_allclose(generalized_eigen(system).values, [4])


def test_cluster():
    assert cluster(np.array([1.0, 2.0, 2.0 + 1e-9, 5.0])) == [(1.0, 1), (pytest.approx(2.0), 2), (5.0, 1)]
    assert cluster(np.array([])) == []


def test_compare_symmetric_star(symmetric_star):
    report = compare(symmetric_star)
    assert report.passed
    assert report.max_deviation < 1e-12
    graph_rows = report.frame[report.frame["scope"] == "graph"]
    assert list(graph_rows["kappa"]) == [1, 2, 2]
    assert list(graph_rows["oracle_kappa"]) == [1, 2, 2]


def test_compare_empty_measure(empty_star):
    report = compare(empty_star)
    assert report.passed
    assert len(report.frame) == 0


@pytest.mark.parametrize("seed", range(100))
def test_oracle_agrees_on_random_measures(seed):
    measure = random_measure(seed)
    assert rank_matches(measure)
    assert compare(measure).passed
