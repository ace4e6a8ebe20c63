from fractions import Fraction

import pytest
from python.exceptions import DomainError
from python.models.measure import GraphMeasure
from python.pipelines.approx.pipeline import approximation_sequence, partial_trace
from python.pipelines.approx.probes import probe_integrals, probe_panel
from python.pipelines.approx.truncate import truncate
from python.pipelines.forward.pipeline import export_spectral_data
from python.pipelines.inverse.pipeline import solve
from python.pipelines.roundtrip.random_measure import loaded_measure

from .strategies import unit_star


def test_truncate_below_shared_eigenvalue(symmetric_star):
    truncated = truncate(export_spectral_data(symmetric_star), Fraction(3))
    assert truncated.sigma == (2,)
    assert truncated.edge_values == ()
    assert truncated.coupling == {}


def test_truncated_reconstruction_moves_mass_to_the_centre(symmetric_star):
    measure = solve(truncate(export_spectral_data(symmetric_star), Fraction(3)))
    assert measure == GraphMeasure(graph=unit_star(), central_mass=Fraction(3, 2))


def test_truncate_above_every_eigenvalue_keeps_the_data(symmetric_star):
    data = export_spectral_data(symmetric_star)
    assert truncate(data, Fraction(5)) == data


@pytest.mark.parametrize("cutoff", [Fraction(1), Fraction(2)])
def test_truncate_below_smallest_eigenvalue(symmetric_star, cutoff):
    assert truncate(export_spectral_data(symmetric_star), cutoff).is_empty


@pytest.mark.parametrize("cutoff", [Fraction(0), Fraction(-1)])
def test_truncate_rejects_non_positive_cutoff(symmetric_star, cutoff):
    with pytest.raises(DomainError) as err:
        truncate(export_spectral_data(symmetric_star), cutoff)
    assert err.value.code == "invalid_cutoff"


def test_partial_trace(symmetric_star):
    data = export_spectral_data(symmetric_star)
    assert partial_trace(data, Fraction(3)) == Fraction(1, 2)
    assert partial_trace(data, Fraction(5)) == 1
    assert partial_trace(data, Fraction(1)) == 0


def test_approximation_sequence_of_symmetric_star(symmetric_star):
    report = approximation_sequence(symmetric_star, [Fraction(1), Fraction(3), Fraction(5)], jobs=1)
    assert list(report.frame["trace"]) == [0, Fraction(1, 2), 1]
    assert list(report.frame["partial_sum"]) == list(report.frame["trace"])
    assert list(report.frame["central_mass"]) == [0, Fraction(3, 2), 0]
    assert list(report.frame["masses_e1"]) == [0, 0, 1]
    assert report.measures[Fraction(1)].is_empty
    assert report.measures[Fraction(5)] == symmetric_star


@pytest.mark.parametrize("cutoffs", [[Fraction(3), Fraction(3)], [Fraction(5), Fraction(3)]])
def test_approximation_sequence_rejects_unordered_cutoffs(symmetric_star, cutoffs):
    with pytest.raises(DomainError):
        approximation_sequence(symmetric_star, cutoffs, jobs=1)


@pytest.mark.parametrize("seed", range(3))
def test_approximation_sequence_of_loaded_strings(seed):
    measure = loaded_measure(seed, 2, 3)
    values = export_spectral_data(measure).all_values
    largest = max(values)
    cutoffs = [largest / 4, largest / 2, largest + 1]
    report = approximation_sequence(measure, cutoffs, jobs=1)
    assert len(report.frame) == 3
    assert list(report.frame["masses_e1"])[-1] == 3
    assert list(report.frame["masses_e2"])[-1] == 3


def test_probe_panel(single_mass_star):
    panel = probe_panel(single_mass_star.graph)
    assert len(panel) == 3 * 3 + 1
    integrals = probe_integrals(single_mass_star, panel)
    # the midpoint hat of e1 is 1 there and T(e1, 1/2) = 1/3
    assert integrals["probe_e1_1/2"] == Fraction(1, 3)
    assert integrals["probe_e1_1/4"] == 0
    assert integrals["probe_e2_1/2"] == 0
    # cap Y/L at the midpoint is 1/2
    assert integrals["probe_cap"] == Fraction(1, 6)


def test_truncation_of_a_heavily_loaded_star():
    measure = loaded_measure(0, 3, 10)
    data = export_spectral_data(measure)
    largest = max(data.all_values)
    report = approximation_sequence(measure, [min(data.sigma) / 2, largest / 2, largest + 1], jobs=1)
    assert list(report.frame["trace"])[0] == 0
    assert report.measures[largest + 1].mass_count == 30
