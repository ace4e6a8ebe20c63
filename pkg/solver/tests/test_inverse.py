from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from python import config
from python.common.deviation import max_deviation, measure_deviation
from python.common.poly import coefficients, evaluate
from python.common.polyrat import RatFun
from python.exceptions import ValidationFailed
from python.models.measure import EdgeMeasure, GraphMeasure, PointMass
from python.models.spectral import CouplingMatrix, SpectralData
from python.pipelines.forward.pipeline import export_spectral_data
from python.pipelines.forward.transfer import dot_P, edge_transfer
from python.pipelines.inverse.continued_fraction import stieltjes_cf_reconstruct
from python.pipelines.inverse.exceptions import ContinuedFractionError
from python.pipelines.inverse.pipeline import pipeline, solve
from python.pipelines.inverse.regularity import (
    perturb_coupling,
    regularity_profile,
    regularity_sum,
    uniqueness_profile,
)
from python.pipelines.inverse.residues import central_mass, residues_eta
from python.pipelines.inverse.validate import snap_to_matches, validate_spectral_data
from python.pipelines.inverse.weyl import edge_weyl_functions, weyl_function
from python.pipelines.roundtrip.random_measure import loaded_measure

from .strategies import measures, unit_star


def symmetric_data(coupling: CouplingMatrix | None = None) -> SpectralData:
    return SpectralData(
        graph=unit_star(),
        sigma=(Fraction(2), Fraction(4)),
        sigma_e={"e1": (Fraction(4),), "e2": (Fraction(4),), "e3": (Fraction(4),)},
        coupling={Fraction(4): coupling or CouplingMatrix("e1", {"e2": Fraction(1), "e3": Fraction(1)})},
    )


def single_mass_data() -> SpectralData:
    return SpectralData(graph=unit_star(), sigma=(Fraction(3),), sigma_e={"e1": (Fraction(4),)})


def central_data() -> SpectralData:
    return SpectralData(graph=unit_star(), sigma=(Fraction(3),))


def codes(violations) -> set[str]:
    return {violation.code for violation in violations}


def test_validate_symmetric_data():
    assert validate_spectral_data(symmetric_data()) == []


def test_validate_eigenvalue_on_one_edge():
    data = SpectralData(graph=unit_star(), sigma=(Fraction(4),), sigma_e={"e1": (Fraction(4),)})
    assert "kappa_zero" in codes(validate_spectral_data(data))


def test_validate_rejects_missing_interlacing():
    data = SpectralData(
        graph=unit_star(), sigma=(Fraction(5),), sigma_e={"e1": (Fraction(4),), "e2": (Fraction(4),)}
    )
    assert "herglotz" in codes(validate_spectral_data(data))


def test_validate_rejects_edge_values_without_graph_spectrum():
    data = SpectralData(graph=unit_star(), sigma_e={"e1": (Fraction(4),)})
    assert "herglotz" in codes(validate_spectral_data(data))


def test_validate_coupling_outside_class():
    bad = CouplingMatrix("e1", {"e2": Fraction(-1), "e3": Fraction(1)})
    assert "coupling_not_positive" in codes(validate_spectral_data(symmetric_data(bad)))


def test_validate_coupling_over_wrong_edges():
    partial = CouplingMatrix("e1", {"e2": Fraction(1)})
    assert "coupling_edges" in codes(validate_spectral_data(symmetric_data(partial)))


def test_validate_non_positive_values():
    data = SpectralData(graph=unit_star(), sigma=(Fraction(-1),))
    assert codes(validate_spectral_data(data)) == {"non_positive_value"}


def test_residues_eta():
    assert residues_eta(symmetric_data()) == {4: Fraction(1, 12)}
    assert residues_eta(single_mass_data()) == {4: Fraction(1, 4)}
    assert residues_eta(SpectralData(graph=unit_star())) == {}


def test_central_mass():
    assert central_mass(central_data()) == 1
    assert central_mass(symmetric_data()) == 0
    assert central_mass(SpectralData(graph=unit_star())) == 0


def test_weyl_functions_of_symmetric_data():
    weyl = edge_weyl_functions(symmetric_data())
    ec = edge_transfer("e1", Fraction(1), EdgeMeasure((PointMass(Fraction(1, 2), Fraction(1)),)))
    for function in weyl.values():
        assert function.residues == {4: -4}
        assert RatFun.from_polys(function.numerator, function.denominator) == RatFun.from_polys(ec.Q, ec.P)


def test_weyl_function_of_unshared_eigenvalue():
    weyl = edge_weyl_functions(single_mass_data())
    assert weyl["e1"].residues == {4: -4}
    assert coefficients(weyl["e2"].numerator) == [-1]
    assert coefficients(weyl["e2"].denominator) == [1]


def test_continued_fraction_midpoint():
    m = weyl_function("e", Fraction(1), {Fraction(4): Fraction(-4)})
    assert stieltjes_cf_reconstruct(m, Fraction(1)) == EdgeMeasure((PointMass(Fraction(1, 2), Fraction(1)),))


def test_continued_fraction_bare_string():
    m = weyl_function("e", Fraction(2), {})
    assert stieltjes_cf_reconstruct(m, Fraction(2)) == EdgeMeasure()


def test_continued_fraction_length_mismatch():
    m = weyl_function("e", Fraction(1), {Fraction(4): Fraction(-4)})
    with pytest.raises(ContinuedFractionError):
        stieltjes_cf_reconstruct(m, Fraction(2))


@given(
    x=st.fractions(min_value=Fraction(1, 50), max_value=Fraction(49, 50), max_denominator=50),
    m=st.fractions(min_value=Fraction(1, 20), max_value=20, max_denominator=20),
)
@settings(max_examples=100, deadline=None)
def test_continued_fraction_recovers_one_mass(x, m):
    masses = EdgeMeasure((PointMass(x, m),))
    ec = edge_transfer("e", Fraction(1), masses)
    mu = 1 / (m * x * (1 - x))
    rho = evaluate(ec.Q, mu) / dot_P(ec, mu)
    weyl = weyl_function("e", Fraction(1), {mu: rho})
    assert stieltjes_cf_reconstruct(weyl, Fraction(1)) == masses


def test_solve_symmetric_data(symmetric_star):
    assert solve(symmetric_data()) == symmetric_star


def test_solve_central_data(central_star):
    assert solve(central_data()) == central_star


def test_solve_single_mass_data(single_mass_star):
    assert solve(single_mass_data()) == single_mass_star


def test_solve_empty_data(empty_star):
    assert solve(SpectralData(graph=unit_star())) == empty_star


def test_pipeline_rejects_invalid_data():
    data = SpectralData(graph=unit_star(), sigma=(Fraction(4),), sigma_e={"e1": (Fraction(4),)})
    with pytest.raises(ValidationFailed) as err:
        pipeline(data)
    assert "kappa_zero" in codes(err.value.violations)
    assert err.value.exit_code == 1


def test_pipeline_reports_uniqueness():
    result = pipeline(symmetric_data())
    assert result.eta == {4: Fraction(1, 12)}
    assert not result.uniqueness.measure
    assert pipeline(single_mass_data()).uniqueness.measure


def test_regularity_sum():
    data = symmetric_data()
    assert [regularity_sum(data, eid) for eid in ("e1", "e2", "e3")] == [Fraction(1, 4)] * 3
    assert regularity_sum(single_mass_data(), "e1") == Fraction(1, 4)
    assert regularity_sum(single_mass_data(), "e2") == 0


def test_regularity_profile_matches_eigenfunction_norms():
    report = regularity_profile(symmetric_data(), "e1", h1_norms={Fraction(4): Fraction(1)})
    assert report.norm_sum == report.regularity_sum == Fraction(1, 4)
    assert report.bound_lhs == Fraction(1, 4)
    assert report.bound_rhs == Fraction(3, 4)


def test_uniqueness_profile():
    profile = uniqueness_profile(single_mass_data())
    assert profile.edges == {"e1": True, "e2": True, "e3": True}
    assert profile.central_mass
    assert not uniqueness_profile(symmetric_data()).edges["e2"]


def test_spectra_alone_do_not_determine_the_measure():
    coupling = CouplingMatrix("e1", {"e2": Fraction(4), "e3": Fraction(1, 4)})
    measure = solve(symmetric_data(coupling))
    expected = GraphMeasure(
        graph=unit_star(),
        edge_measures={
            "e1": EdgeMeasure((PointMass(Fraction(7, 11), Fraction(121, 112)),)),
            "e2": EdgeMeasure((PointMass(Fraction(7, 8), Fraction(16, 7)),)),
            "e3": EdgeMeasure((PointMass(Fraction(7, 23), Fraction(529, 448)),)),
        },
    )
    assert measure == expected

    data = export_spectral_data(measure)
    reference = symmetric_data()
    assert data.sigma == reference.sigma
    assert data.sigma_e == reference.sigma_e
    assert data.coupling[4] == coupling
    assert data.coupling[4] != reference.coupling[4]


def test_perturbed_coupling_changes_the_measure(symmetric_star):
    perturbed = perturb_coupling(symmetric_data(), Fraction(4), "e2", Fraction(2))
    measure = solve(perturbed)
    assert measure != symmetric_star
    data = export_spectral_data(measure)
    assert (data.sigma, data.sigma_e) == (symmetric_data().sigma, symmetric_data().sigma_e)
    assert data.coupling == perturbed.coupling


def test_snap_to_matches():
    near = Fraction(4) + Fraction(1, 10**12)
    data = SpectralData(
        graph=unit_star(),
        sigma=(Fraction(2), Fraction(4)),
        sigma_e={"e1": (Fraction(4),), "e2": (near,), "e3": (Fraction(4),)},
        coupling={Fraction(4): CouplingMatrix("e1", {"e2": Fraction(1), "e3": Fraction(1)})},
    )
    assert validate_spectral_data(data) != []
    assert snap_to_matches(data, Fraction(1, 10**9)) == symmetric_data()


@given(measures(max_edges=3, max_masses=2))
@settings(max_examples=15, deadline=None)
def test_spectral_roundtrip(measure):
    data = export_spectral_data(measure)
    if data.exact:
        assert solve(data) == measure
        assert export_spectral_data(solve(data)) == data


def test_heavily_loaded_star_is_reconstructed_within_tolerance():
    measure = loaded_measure(0, 3, 10)
    data = export_spectral_data(measure)
    reconstructed = solve(data)
    assert reconstructed.mass_count == 30
    assert max_deviation(measure_deviation(measure, reconstructed)) <= config.roundtrip_rel_tol
