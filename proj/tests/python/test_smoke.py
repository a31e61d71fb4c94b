"""Smoke tests for the python bindings: thin checks that the module loads and
the main operations round numbers through correctly; the heavy numerical
validation lives in the C++ suites."""

import math

import pytest

import phtun


def test_version_string():
    assert phtun.__version__ == "0.1.0"


def test_base_probability_balanced_point():
    config = phtun.TunnelingConfig(gamma=0.0, tau=math.pi / 4.0)
    assert phtun.base_probability(config) == pytest.approx(0.5, abs=1e-12)
    assert phtun.q_factor(config) == 1.0


def test_transfer_matrix_is_unitary():
    tm = phtun.transfer_matrix(phtun.TunnelingConfig(gamma=2.0, tau=0.9))
    assert abs(tm.u) ** 2 + abs(tm.v) ** 2 == pytest.approx(1.0, abs=1e-12)


def test_single_photon_enhancement_value():
    assert phtun.prob_one_photon(1, 1.0 / 3.0) == pytest.approx(4.0 / 9.0, abs=1e-14)


def test_peak_location_and_value():
    peak = phtun.peak_multi(1, 1)
    assert peak.p_star == pytest.approx(0.5, abs=1e-15)
    assert peak.value == pytest.approx(0.5, abs=1e-14)


def test_pair_state_never_splits_at_balanced_point():
    pair = phtun.TwoModeFockState.basis(1, 1)
    tm = phtun.transfer_matrix(phtun.TunnelingConfig(gamma=0.0, tau=math.pi / 4.0))
    assert phtun.outcome_probability(pair, tm, 1) < 1e-14


def test_evolution_matches_oracle_distribution():
    state = phtun.TwoModeFockState.basis(2, 3)
    tm = phtun.transfer_matrix(phtun.TunnelingConfig(gamma=0.5, tau=1.1))
    evolved = phtun.evolve_fock(state, tm)
    dist = phtun.oracle_distribution(state, 0.5, 1.1)
    for k, amp in enumerate(evolved.amplitudes):
        assert abs(amp) ** 2 == pytest.approx(dist[k], abs=1e-10)


def test_coherent_ensemble_closure():
    dist = phtun.coherent_pmf(10.0)
    assert sum(w for _, w in dist.weights) == pytest.approx(1.0, abs=1e-10)
    assert phtun.weighted_sum(dist, 1, 0.3) == pytest.approx(
        phtun.prob_coherent(1, 10.0, 0.3), abs=1e-10
    )


def test_squeezed_weights_are_even_only():
    dist = phtun.squeezed_pmf(10.0)
    assert all(n % 2 == 0 for n, _ in dist.weights)
    assert phtun.prob_squeezed(1, 10.0, 1.0) == pytest.approx(
        1.0 / math.sqrt(11.0), abs=1e-13
    )


def test_series_error_is_raised_for_over_range_input():
    with pytest.raises(phtun.SeriesError):
        phtun.prob_coherent(1, 1e6, 0.1)


def test_run_verification_reports_all_checks():
    results = phtun.run_verification()
    assert len(results) >= 15
    assert all(r.passed for r in results)
