import math

import numpy as np
import pytest

import adiasearch as ad


def test_spectrum_closed_forms():
    assert ad.gap(0.5, 4.0) == pytest.approx(0.5, abs=1e-15)
    pt = ad.spectral_point(0.5, 4.0)
    assert pt.alpha == pytest.approx(math.sqrt(3) / 2, abs=1e-15)
    assert pt.alpha**2 + pt.beta**2 == pytest.approx(1.0, abs=1e-12)
    assert ad.invert_ideal_probability(ad.ideal_marked_probability(0.3, 64.0), 64.0) == pytest.approx(0.3, abs=1e-12)


def test_domain_errors_become_value_errors():
    with pytest.raises(ValueError):
        ad.gap(1.5, 4.0)
    with pytest.raises(ValueError):
        ad.SearchInstance(0, 0.1)
    with pytest.raises(ValueError):
        ad.time_to_probability(0.3, 16.0, 0.1, ad.ErrorModelKind.Sqrt)


def test_schedules_and_grover_agree():
    for tau in np.linspace(0.0, 1.0, 11):
        assert abs(ad.ideal_q_of_tau(ad.ScheduleKind.Original, tau, 256.0) - ad.grover_q_of_tau(tau, 256.0)) <= 1e-12
    assert ad.duration(ad.ScheduleKind.Proposed, 2.0, 0.5) == pytest.approx(4.0)


def test_simulate_returns_columns():
    traj = ad.simulate(ad.ScheduleKind.Proposed, ad.SearchInstance(6, 0.05), grid_points=201)
    assert set(traj) == {"tau", "s", "p", "eps_exact", "norm_residual"}
    assert traj["p"].shape == (201,)
    assert traj["p"][0] == pytest.approx(1 / 64, abs=1e-15)
    assert np.max(np.abs(traj["norm_residual"])) <= 1e-9
    full = ad.full_simulate(6, 5, ad.ScheduleKind.Proposed, 0.05, grid_points=201)
    assert np.max(np.abs(full["p"] - traj["p"])) <= 1e-8


def test_protocol_and_resources():
    params = ad.protocol_params(ad.SearchInstance(6, 0.1), 0.3)
    outcome = ad.run_protocol(params, 20000, 11)
    assert outcome.p_exact >= 0.3 - 1e-6
    sigma = math.sqrt(outcome.p_exact * (1 - outcome.p_exact) / 20000)
    assert abs(outcome.empirical_frequency - outcome.p_exact) <= 3 * sigma
    assert ad.required_runs(0.3, math.exp(-1)) == 4
    budget = ad.ResourceBudget(S=None, t_c=500.0, alpha=0.01, c=1.0)
    assert ad.overall_runtime(budget, ad.SearchInstance(10, 0.1)) == pytest.approx(501.0)


def test_crossing_and_missing_crossing():
    result = ad.crossing_time(1024.0, k=0.1)
    assert result.residual <= 1e-9
    assert result.lo < result.tau_cross < result.hi
    with pytest.raises(ad.NoCrossingError):
        ad.crossing_time(1024.0, k=1.0)
    assert issubclass(ad.NoCrossingError, RuntimeError)
