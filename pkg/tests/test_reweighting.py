import numpy as np
import pytest

from sarakit.dictionary import make_dictionary
from sarakit.errors import NonPositiveGamma
from sarakit.measurement import MeasurementOperator
from sarakit.reweighting import (SaraConfig, sara_reconstruct, sigma_alpha,
                                 update_weights)
from sarakit.solver import SolverConfig, solve_weighted_l1

rng = np.random.default_rng(5)


def identity_operator(side):
    n = side * side
    return MeasurementOperator(
        forward=lambda x: np.asarray(x, dtype=float).ravel().astype(complex),
        adjoint=lambda y: np.asarray(y).real,
        m=n, n=n, kind="dense", shape=(side, side))


def test_sigma_alpha_values():
    assert sigma_alpha(100, 100, 3.0) == 3.0
    assert sigma_alpha(50, 400, 0.0) == 0.0
    assert sigma_alpha(100, 400, 2.0) == 1.0


def test_update_weights_law():
    gamma = 0.5
    alpha = np.array([0.0, 0.5, 50.0, -0.5])
    w = update_weights(alpha, gamma)
    assert w[0] == 1.0
    assert w[1] == 0.5
    assert w[3] == 0.5
    assert 0 < w[2] < 0.01
    assert np.all((w > 0) & (w <= 1))
    # monotone decreasing in |alpha|
    mags = np.linspace(0, 10, 50)
    assert np.all(np.diff(update_weights(mags, gamma)) < 0)
    with pytest.raises(NonPositiveGamma):
        update_weights(alpha, 0.0)


def test_config_validation():
    with pytest.raises(ValueError):
        SaraConfig(epsilon=0.1, sigma_alpha=0.0, beta=1.5)
    with pytest.raises(ValueError):
        SaraConfig(epsilon=0.1, sigma_alpha=0.0, eta=0.0)
    with pytest.raises(ValueError):
        SaraConfig(epsilon=0.1, sigma_alpha=0.0, n_max=0)
    cfg = SaraConfig(epsilon=0.1, sigma_alpha=0.0)
    assert cfg.beta == 1e-1 and cfg.eta == 1e-3
    assert cfg.solver.epsilon == 0.1


def _small_problem():
    side = 8
    op = identity_operator(side)
    dict_ = make_dictionary("db1,db2", (side, side), levels=2)
    x = np.zeros((side, side))
    x[2:5, 2:5] = 1.0
    x[6, 1] = 2.0
    y = op.forward(x)
    return op, dict_, x, y


def test_singleton_feasible_set_stops_after_one_reweight():
    op, dict_, x, y = _small_problem()
    solver_cfg = SolverConfig(epsilon=0.0, max_iters=5000, rel_tol=1e-8, feas_tol=1e-8)
    cfg = SaraConfig(epsilon=0.0, sigma_alpha=1e-6, solver=solver_cfg)
    x_hat, trace = sara_reconstruct(y, op, dict_, cfg)
    assert np.max(np.abs(x_hat - x)) < 1e-4
    assert trace.last_rho() <= cfg.eta
    assert len(trace.rows) <= 3


def test_gamma_schedule_exact():
    op, dict_, x, y = _small_problem()
    solver_cfg = SolverConfig(epsilon=0.0, max_iters=60, rel_tol=1e-12, feas_tol=1e-12)
    sa = 1e-4
    # eta tiny so the loop runs all n_max iterations
    cfg = SaraConfig(epsilon=0.0, sigma_alpha=sa, eta=1e-12, n_max=6, solver=solver_cfg)
    _, trace = sara_reconstruct(y, op, dict_, cfg)
    gammas = trace.gammas()
    gamma0 = gammas[0]
    # the recurrence gamma_t = max(beta*gamma_{t-1}, floor) holds exactly
    for g_prev, g in zip(gammas, gammas[1:]):
        assert g == max(cfg.beta * g_prev, sa)
    # and matches the closed form up to float rounding
    for t, g in enumerate(gammas):
        assert np.isclose(g, max(cfg.beta ** t * gamma0, sa), rtol=1e-12), f"t={t}"
    assert all(g2 <= g1 for g1, g2 in zip(gammas, gammas[1:]))
    assert all(g >= sa for g in gammas[1:])
    # solve count bound: init + at most n_max-1 reweighted solves
    assert len(trace.rows) <= cfg.n_max + 1


def test_nmax_one_equals_unweighted_solve():
    op, dict_, x, y = _small_problem()
    solver_cfg = SolverConfig(epsilon=0.0, max_iters=2000, rel_tol=1e-8, feas_tol=1e-8)
    cfg = SaraConfig(epsilon=0.0, sigma_alpha=1e-6, n_max=1, solver=solver_cfg)
    x_hat, trace = sara_reconstruct(y, op, dict_, cfg)
    assert len(trace.rows) == 1
    direct = solve_weighted_l1(y, op, dict_, np.ones(dict_.n_coeffs), solver_cfg)
    assert np.array_equal(x_hat, direct.x_hat)


def test_reconstruction_deterministic():
    op, dict_, x, y = _small_problem()
    solver_cfg = SolverConfig(epsilon=0.0, max_iters=300)
    cfg = SaraConfig(epsilon=0.0, sigma_alpha=1e-6, n_max=3, solver=solver_cfg)
    x1, t1 = sara_reconstruct(y, op, dict_, cfg)
    x2, t2 = sara_reconstruct(y, op, dict_, cfg)
    assert np.array_equal(x1, x2)
    assert t1.rows == t2.rows


def test_trace_csv(tmp_path):
    op, dict_, x, y = _small_problem()
    solver_cfg = SolverConfig(epsilon=0.0, max_iters=100)
    cfg = SaraConfig(epsilon=0.0, sigma_alpha=1e-6, n_max=2, solver=solver_cfg)
    _, trace = sara_reconstruct(y, op, dict_, cfg)
    path = tmp_path / "trace.csv"
    trace.write_csv(path)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "t,gamma,rho,objective,inner_iters"
    assert len(lines) == len(trace.rows) + 1
