import json
import math

import numpy as np
import pytest

import _rbmle as rb


def test_spd_roundtrip():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(4, 4))
    m = a @ a.T + np.eye(4)
    minv = rb.spd_inverse(m)
    assert np.allclose(m @ minv, np.eye(4), atol=1e-8)

    x = rng.normal(size=4)
    updated = rb.rank_one_inverse_update(minv, x)
    assert np.allclose(updated, np.linalg.inv(m + np.outer(x, x)), atol=1e-8)
    assert rb.quad_form(minv, x) == pytest.approx(x @ minv @ x)


def test_link_functions():
    logistic = rb.LinkFunction.logistic(1.0)
    assert logistic.mu(0.0) == pytest.approx(0.5)
    assert logistic.kappa_mu == pytest.approx(0.196612, abs=1e-5)
    identity = rb.LinkFunction.identity()
    assert identity.mu(-0.7) == pytest.approx(-0.7)


def test_linear_state_and_index():
    state = rb.LinearPolicyState(2, 1.0)
    x = np.array([0.6, 0.8])
    assert rb.lin_rbmle_index(state, x, 1.0) == pytest.approx(0.5)
    rb.update_linear(state, np.array([1.0, 0.0]), 2.0)
    assert state.theta_hat == pytest.approx([1.0, 0.0])

    biased = rb.closed_form_biased_estimate(state, x, 1.5)
    vinv = state.vinv
    assert np.allclose(biased, vinv @ (np.array([2.0, 0.0]) + 1.5 * x))


def test_glm_solve_empty_history():
    state = rb.GlmPolicyState(3, 4, 2.0, rb.LinkFunction.logistic(1.0))
    x = np.array([0.6, 0.0, 0.8])
    theta = rb.glm_rbmle_arm_solve(state, x, 3.0)
    assert np.allclose(theta, 1.5 * x)


def test_bounds():
    params = rb.BoundParams()
    params.dim = 3
    params.lambda_ = 1.0
    params.sigma = 1.0
    params.delta = 0.1
    assert rb.g0(99, params) == pytest.approx(
        math.sqrt(3.0 * math.log(1000.0)) + 1.0)
    assert rb.linear_regret_bound(1000, params) > 0.0


def test_run_experiment_json_deterministic():
    config = {
        "num_arms": 3,
        "dim": 2,
        "horizon": 30,
        "trials": 2,
        "theta_star": [0.6, -0.8],
        "context_mode": "static",
        "link": "identity",
        "seed": 46,
        "record_every": 5,
        "policies": [
            {"name": "lin-rbmle", "params": {}},
            {"name": "oracle", "params": {}},
        ],
    }
    text = json.dumps(config)
    first = rb.run_experiment_json(text, threads=1, timing=False)
    second = rb.run_experiment_json(text, threads=2, timing=False)
    assert first == second
    by_policy = {s["policy"]: s for s in first}
    assert by_policy["oracle"]["mean"] == 0.0
    assert by_policy["lin-rbmle"]["mean"] >= 0.0


def test_preset_config_json():
    config = json.loads(rb.preset_config_json("fig2a"))
    assert config["seed"] == 46
    assert config["horizon"] == 30000


def test_summarize():
    s = rb.summarize([1.0, 2.0, 3.0, 4.0])
    assert s["mean"] == pytest.approx(2.5)
    assert s["std"] == pytest.approx(math.sqrt(1.25))
    assert s["quantiles"][2] == pytest.approx(2.5)
