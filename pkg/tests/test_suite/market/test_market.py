import math
import pytest
import numpy as np
import pyenlarge
from pyenlarge.market import (MarketModel,
                              bridge_extremes,
                              brownian_path_from_increments,
                              poisson_path_from_jump_times,
                              simulate,
                              simulate_brownian,
                              simulate_poisson,
                              simulate_ensemble,
                              write_paths_csv,
                              local_time_increments,
                              estimate_local_time,
                              effective_horizon,
                              brownian_level_tail,
                              two_jump_tail,
                              LOCAL_TIME_OCCUPATION)
from pyenlarge.exceptions import EnlargeParameterException, EnlargeContractException

# globals
BROWNIAN = MarketModel(kind=pyenlarge.MODEL_BROWNIAN, sigma=0.3)
POISSON = MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=0.5)


@pytest.mark.market
def test_create_market_models():
    assert BROWNIAN.is_brownian and not BROWNIAN.is_poisson
    assert POISSON.is_poisson and POISSON.s0 == 1.0
    assert POISSON.alpha == pytest.approx(math.log(1.5))
    assert POISSON.mu == pytest.approx(0.5 / math.log(1.5))
    assert POISSON.theta == pytest.approx(0.5 / math.log(1.5) - 1.0)


@pytest.mark.market
@pytest.mark.parametrize("kwargs", [
    dict(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=-1.0),
    dict(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=0.0),
    dict(kind=pyenlarge.MODEL_POISSON, lam=0.0, psi=0.5),
    dict(kind=pyenlarge.MODEL_BROWNIAN),
    dict(kind=pyenlarge.MODEL_BROWNIAN, sigma=0.3, psi=0.5),
    dict(kind=pyenlarge.MODEL_BROWNIAN, sigma=0.3, s0=-1.0),
    dict(kind="heston", sigma=0.3),
])
def test_create_invalid_market_models(kwargs):
    with pytest.raises(ValueError):
        MarketModel(**kwargs)


@pytest.mark.market
def test_model_hash_is_stable():
    assert POISSON.model_hash() == MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=0.5).model_hash()
    assert POISSON.model_hash() != MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=0.25).model_hash()


@pytest.mark.market
def test_bridge_extremes_without_excursion():
    x0 = np.array([0.0, 1.0])
    x1 = np.array([1.0, -2.0])
    hi, lo = bridge_extremes(x0, x1, 0.1, np.ones(2))
    assert np.allclose(hi, [1.0, 1.0])
    assert np.allclose(lo, [0.0, -2.0])


@pytest.mark.market
def test_brownian_path_from_increments():
    dw = np.array([0.1, -0.2, 0.05, 0.3])
    dt = 0.25
    path = brownian_path_from_increments(BROWNIAN, dt, dw)
    expected = np.exp(np.concatenate([[0.0], np.cumsum(0.3 * dw - 0.5 * 0.09 * dt)]))
    assert np.allclose(path.s, expected)
    assert np.allclose(path.driver, np.concatenate([[0.0], np.cumsum(dw)]))
    assert path.grid[-1] == pytest.approx(1.0)
    assert path.dt == pytest.approx(dt)
    assert np.allclose(path.s_star, np.maximum.accumulate(expected))
    assert np.all(path.s_star_refined >= path.s_star - 1e-15)


@pytest.mark.market
def test_simulate_brownian_grid_ends_at_horizon():
    path = simulate_brownian(BROWNIAN, 1.0, 0.3, seed=3)
    assert path.n_points == 5
    assert path.grid[-1] == pytest.approx(1.0)
    assert path.dt == pytest.approx(0.25)
    assert path.index_of(0.5) == 2
    with pytest.raises(EnlargeParameterException):
        path.index_of(0.3)


@pytest.mark.market
def test_simulate_brownian_bad_parameters():
    with pytest.raises(EnlargeParameterException):
        simulate_brownian(BROWNIAN, 1.0, 2.0, seed=0)
    with pytest.raises(EnlargeParameterException):
        simulate_brownian(BROWNIAN, -1.0, 0.1, seed=0)
    with pytest.raises(EnlargeParameterException):
        simulate(BROWNIAN, 1.0, seed=0)


@pytest.mark.market
def test_poisson_path_from_jump_times():
    path = poisson_path_from_jump_times(POISSON, [0.5, 1.2, 3.0], 2.0)
    assert np.allclose(path.grid, [0.0, 0.5, 1.2, 2.0])
    assert np.allclose(path.jump_times, [0.5, 1.2])
    assert np.allclose(path.driver, [0.0, 1.0, 2.0, 2.0])
    expected = np.exp(-0.5 * path.grid) * 1.5**np.array([0, 1, 2, 2])
    assert np.allclose(path.s, expected)
    assert path.left_value_at(0.5) == pytest.approx(math.exp(-0.25))
    assert path.value_at(0.5) == pytest.approx(1.5 * math.exp(-0.25))
    assert path.value_at(1.0) == pytest.approx(1.5 * math.exp(-0.5))
    assert path.n_at(1.2) == 2 and path.n_before(1.2) == 1
    assert path.y_at(1.0) == pytest.approx(POISSON.mu - 1.0)
    assert path.next_jump_after(0.5) == pytest.approx(1.2)
    assert path.next_jump_after(1.2) is None
    assert path.segments(0.0, 2.0) == [(0.0, 0.5, True), (0.5, 1.2, True), (1.2, 2.0, False)]


@pytest.mark.market
def test_poisson_supremum_with_negative_jumps():
    model = MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=-0.5)
    path = poisson_path_from_jump_times(model, [1.0], 2.0)
    # the price drifts up to the jump, so the supremum is the left limit at 1
    assert path.sup_at(1.5) == pytest.approx(math.exp(0.5))
    assert path.sup_left_at(1.0) == pytest.approx(math.exp(0.5))


@pytest.mark.market
def test_poisson_path_bad_jump_times():
    with pytest.raises(EnlargeParameterException):
        poisson_path_from_jump_times(POISSON, [1.0, 0.5], 2.0)
    with pytest.raises(EnlargeContractException):
        poisson_path_from_jump_times(BROWNIAN, [0.5], 2.0)


@pytest.mark.market
def test_simulation_is_deterministic(seed):
    a = simulate_poisson(POISSON, 5.0, seed, index=4)
    b = simulate_poisson(POISSON, 5.0, seed, index=4)
    c = simulate_poisson(POISSON, 5.0, seed, index=5)
    assert np.array_equal(a.jump_times, b.jump_times)
    assert not np.array_equal(a.jump_times, c.jump_times)
    assert np.all(a.jump_times <= 5.0)


@pytest.mark.market
def test_ensemble_independent_of_threads(seed):
    serial = simulate_ensemble(BROWNIAN, 12, 1.0, seed, dt=0.05)
    parallel = simulate_ensemble(BROWNIAN, 12, 1.0, seed, dt=0.05, threads=4)
    assert [p.index for p in parallel] == list(range(0, 12))
    for a, b in zip(serial, parallel):
        assert np.array_equal(a.s, b.s)
    with pytest.raises(EnlargeParameterException):
        simulate_ensemble(BROWNIAN, 0, 1.0, seed, dt=0.05)


@pytest.mark.market
def test_paths_are_read_only():
    path = simulate_poisson(POISSON, 1.0, 0)
    with pytest.raises(ValueError):
        path.s[0] = 2.0


@pytest.mark.market
def test_poisson_martingale_mean(seed, n_paths):
    paths = simulate_ensemble(POISSON, max(n_paths, 2000), 1.0, seed)
    values = np.array([p.value_at(1.0) for p in paths])
    se = values.std(ddof=1) / math.sqrt(len(values))
    assert abs(values.mean() - 1.0) < 4.0 * se


@pytest.mark.market
def test_write_paths_csv(tmp_path):
    paths = [poisson_path_from_jump_times(POISSON, [0.5], 1.0, index=i) for i in range(0, 2)]
    filename = str(tmp_path / "paths.csv")
    write_paths_csv(paths, filename)
    with open(filename) as fp:
        lines = fp.read().splitlines()
    assert lines[0] == "path_id,time,S,driver,S_star,Y"
    # three grid points and one left limit row per path
    assert len(lines) == 1 + 2 * 4


@pytest.mark.market
def test_local_time_occupation_estimator():
    x = np.full(11, 2.0)
    increments = local_time_increments(x, 2.0, 0.5, 0.01, eps=0.1, method=LOCAL_TIME_OCCUPATION)
    assert np.allclose(increments, 0.25 * 0.01 / 0.2)


@pytest.mark.market
def test_local_time_downcrossing_estimator():
    x = np.array([1.5, 0.9, 1.5, 1.05, 0.95])
    increments = local_time_increments(x, 1.0, 0.1, 0.01, eps=0.2)
    # two completed downcrossings of [1.0, 1.2]
    assert np.count_nonzero(increments) == 2
    assert increments[0] == pytest.approx(2.0 * (0.2 + 2.0 * 0.5826 * 0.1 * 0.1))
    with pytest.raises(EnlargeContractException):
        local_time_increments(x, 1.0, 0.1, 0.01, method="crossings")


@pytest.mark.market
def test_estimate_local_time_needs_brownian_paths():
    path = simulate_poisson(POISSON, 1.0, 0)
    with pytest.raises(EnlargeContractException):
        estimate_local_time(path, 1.0)
    brownian = simulate_brownian(BROWNIAN, 1.0, 0.01, 0)
    local_time = estimate_local_time(brownian, 1.0)
    assert local_time[0] == 0.0 and np.all(np.diff(local_time) >= 0)


@pytest.mark.market
def test_effective_horizon():
    spec = pyenlarge.RandomTimeSpec(kind=pyenlarge.KIND_CONVEX_COMBO, k1=0.5, k2=0.5)
    horizon = effective_horizon(POISSON, spec, eps=1e-4)
    assert two_jump_tail(POISSON, horizon) < 1e-4
    assert two_jump_tail(POISSON, 0.99 * horizon) > 1e-4
    assert effective_horizon(POISSON, spec, eps=1.0) == 0.0
    assert brownian_level_tail(BROWNIAN, 0.5, 0.0) == 1.0


@pytest.mark.market
def test_effective_horizon_bad_inputs():
    bounded = pyenlarge.RandomTimeSpec(kind=pyenlarge.KIND_POISSON_SUP_UNIT)
    with pytest.raises(EnlargeContractException):
        effective_horizon(POISSON, bounded)
    spec = pyenlarge.RandomTimeSpec(kind=pyenlarge.KIND_MIN_SCALED, a=0.5)
    with pytest.raises(EnlargeParameterException):
        effective_horizon(POISSON, spec, eps=0.0)


@pytest.mark.market
@pytest.mark.parametrize("threads", [1, 3])
def test_ensemble_verbose_output(threads, seed, capsys):
    paths = simulate_ensemble(POISSON, 6, 2.0, seed, threads=threads, verbose=True)
    assert [p.index for p in paths] == list(range(0, 6))
    output = capsys.readouterr().out
    assert "Simulating 6 paths" in output
    assert "Simulation done" in output
