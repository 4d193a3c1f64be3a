import math
import pytest
import numpy as np
import pyenlarge
from pyenlarge.market import poisson_path_from_jump_times, simulate_ensemble
from pyenlarge.random_times import (RandomTimeSpec,
                                   KIND_BROWNIAN_SUP_OVERALL,
                                   KIND_POISSON_LEVEL,
                                   KIND_CONVEX_COMBO,
                                   realize)
from pyenlarge.azema import azema_bundle
from pyenlarge.deflators import (evaluation_times,
                                 g_hat,
                                 deflator_before,
                                 deflator_after,
                                 martingale_test,
                                 verify_deflator,
                                 write_deflator_csv,
                                 X_DRIVER,
                                 DEFLATOR_CSV_HEADER)
from pyenlarge.strategies import WHEN_BEFORE, WHEN_AFTER
from pyenlarge.exceptions import EnlargeContractException, EnlargeParameterException

# globals
BROWNIAN = pyenlarge.MarketModel(kind=pyenlarge.MODEL_BROWNIAN, sigma=1.0)
POSITIVE = pyenlarge.MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=0.5)
CONVEX_COMBO = RandomTimeSpec(kind=KIND_CONVEX_COMBO, k1=0.5, k2=0.5)
HORIZON = 4.0
TIMES = [0.0, 1.0, 1.5, 3.0]


def convex_combo_paths():
    jump_sets = [[1.0, 2.0], [0.5, 1.5, 3.0], [0.2, 0.3]]
    return [poisson_path_from_jump_times(POSITIVE, jumps, HORIZON, index=i) for i, jumps in enumerate(jump_sets)]


@pytest.mark.deflators
def test_evaluation_times():
    times = evaluation_times(convex_combo_paths())
    assert np.allclose(times, [0.0, 1.0, 2.0, 3.0, 4.0])
    with pytest.raises(EnlargeParameterException):
        evaluation_times([])
    with pytest.raises(EnlargeParameterException):
        evaluation_times(convex_combo_paths(), n_times=1)


@pytest.mark.deflators
def test_deflator_before_convex_combo():
    path = poisson_path_from_jump_times(POSITIVE, [1.0, 2.0], HORIZON)
    run = deflator_before(CONVEX_COMBO, POSITIVE, path, times=TIMES)
    assert run.excluded is None
    assert run.tau == pytest.approx(1.5)
    assert run.at(0.0) == 1.0
    assert run.at(1.0) == pytest.approx(1.0)
    # d log L = lam nu^/Z_- dt = -dt between the jumps
    assert run.at(1.5) == pytest.approx(math.exp(-0.5), rel=1e-9)
    assert run.at(3.0) == pytest.approx(math.exp(-0.5), rel=1e-9)
    assert run.positive() is True
    assert np.allclose(run.jump_factors, [1.0])
    assert run.undeflated[-1] == pytest.approx(path.value_at(1.5))
    assert np.allclose(run.deflated, run.l * run.undeflated)
    with pytest.raises(EnlargeParameterException):
        run.at(2.0)


@pytest.mark.deflators
def test_g_hat_driver_is_flat_before_tau():
    path = poisson_path_from_jump_times(POSITIVE, [1.0, 2.0], HORIZON)
    hat = g_hat(CONVEX_COMBO, POSITIVE, path, x=X_DRIVER, times=TIMES)
    assert hat.excluded is None
    assert np.allclose(hat.x_values, [0.0, 0.0, -0.5, -0.5])
    assert np.allclose(hat.x_hat, 0.0, atol=1e-9)


@pytest.mark.deflators
def test_g_hat_contracts():
    path = poisson_path_from_jump_times(POSITIVE, [1.0, 2.0], HORIZON)
    with pytest.raises(EnlargeContractException):
        g_hat(CONVEX_COMBO, POSITIVE, path, x="Q")
    with pytest.raises(EnlargeContractException):
        g_hat(CONVEX_COMBO, POSITIVE, path, when=WHEN_AFTER)


@pytest.mark.deflators
def test_deflator_after_gates():
    path = poisson_path_from_jump_times(POSITIVE, [1.0, 2.0], HORIZON)
    with pytest.raises(EnlargeContractException):
        deflator_after(CONVEX_COMBO, POSITIVE, path)
    with pytest.raises(EnlargeContractException):
        deflator_after(RandomTimeSpec(kind=KIND_BROWNIAN_SUP_OVERALL), BROWNIAN, path)


@pytest.mark.deflators
def test_deflator_after_poisson_level():
    spec = RandomTimeSpec(kind=KIND_POISSON_LEVEL, b=0.5)
    path = poisson_path_from_jump_times(POSITIVE, [0.5, 1.0, 1.5, 3.0], 5.0)
    run = deflator_after(spec, POSITIVE, path)
    assert run.excluded is None
    assert 3.0 < run.tau < 5.0
    assert run.l[0] == 1.0
    assert np.all(np.isfinite(run.l))
    assert run.positive() is True
    for t, value in zip(run.times, run.undeflated):
        if (t <= run.tau):
            assert value == 0.0


@pytest.mark.deflators
def test_deflator_after_undetected_tau():
    spec = RandomTimeSpec(kind=KIND_POISSON_LEVEL, b=0.5)
    path = poisson_path_from_jump_times(POSITIVE, [0.5, 1.0, 1.5, 3.0], 4.0)
    run = deflator_after(spec, POSITIVE, path)
    assert run.excluded == pyenlarge.report.EXCLUDED_TAU_UNDETECTED


@pytest.mark.deflators
@pytest.mark.filterwarnings("ignore::UserWarning")
def test_martingale_test():
    rng = np.random.default_rng(0)
    base = rng.normal(size=50)
    flat = martingale_test(np.column_stack([base, base, base]), [0.0, 1.0, 2.0])
    assert flat.verdict == pyenlarge.VERDICT_PASS
    assert flat.details["worst_sigmas"] == 0.0
    drifting = np.column_stack([base, base + 1.0 + 0.01 * rng.normal(size=50)])
    assert martingale_test(drifting, [0.0, 1.0]).verdict == pyenlarge.VERDICT_FAIL
    informational = martingale_test(drifting, [0.0, 1.0], verdict_on_fail=pyenlarge.VERDICT_INFORMATIONAL)
    assert informational.verdict == pyenlarge.VERDICT_INFORMATIONAL
    assert informational.details["worst_pair"] == [0.0, 1.0]


@pytest.mark.deflators
def test_martingale_test_contracts():
    with pytest.raises(EnlargeContractException):
        martingale_test(np.zeros((10, 1)), [0.0])
    with pytest.raises(EnlargeContractException):
        martingale_test(np.zeros((10, 3)), [0.0, 1.0])


@pytest.mark.deflators
def test_martingale_test_warns_on_small_ensembles():
    with pytest.warns(UserWarning):
        martingale_test(np.zeros((10, 2)), [0.0, 1.0])


@pytest.mark.deflators
@pytest.mark.filterwarnings("ignore::UserWarning")
def test_verify_deflator_convex_combo(tmp_path):
    report, runs = verify_deflator(CONVEX_COMBO, POSITIVE, convex_combo_paths(), when=WHEN_BEFORE, seed=3)
    assert report.name == "deflator_before_tau"
    assert report.kind == KIND_CONVEX_COMBO
    assert report.seed == 3
    assert report.details["positive"] is True
    assert len(runs) == 3
    filename = str(tmp_path / "deflators.csv")
    write_deflator_csv(runs, filename)
    with open(filename, "r") as fp:
        lines = fp.read().splitlines()
    assert lines[0] == ",".join(DEFLATOR_CSV_HEADER)
    assert len(lines) == 1 + 3 * 5


@pytest.mark.deflators
def test_verify_deflator_contracts():
    with pytest.raises(EnlargeContractException):
        verify_deflator(CONVEX_COMBO, POSITIVE, convex_combo_paths(), when="during")
    other = pyenlarge.MarketModel(kind=pyenlarge.MODEL_POISSON, lam=2.0, psi=0.5)
    with pytest.raises(EnlargeContractException):
        verify_deflator(CONVEX_COMBO, other, convex_combo_paths())


@pytest.mark.deflators
def test_level_bundle_just_after_tau():
    spec = RandomTimeSpec(kind=KIND_POISSON_LEVEL, b=0.5)
    path = poisson_path_from_jump_times(POSITIVE, [0.5, 1.0, 1.5, 3.0], 5.0)
    bundle = azema_bundle(spec, path)
    tau = realize(spec, path).tau
    # Y sits within rounding of the level right after its last visit
    assert bundle.z_left_at(tau) == 1.0
    assert bundle.z_left_at(tau + 1e-13) == pytest.approx(bundle.rho)
    assert bundle.nu_hat_at(tau + 1e-13) == pytest.approx(1.0 - bundle.rho)
    assert bundle.z_at(tau + 1e-13) == pytest.approx(bundle.rho)


@pytest.mark.deflators
@pytest.mark.filterwarnings("ignore::UserWarning")
def test_verify_deflator_after_poisson_level(seed):
    spec = RandomTimeSpec(kind=KIND_POISSON_LEVEL, b=0.5)
    paths = simulate_ensemble(POSITIVE, 40, 30.0, seed)
    report, runs = verify_deflator(spec, POSITIVE, paths, when=WHEN_AFTER, seed=seed)
    assert report.name == "deflator_after_tau"
    assert report.n_used > 0
    assert report.details["positive"] is True
    for run in runs:
        if (run.excluded is None):
            assert np.all(np.isfinite(run.l))
            assert np.all(run.l > 0)


@pytest.mark.deflators
def test_martingale_test_rounding_floor():
    rng = np.random.default_rng(0)
    ones = np.ones(1000)
    # a process constant up to floating point rounding
    rounded = 1.0 - 9e-15 + 1e-15 * rng.normal(size=1000)
    report = martingale_test(np.column_stack([ones, rounded]), [0.0, 1.0])
    assert report.verdict == pyenlarge.VERDICT_PASS
    assert report.details["se_floor"] > 0.0
    assert report.details["worst_sigmas"] < 1.0


@pytest.mark.deflators
@pytest.mark.filterwarnings("ignore::UserWarning")
def test_verify_deflator_records_decay():
    report, _ = verify_deflator(CONVEX_COMBO, POSITIVE, convex_combo_paths(), when=WHEN_BEFORE,
                                tolerance_sigmas=0.0, verdict_on_fail=pyenlarge.VERDICT_INFORMATIONAL)
    assert report.verdict == pyenlarge.VERDICT_INFORMATIONAL
    assert math.isfinite(report.details["relative_decay"])


@pytest.mark.deflators
@pytest.mark.filterwarnings("ignore::UserWarning")
def test_verify_deflator_before_brownian_supremum(seed):
    spec = RandomTimeSpec(kind=KIND_BROWNIAN_SUP_OVERALL)
    paths = simulate_ensemble(BROWNIAN, 60, 2.0, seed, dt=2.0**-6)
    report, _ = verify_deflator(spec, BROWNIAN, paths, when=WHEN_BEFORE)
    assert report.n_used > 0
    assert report.details["positive"] is True
    assert report.verdict == pyenlarge.VERDICT_PASS
