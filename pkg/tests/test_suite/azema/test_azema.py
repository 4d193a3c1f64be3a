import math
import pytest
import numpy as np
import pyenlarge
from pyenlarge.market import brownian_path_from_increments, poisson_path_from_jump_times
from pyenlarge.random_times import (RandomTimeSpec,
                                   realize,
                                   KIND_BROWNIAN_LEVEL,
                                   KIND_BROWNIAN_SUP_OVERALL,
                                   KIND_POISSON_LEVEL,
                                   KIND_POISSON_SUP_OVERALL,
                                   KIND_CONVEX_COMBO,
                                   KIND_MIN_SCALED,
                                   KIND_MAX_SCALED)
from pyenlarge.azema import (azema_bundle,
                            eval_z,
                            eval_z_tilde,
                            eval_m,
                            eval_nu_hat,
                            min_scaled_m_tau,
                            write_azema_csv,
                            ConvexComboBundle,
                            MinScaledBundle,
                            MaxScaledBundle,
                            FORM_ANALYTIC,
                            FORM_LOCAL_TIME)
from pyenlarge.azema.classes.min_scaled_bundle import min_scaled_g, min_scaled_integral
from pyenlarge.exceptions import EnlargeContractException

# globals
SIGMA = 1.0
DT = 0.25
BROWNIAN = pyenlarge.MarketModel(kind=pyenlarge.MODEL_BROWNIAN, sigma=SIGMA)
POSITIVE = pyenlarge.MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=0.5)
NEGATIVE = pyenlarge.MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=-0.5)


def brownian_path(prices):
    log_s = np.log(np.asarray(prices, dtype=float))
    dw = (np.diff(log_s) + 0.5 * SIGMA**2 * DT) / SIGMA
    return brownian_path_from_increments(BROWNIAN, DT, dw)


@pytest.mark.azema
def test_convex_combo_bundle():
    spec = RandomTimeSpec(kind=KIND_CONVEX_COMBO, k1=0.5, k2=0.5)
    path = poisson_path_from_jump_times(POSITIVE, [1.0, 2.0], 4.0)
    bundle = azema_bundle(spec, path)
    assert isinstance(bundle, ConvexComboBundle)
    assert bundle.form == FORM_ANALYTIC
    assert bundle.z_at(0.5) == 1.0
    assert bundle.z_at(1.5) == pytest.approx(math.exp(-0.5))
    assert bundle.z_at(2.5) == 0.0
    assert bundle.m_at(3.0) == pytest.approx(2.0 - 2.0 * math.exp(-1.0))
    # A° is continuous at the second jump
    assert bundle.a_opt_at(2.0) == pytest.approx(bundle.a_opt_left_at(2.0))
    tau = realize(spec, path).tau
    assert tau == pytest.approx(1.5)
    assert bundle.z_tilde_at(tau) == pytest.approx(bundle.closed_form_z_tilde_tau())
    assert bundle.nu_hat_at(1.5) == pytest.approx(-math.exp(-0.5))
    assert bundle.nu_hat_at(0.5) == 0.0


@pytest.mark.azema
def test_min_scaled_integral_is_antiderivative():
    beta = 1.5
    h = 1e-6
    for x in [0.2, 1.0, 3.0]:
        numeric = (min_scaled_integral(beta, x + h) - min_scaled_integral(beta, x - h)) / (2.0 * h)
        assert numeric == pytest.approx(min_scaled_g(beta, x), rel=1e-6)
    assert min_scaled_integral(beta, 0.0) == 0.0


@pytest.mark.azema
@pytest.mark.parametrize("jumps", [[1.0, 3.0], [1.0, 1.6]])
def test_min_scaled_m_tau_matches_bundle(jumps):
    spec = RandomTimeSpec(kind=KIND_MIN_SCALED, a=0.5)
    path = poisson_path_from_jump_times(POSITIVE, jumps, 4.0)
    realized = realize(spec, path)
    bundle = azema_bundle(spec, path)
    assert isinstance(bundle, MinScaledBundle)
    assert min_scaled_m_tau(spec, POSITIVE, realized) == pytest.approx(bundle.m_at(realized.tau))
    assert bundle.z_tilde_at(realized.tau) == pytest.approx(bundle.closed_form_z_tilde_tau())


@pytest.mark.azema
def test_min_scaled_m_tau_other_kind():
    spec = RandomTimeSpec(kind=KIND_MAX_SCALED, a=0.5)
    realized = realize(spec, poisson_path_from_jump_times(POSITIVE, [1.0, 3.0], 4.0))
    with pytest.raises(EnlargeContractException):
        min_scaled_m_tau(spec, POSITIVE, realized)


@pytest.mark.azema
def test_max_scaled_bundle():
    spec = RandomTimeSpec(kind=KIND_MAX_SCALED, a=0.5)
    path = poisson_path_from_jump_times(POSITIVE, [1.0, 3.0], 4.0)
    bundle = azema_bundle(spec, path)
    assert isinstance(bundle, MaxScaledBundle)
    tau = realize(spec, path).tau
    assert tau == pytest.approx(1.5)
    assert bundle.z_at(tau) == pytest.approx(bundle.closed_form_z_tau())
    assert 0.0 < bundle.closed_form_z_tau() < 1.0
    assert bundle.z_tilde_at(tau) == pytest.approx(bundle.closed_form_z_tilde_tau())
    # m jumps by -K(T1) at the first jump
    assert bundle.m_left_at(1.0) - bundle.m_at(1.0) == pytest.approx(bundle.k(1.0))
    assert bundle.k(0.0) == 0.0


@pytest.mark.azema
def test_poisson_level_bundle_is_honest_at_tau():
    spec = RandomTimeSpec(kind=KIND_POISSON_LEVEL, b=0.5)
    path = poisson_path_from_jump_times(POSITIVE, [0.5, 1.0, 1.5, 3.0], 5.0)
    bundle = azema_bundle(spec, path)
    tau = realize(spec, path).tau
    assert bundle.z_tilde_at(tau) == pytest.approx(1.0)
    assert bundle.z_at(tau) == pytest.approx(1.0 / (1.0 + POSITIVE.theta))
    assert bundle.z_left_at(tau) == 1.0
    assert bundle.z_at(1.0) == 1.0


@pytest.mark.azema
def test_poisson_sup_overall_bundle_positive_jumps():
    spec = RandomTimeSpec(kind=KIND_POISSON_SUP_OVERALL)
    path = poisson_path_from_jump_times(POSITIVE, [0.2, 0.4], 3.0)
    bundle = azema_bundle(spec, path)
    theta = POSITIVE.theta
    assert bundle.z_at(0.0) == pytest.approx(1.0 / (1.0 + theta))
    assert bundle.z_tilde_at(0.0) == pytest.approx(1.0)
    tau = realize(spec, path).tau
    assert tau == pytest.approx(0.4)
    assert bundle.z_tilde_at(tau) == pytest.approx(1.0)


@pytest.mark.azema
def test_poisson_sup_overall_bundle_negative_jumps():
    spec = RandomTimeSpec(kind=KIND_POISSON_SUP_OVERALL)
    path = poisson_path_from_jump_times(NEGATIVE, [0.5, 3.0], 4.0)
    realized = realize(spec, path)
    assert realized.tau == pytest.approx(3.0) and realized.left_limit
    bundle = azema_bundle(spec, path)
    assert bundle.record_atom == pytest.approx(0.5)
    assert bundle.z_at(3.0) == pytest.approx(0.5)
    assert bundle.z_tilde_at(3.0) == pytest.approx(1.0)


@pytest.mark.azema
def test_brownian_sup_bundle():
    spec = RandomTimeSpec(kind=KIND_BROWNIAN_SUP_OVERALL)
    path = brownian_path([1.0, 1.5, 1.2, 0.9, 0.8])
    bundle = azema_bundle(spec, path)
    assert bundle.z_tilde_at(0.25) == pytest.approx(1.0)
    assert bundle.z_at(0.75) == pytest.approx(0.6)
    assert bundle.a_opt_at(1.0) == pytest.approx(math.log(1.5))
    assert bundle.eta_at(0.5) == pytest.approx(SIGMA * 0.8)


@pytest.mark.azema
def test_brownian_level_bundle():
    spec = RandomTimeSpec(kind=KIND_BROWNIAN_LEVEL, a=0.5)
    path = brownian_path([1.0, 0.4, 0.6, 0.3, 0.2])
    bundle = azema_bundle(spec, path)
    assert bundle.form == FORM_LOCAL_TIME
    assert bundle.z_at(0.0) == 1.0
    assert bundle.z_at(0.75) == pytest.approx(0.6)
    assert bundle.eta_at(0.0) == 0.0
    assert bundle.eta_at(0.25) == pytest.approx(SIGMA * 0.8)
    assert np.all(np.diff(bundle.a_opt_series()) >= 0.0)
    series = bundle.series()
    assert sorted(series.keys()) == ["A_opt", "Z", "Z_se", "Z_tilde", "m", "time"]
    assert np.allclose(series["m"], series["Z"] + series["A_opt"])


@pytest.mark.azema
def test_single_time_evaluators():
    spec = RandomTimeSpec(kind=KIND_CONVEX_COMBO, k1=0.5, k2=0.5)
    path = poisson_path_from_jump_times(POSITIVE, [1.0, 2.0], 4.0)
    assert eval_z(spec, POSITIVE, path, 1.5) == pytest.approx(math.exp(-0.5))
    assert eval_z(spec, POSITIVE, path, 1.5, with_se=True) == (pytest.approx(math.exp(-0.5)), 0.0)
    assert eval_z_tilde(spec, POSITIVE, path, 1.5) == pytest.approx(math.exp(-0.5))
    assert eval_m(spec, POSITIVE, path, 0.5) == 1.0
    assert eval_nu_hat(spec, POSITIVE, path, 1.5) == pytest.approx(-math.exp(-0.5))
    other = pyenlarge.MarketModel(kind=pyenlarge.MODEL_POISSON, lam=2.0, psi=0.5)
    with pytest.raises(EnlargeContractException):
        eval_z(spec, other, path, 1.5)
    with pytest.raises(EnlargeContractException):
        eval_nu_hat(RandomTimeSpec(kind=KIND_BROWNIAN_SUP_OVERALL), BROWNIAN, brownian_path([1.0, 1.2]), 0.0)


@pytest.mark.azema
def test_write_azema_csv(tmp_path):
    spec = RandomTimeSpec(kind=KIND_BROWNIAN_SUP_OVERALL)
    bundles = [azema_bundle(spec, brownian_path([1.0, 1.5, 1.2, 0.9, 0.8]))]
    filename = str(tmp_path / "azema.csv")
    write_azema_csv(bundles, filename)
    with open(filename) as fp:
        lines = fp.read().splitlines()
    assert lines[0] == "path_id,time,Z,Z_tilde,A_opt,m,Z_se"
    assert len(lines) == 1 + 5
