import math
import pytest
import numpy as np
import pyenlarge
from pyenlarge.special_functions import (RuinProbTable,
                                         ruin_prob,
                                         ruin_prob_closed_form,
                                         lundberg_exponent,
                                         exit_level_offset,
                                         overall_sup_survival,
                                         overall_sup_at_most_one,
                                         overall_sup_strict,
                                         normal_cdf,
                                         normal_pdf,
                                         barrier_h,
                                         barrier_h_dy,
                                         brownian_sup_cdf,
                                         sup_law,
                                         sup_law_estimator,
                                         emery_phi,
                                         emery_table,
                                         SupLawEstimator,
                                         SUP_KIND_FINITE_HORIZON,
                                         SUP_KIND_STRICT_PRE_HORIZON,
                                         SUP_KIND_AT_MOST_ONE,
                                         SUP_KIND_INFINITE_HORIZON,
                                         SUP_KIND_INFINITE_AT_MOST_ONE)
from pyenlarge.market import simulate_ensemble
from pyenlarge.exceptions import EnlargeContractException, EnlargeDomainException

# globals
POSITIVE = pyenlarge.MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=0.5)
NEGATIVE = pyenlarge.MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=-0.5)


@pytest.mark.special_functions
def test_normal_distribution():
    assert normal_cdf(0.0) == pytest.approx(0.5)
    assert isinstance(normal_cdf(1.0), float)
    assert np.allclose(normal_cdf(np.array([-1.0, 1.0])), [0.15865525393, 0.84134474607])
    assert normal_pdf(0.0) == pytest.approx(1.0 / math.sqrt(2.0 * math.pi))


@pytest.mark.special_functions
def test_barrier_h_without_drift():
    # with z = 0 the barrier function is twice a normal tail
    assert barrier_h(0.0, 1.0, 4.0) == pytest.approx(2.0 * normal_cdf(-0.5))
    assert barrier_h(0.7, 0.0, 2.0) == pytest.approx(1.0)


@pytest.mark.special_functions
def test_barrier_h_large_arguments_stay_finite():
    value = barrier_h(40.0, 30.0, 1.0)
    assert math.isfinite(value) and value >= 0.0


@pytest.mark.special_functions
@pytest.mark.parametrize("z,y,s", [(0.5, 0.3, 1.0), (-1.2, 1.5, 0.5), (2.0, 0.8, 2.0)])
def test_barrier_h_dy_matches_finite_difference(z, y, s):
    h = 1e-6
    numeric = (barrier_h(z, y + h, s) - barrier_h(z, y - h, s)) / (2.0 * h)
    assert barrier_h_dy(z, y, s) == pytest.approx(numeric, rel=1e-5, abs=1e-8)


@pytest.mark.special_functions
def test_barrier_h_domain():
    with pytest.raises(EnlargeDomainException):
        barrier_h(0.5, 1.0, 0.0)
    with pytest.raises(EnlargeDomainException):
        barrier_h_dy(0.5, -1.0, 1.0)


@pytest.mark.special_functions
def test_brownian_sup_cdf():
    assert brownian_sup_cdf(2.0) == pytest.approx(0.5)
    assert brownian_sup_cdf(0.5) == 0.0
    with pytest.raises(EnlargeDomainException):
        brownian_sup_cdf(0.0)


@pytest.mark.special_functions
def test_ruin_at_zero_capital():
    theta = 0.25
    assert ruin_prob(theta, 0.0) == pytest.approx(1.0 / 1.25, abs=1e-12)


@pytest.mark.special_functions
@pytest.mark.parametrize("theta", [0.1, 0.5, 2.0])
@pytest.mark.parametrize("x", [0.5, 1.0, 2.5, 4.0])
def test_ruin_table_matches_closed_form(theta, x):
    assert ruin_prob(theta, x) == pytest.approx(ruin_prob_closed_form(theta, x), abs=1e-7)


@pytest.mark.special_functions
def test_ruin_table_is_decreasing_into_the_tail():
    table = RuinProbTable(0.5)
    x = np.linspace(0.0, 100.0, 1001)
    values = table(x)
    assert np.all(np.diff(values) <= 1e-12)
    assert table(80.0) == pytest.approx(table.tail_constant * math.exp(-table.lundberg * 80.0))


@pytest.mark.special_functions
def test_ruin_table_delay_equation():
    table = RuinProbTable(0.5)
    x = 1.75
    h = 1e-6
    numeric = (table(x + h) - table(x - h)) / (2.0 * h)
    assert table.derivative(x) == pytest.approx(numeric, rel=1e-4)


@pytest.mark.special_functions
def test_ruin_domain():
    with pytest.raises(EnlargeDomainException):
        ruin_prob(0.5, -0.1)
    with pytest.raises(EnlargeDomainException):
        RuinProbTable(0.0)
    with pytest.raises(EnlargeDomainException):
        ruin_prob_closed_form(-1.0, 1.0)


@pytest.mark.special_functions
def test_lundberg_exponent():
    theta = 0.5
    r = lundberg_exponent(theta)
    assert r > 0
    assert math.expm1(r) == pytest.approx(r * (1.0 + theta), rel=1e-10)


@pytest.mark.special_functions
def test_exit_level_offset():
    theta = 0.5
    x_star = exit_level_offset(theta)
    assert x_star > 0
    assert ruin_prob(theta, x_star) == pytest.approx(0.5 * ruin_prob(theta, 0.0), abs=1e-10)


@pytest.mark.special_functions
def test_overall_supremum_laws():
    assert overall_sup_survival(NEGATIVE, 4.0) == pytest.approx(0.25)
    assert overall_sup_survival(NEGATIVE, 0.5) == 1.0
    assert overall_sup_strict(NEGATIVE, 4.0) == pytest.approx(0.75)
    assert overall_sup_at_most_one(NEGATIVE) == 0.0
    theta = POSITIVE.theta
    assert overall_sup_at_most_one(POSITIVE) == pytest.approx(theta / (1.0 + theta))
    assert overall_sup_survival(POSITIVE, 1.0) == pytest.approx(1.0 / (1.0 + theta))
    x = 1.5**2
    assert overall_sup_survival(POSITIVE, x) == pytest.approx(ruin_prob(theta, 2.0))
    assert overall_sup_survival(POSITIVE, x) + overall_sup_strict(POSITIVE, x) == pytest.approx(1.0)
    with pytest.raises(EnlargeContractException):
        overall_sup_survival(pyenlarge.MarketModel(kind=pyenlarge.MODEL_BROWNIAN, sigma=1.0), 2.0)


@pytest.mark.special_functions
def test_sup_law_argument_checks():
    with pytest.raises(EnlargeContractException):
        sup_law(POSITIVE, "median")
    with pytest.raises(EnlargeContractException):
        sup_law(POSITIVE, SUP_KIND_FINITE_HORIZON, x=1.5)
    with pytest.raises(EnlargeContractException):
        sup_law(POSITIVE, SUP_KIND_INFINITE_HORIZON, x=1.5, t=1.0)


@pytest.mark.special_functions
def test_sup_law_exact_atoms_need_no_table():
    estimator = SupLawEstimator(NEGATIVE, SUP_KIND_FINITE_HORIZON, sample_size=10)
    # without a jump the price tops out at exp(lam |psi| t)
    assert estimator.evaluate(x=2.0, t=1.0) == (0.0, 0.0)
    assert estimator.evaluate(x=0.5, t=1.0) == (1.0, 0.0)
    assert estimator.with_kind(SUP_KIND_AT_MOST_ONE).evaluate(t=1.0) == (0.0, 0.0)
    assert estimator.with_kind(SUP_KIND_STRICT_PRE_HORIZON).evaluate(x=2.0, t=1.0) == (1.0, 0.0)
    assert estimator.built is False
    with pytest.raises(EnlargeContractException):
        estimator.with_kind(SUP_KIND_INFINITE_HORIZON)


@pytest.mark.special_functions
@pytest.mark.filterwarnings("ignore::UserWarning")
def test_infinite_horizon_table_matches_closed_form(seed):
    estimator = sup_law_estimator(NEGATIVE, SUP_KIND_INFINITE_HORIZON, sample_size=4000, seed=seed)
    p, se = estimator.evaluate(x=2.0)
    assert se > 0
    assert p == pytest.approx(0.5, abs=0.05)
    at_most_one = estimator.with_kind(SUP_KIND_INFINITE_AT_MOST_ONE).evaluate()
    assert at_most_one == (0.0, 0.0)


@pytest.mark.special_functions
@pytest.mark.filterwarnings("ignore::UserWarning")
def test_sup_law_table_cache_file(tmp_path):
    filename = str(tmp_path / "sup_law.json")
    built = sup_law_estimator(POSITIVE, SUP_KIND_FINITE_HORIZON, sample_size=200, seed=11, cache_file=filename)
    loaded = SupLawEstimator.load(filename)
    assert loaded is not None
    assert loaded.cache_key() == built.cache_key()
    assert np.allclose(loaded.values, built.values)
    assert loaded.evaluate(x=1.2, t=0.5) == pytest.approx(built.evaluate(x=1.2, t=0.5))
    assert SupLawEstimator.load(str(tmp_path / "missing.json")) is None


@pytest.mark.special_functions
def test_emery_function():
    with pytest.raises(EnlargeDomainException):
        emery_phi(1.5)
    table = emery_table(sample_size=200, seed=0, sigma=1.0, dt=2.0**-5)
    assert table.evaluate(0.0) == (1.0, 0.0)
    assert np.all((table.values >= 0.0) & (table.values <= 1.0))
    assert table.values[0] == 1.0
    phi, se = table.evaluate(1.0)
    assert 0.0 < phi < 1.0 and se > 0.0


@pytest.mark.special_functions
@pytest.mark.parametrize("x", [0.5, 1.0, 2.5])
def test_ruin_prob_matches_simulated_ruin(x, seed):
    # Y = mu t - N only goes down at the jumps, ruin is read on the jump grid
    model = pyenlarge.MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=2.0)
    n = 2000
    paths = simulate_ensemble(model, n, 60.0, seed)
    ruined = np.asarray([float(x + np.min(path.y) < 0.0) for path in paths])
    expected = ruin_prob(model.theta, x)
    se = math.sqrt(expected * (1.0 - expected) / n)
    assert float(ruined.mean()) == pytest.approx(expected, abs=4.0 * se + 0.005)
