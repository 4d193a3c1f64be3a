import math
import pytest
import numpy as np
import pyenlarge
from pyenlarge.market import brownian_path_from_increments, poisson_path_from_jump_times
from pyenlarge.random_times import (RandomTimeSpec,
                                   RealizedTime,
                                   kind_parameters,
                                   realize,
                                   realize_many,
                                   poisson_level_visits,
                                   poisson_level_exit_time,
                                   write_realized_csv,
                                   KIND_BROWNIAN_LEVEL,
                                   KIND_BROWNIAN_MATURITY,
                                   KIND_BROWNIAN_SUP_OVERALL,
                                   KIND_POISSON_LEVEL,
                                   KIND_POISSON_SUP_UNIT,
                                   KIND_POISSON_SUP_OVERALL,
                                   KIND_EMERY,
                                   KIND_CONVEX_COMBO,
                                   KIND_MIN_SCALED,
                                   KIND_MAX_SCALED)
from pyenlarge.exceptions import EnlargeContractException, EnlargeParameterException

# globals
SIGMA = 1.0
DT = 0.25
BROWNIAN = pyenlarge.MarketModel(kind=pyenlarge.MODEL_BROWNIAN, sigma=SIGMA)
POSITIVE = pyenlarge.MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=0.5)
NEGATIVE = pyenlarge.MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=-0.5)


def brownian_path(prices):
    # a path through the given grid prices, bridge extremes at the end points
    log_s = np.log(np.asarray(prices, dtype=float))
    dw = (np.diff(log_s) + 0.5 * SIGMA**2 * DT) / SIGMA
    return brownian_path_from_increments(BROWNIAN, DT, dw)


@pytest.mark.random_times
def test_kind_parameters():
    assert kind_parameters(KIND_CONVEX_COMBO) == ["k1", "k2"]
    assert kind_parameters(KIND_EMERY) == []
    with pytest.raises(EnlargeContractException):
        kind_parameters("first_jump")


@pytest.mark.random_times
@pytest.mark.parametrize("kwargs", [
    dict(kind=KIND_BROWNIAN_LEVEL),
    dict(kind=KIND_BROWNIAN_LEVEL, a=0.5, b=0.5),
    dict(kind=KIND_BROWNIAN_LEVEL, a=1.5),
    dict(kind=KIND_MIN_SCALED, a=0.0),
    dict(kind=KIND_CONVEX_COMBO, k1=0.5, k2=0.6),
    dict(kind=KIND_CONVEX_COMBO, k1=-0.5, k2=1.5),
    dict(kind="first_jump"),
])
def test_invalid_specs(kwargs):
    with pytest.raises(ValueError):
        RandomTimeSpec(**kwargs)


@pytest.mark.random_times
def test_spec_properties():
    spec = RandomTimeSpec(kind=KIND_POISSON_LEVEL, b=0.5)
    assert spec.honest and not spec.avoids_stopping_times
    assert spec.infinite_horizon and spec.maturity is None
    assert spec.label == "poisson_last_passage_level(b=0.5)"
    assert spec.model_kind == pyenlarge.MODEL_POISSON
    assert spec.level_a(POSITIVE) == pytest.approx(math.log(2.0) / math.log(1.5))
    assert spec.price_level(POSITIVE) == pytest.approx(0.5)
    with pytest.raises(EnlargeContractException):
        spec.check_model(NEGATIVE)
    with pytest.raises(EnlargeContractException):
        spec.check_model(BROWNIAN)
    emery = RandomTimeSpec(kind=KIND_EMERY)
    assert emery.maturity == 1.0 and not emery.honest and not emery.infinite_horizon
    assert RandomTimeSpec(kind=KIND_CONVEX_COMBO, k1=0.25, k2=0.75).avoids_stopping_times


@pytest.mark.random_times
def test_brownian_level_time():
    spec = RandomTimeSpec(kind=KIND_BROWNIAN_LEVEL, a=0.5)
    realized = realize(spec, brownian_path([1.0, 0.4, 0.6, 0.3, 0.2]))
    assert realized.finite
    assert realized.tau == pytest.approx(0.75)
    assert realized.t_grid_index == 3


@pytest.mark.random_times
def test_brownian_level_time_not_detected_above_level():
    spec = RandomTimeSpec(kind=KIND_BROWNIAN_LEVEL, a=0.5)
    realized = realize(spec, brownian_path([1.0, 0.4, 0.6, 0.3, 0.7]))
    assert realized.detected is False
    assert realized.tau == float("inf") and not realized.finite


@pytest.mark.random_times
def test_brownian_last_passage_before_maturity():
    spec = RandomTimeSpec(kind=KIND_BROWNIAN_MATURITY, b=0.5)
    realized = realize(spec, brownian_path([1.0, 0.4, 0.6, 0.3, 0.2]))
    assert realized.tau == pytest.approx(0.75)
    empty = realize(spec, brownian_path([1.0, 0.9, 1.2, 0.8, 0.7]))
    assert empty.tau == 0.0 and empty.empty_set and empty.finite


@pytest.mark.random_times
def test_maturity_kinds_need_paths_to_one():
    spec = RandomTimeSpec(kind=KIND_BROWNIAN_MATURITY, b=0.5)
    with pytest.raises(EnlargeParameterException):
        realize(spec, brownian_path([1.0, 0.4, 0.6]))


@pytest.mark.random_times
def test_brownian_supremum_time():
    spec = RandomTimeSpec(kind=KIND_BROWNIAN_SUP_OVERALL)
    realized = realize(spec, brownian_path([1.0, 1.5, 1.2, 0.9, 0.8]))
    assert realized.tau == pytest.approx(0.25)
    assert realized.auxiliary["s_star"] == pytest.approx(1.5)
    # still climbing at the end of the path
    assert realize(spec, brownian_path([1.0, 1.1, 1.2, 1.3, 1.4])).detected is False


@pytest.mark.random_times
def test_emery_time():
    spec = RandomTimeSpec(kind=KIND_EMERY)
    realized = realize(spec, brownian_path([1.0, 0.4, 1.0, 0.9, 1.0]))
    assert realized.tau == pytest.approx(0.5)
    assert realized.auxiliary["s_1"] == pytest.approx(1.0)
    empty = realize(spec, brownian_path([1.0, 0.8, 0.6, 0.7, 0.5]))
    assert empty.empty_set and empty.tau == 0.0


@pytest.mark.random_times
def test_poisson_level_time():
    spec = RandomTimeSpec(kind=KIND_POISSON_LEVEL, b=0.5)
    path = poisson_path_from_jump_times(POSITIVE, [0.5, 1.0, 1.5, 3.0], 5.0)
    a = spec.level_a(POSITIVE)
    mu = POSITIVE.mu
    visits = poisson_level_visits(spec, path)
    assert len(visits) == 1
    realized = realize(spec, path)
    assert realized.tau == pytest.approx(3.0 + (a - (3.0 * mu - 4.0)) / mu)
    assert path.y_at(realized.tau) == pytest.approx(a)
    assert realized.auxiliary["n_visits"] == 1.0
    assert poisson_level_exit_time(spec, path, realized) > realized.tau

    # Y is still below the level at the horizon
    short = poisson_path_from_jump_times(POSITIVE, [0.5, 1.0, 1.5, 3.0], 4.0)
    assert realize(spec, short).detected is False


@pytest.mark.random_times
def test_poisson_supremum_on_unit_positive_jumps():
    spec = RandomTimeSpec(kind=KIND_POISSON_SUP_UNIT)
    realized = realize(spec, poisson_path_from_jump_times(POSITIVE, [0.2, 0.4, 2.0], 2.0))
    assert realized.tau == pytest.approx(0.4)
    assert realized.left_limit is False
    no_jump = realize(spec, poisson_path_from_jump_times(POSITIVE, [1.5], 2.0))
    assert no_jump.tau == 0.0


@pytest.mark.random_times
def test_poisson_supremum_on_unit_negative_jumps():
    spec = RandomTimeSpec(kind=KIND_POISSON_SUP_UNIT)
    realized = realize(spec, poisson_path_from_jump_times(NEGATIVE, [0.5, 3.0], 4.0))
    assert realized.tau == pytest.approx(0.5)
    assert realized.left_limit is True
    no_jump = realize(spec, poisson_path_from_jump_times(NEGATIVE, [3.0], 4.0))
    assert no_jump.tau == pytest.approx(1.0)
    assert no_jump.left_limit is False


@pytest.mark.random_times
def test_poisson_overall_supremum_still_rising_is_undetected():
    spec = RandomTimeSpec(kind=KIND_POISSON_SUP_OVERALL)
    assert realize(spec, poisson_path_from_jump_times(NEGATIVE, [], 4.0)).detected is False


@pytest.mark.random_times
def test_two_jump_times():
    path = poisson_path_from_jump_times(POSITIVE, [1.0, 2.0, 2.5], 4.0)
    assert realize(RandomTimeSpec(kind=KIND_CONVEX_COMBO, k1=0.25, k2=0.75), path).tau == pytest.approx(1.75)
    assert realize(RandomTimeSpec(kind=KIND_MIN_SCALED, a=0.4), path).tau == pytest.approx(0.8)
    assert realize(RandomTimeSpec(kind=KIND_MAX_SCALED, a=0.4), path).tau == pytest.approx(1.0)
    one_jump = poisson_path_from_jump_times(POSITIVE, [1.0], 4.0)
    assert realize(RandomTimeSpec(kind=KIND_MAX_SCALED, a=0.4), one_jump).detected is False


@pytest.mark.random_times
def test_realize_checks_model():
    with pytest.raises(EnlargeContractException):
        realize(RandomTimeSpec(kind=KIND_EMERY), poisson_path_from_jump_times(POSITIVE, [1.0], 2.0))


@pytest.mark.random_times
def test_realized_time_is_immutable():
    realized = RealizedTime(kind=KIND_EMERY, tau=0.5)
    with pytest.raises(TypeError):
        realized.tau = 1.0


@pytest.mark.random_times
def test_write_realized_csv(tmp_path):
    spec = RandomTimeSpec(kind=KIND_MIN_SCALED, a=0.5)
    paths = [poisson_path_from_jump_times(POSITIVE, [1.0, 2.0], 4.0, index=0),
             poisson_path_from_jump_times(POSITIVE, [1.0], 4.0, index=1)]
    filename = str(tmp_path / "realized.csv")
    write_realized_csv(realize_many(spec, paths), filename)
    with open(filename) as fp:
        lines = fp.read().splitlines()
    assert lines[0] == "path_id,tau,detected,empty_set,left_limit,T1,T2,n_jumps"
    assert len(lines) == 3
    assert lines[2].startswith("1,inf,0,0,0")
