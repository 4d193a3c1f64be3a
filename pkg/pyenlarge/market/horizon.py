"""
Effective horizons of the unbounded random times
"""

import math
import numpy as np
from scipy import optimize, stats
from typing import Callable, Dict, Optional
from . import DEFAULT_EPS
from .classes.market_model import MarketModel
from ..special_functions import normal_cdf, ruin_table, overall_sup_tail
from ..random_times import (KIND_BROWNIAN_LEVEL,
                            KIND_BROWNIAN_SUP_OVERALL,
                            KIND_POISSON_LEVEL,
                            KIND_POISSON_SUP_OVERALL,
                            KIND_CONVEX_COMBO,
                            KIND_MIN_SCALED,
                            KIND_MAX_SCALED)
from ..random_times.classes.random_time_spec import RandomTimeSpec
from ..exceptions import EnlargeContractException, EnlargeNumericalException, EnlargeParameterException

# pdoc init
__pdoc__: Dict = {}


def brownian_level_tail(model: MarketModel, level: float, horizon: float) -> float:
    """
    P(tau > T) = E[min(S_T/a, 1)] for the last passage time of a driftless
    geometric Brownian price at the level a = level * s0

    Args:
        model: a Brownian MarketModel
        level: the level as a fraction of s0
        horizon: the time T

    Returns:
        the tail probability
    """
    if (horizon <= 0):
        return 1.0
    root = model.sigma * math.sqrt(horizon)
    log_level = math.log(level)
    return (normal_cdf((log_level - 0.5 * root**2) / root) / level
            + normal_cdf((-log_level - 0.5 * root**2) / root))


def poisson_level_tail(model: MarketModel, level_a: float, horizon: float) -> float:
    """
    P(tau > T) = E[Z_T] for the last passage time of Y = mu t - N at the
    level a, summed exactly over the Poisson law of N_T

    Args:
        model: a Poisson MarketModel with psi > 0
        level_a: the level of Y
        horizon: the time T

    Returns:
        the tail probability
    """
    if (horizon <= 0):
        return 1.0
    mean = model.lam * horizon
    n = np.arange(0, int(stats.poisson.ppf(1.0 - 1e-15, mean)) + 2)
    y = model.mu * horizon - n - level_a
    z = np.ones(len(n))
    z[y >= 0] = ruin_table(model.theta)(y[y >= 0])
    return float(np.sum(stats.poisson.pmf(n, mean) * z))


def two_jump_tail(model: MarketModel, horizon: float) -> float:
    """
    P(T2 > T) = P(N_T <= 1), a bound on P(tau > T) for the times built
    from the first two jumps

    Args:
        model: a Poisson MarketModel
        horizon: the time T

    Returns:
        the tail probability
    """
    return math.exp(-model.lam * horizon) * (1.0 + model.lam * horizon)


def __solve_tail(tail: Callable[[float], float], eps: float) -> float:
    if (eps >= 1.0):
        return 0.0
    hi = 1.0
    while (tail(hi) >= eps):
        hi *= 2.0
        if (hi > 1e12):
            raise EnlargeNumericalException("No effective horizon below 1e12", diagnostics={"eps": eps})
    try:
        horizon = float(optimize.brentq(lambda t: tail(t) - eps, 0.0, hi, xtol=1e-10))
    except (ValueError, RuntimeError) as e:
        raise EnlargeNumericalException("Effective horizon search failed: %s" % (e), diagnostics={"eps": eps}) from e
    while (tail(horizon) >= eps):
        horizon = horizon * (1.0 + 1e-9) + 1e-12
    return horizon


def effective_horizon(model: MarketModel, time_spec: RandomTimeSpec, eps: Optional[float] = DEFAULT_EPS) -> float:
    """
    Horizon T with P(tau > T) < eps for the unbounded random times

    The tails are closed forms: E[min(S_T/a, 1)] for the Brownian level
    time (and its a = 1 bound for the Brownian supremum time), E[Z_T] from
    the ruin probability for the Poisson level time, the probability of a
    new supremum after T for the Poisson supremum time and P(N_T <= 1) for
    the times built from the first two jumps.

    Args:
        model: the MarketModel
        time_spec: an unbounded RandomTimeSpec
        eps: tail bound in (0, 1], defaults to 1e-4 (eps = 1 gives T = 0)

    Returns:
        the horizon T

    Raises:
        pyenlarge.exceptions.EnlargeContractException: the random time is bounded
        pyenlarge.exceptions.EnlargeParameterException: eps outside (0, 1]
    """
    # check inputs
    if (eps is None or not 0.0 < eps <= 1.0):
        raise EnlargeParameterException("eps must lie in (0, 1], got %s" % (eps))
    time_spec.check_model(model)
    if (time_spec.infinite_horizon is False):
        raise EnlargeContractException("Random time '%s' is bounded by %s and needs no effective horizon" % (
            time_spec.kind, time_spec.maturity))

    # tail of the kind
    if (time_spec.kind == KIND_BROWNIAN_LEVEL):
        tail = lambda t: brownian_level_tail(model, time_spec.a, t)  # noqa: E731
    elif (time_spec.kind == KIND_BROWNIAN_SUP_OVERALL):
        tail = lambda t: brownian_level_tail(model, 1.0, t)  # noqa: E731
    elif (time_spec.kind == KIND_POISSON_LEVEL):
        level_a = time_spec.level_a(model)
        tail = lambda t: poisson_level_tail(model, level_a, t)  # noqa: E731
    elif (time_spec.kind == KIND_POISSON_SUP_OVERALL):
        tail = lambda t: overall_sup_tail(model, t) if t > 0 else 1.0  # noqa: E731
    elif (time_spec.kind in [KIND_CONVEX_COMBO, KIND_MIN_SCALED, KIND_MAX_SCALED]):
        tail = lambda t: two_jump_tail(model, t)  # noqa: E731
    else:
        raise EnlargeContractException("No effective horizon for random time '%s'" % (time_spec.kind))

    # solve
    return __solve_tail(tail, eps)
