"""
Ruin probabilities of the surplus Y = x + mu t - N and the closed form
laws of the overall supremum of the Poisson price
"""

import math
import functools
import numpy as np
from scipy import optimize, stats
from typing import Dict, Union
from .classes.ruin_prob_table import RuinProbTable
from .._internal.util import scalar_or_array
from ..market.classes.market_model import MarketModel
from ..exceptions import EnlargeContractException, EnlargeDomainException, EnlargeNumericalException

# pdoc init
__pdoc__: Dict = {}

# numeric type accepted by the vectorized evaluators
Numeric = Union[float, np.ndarray]


@functools.lru_cache(maxsize=32)
def ruin_table(theta: float) -> RuinProbTable:
    """
    Cached ruin probability table for a safety loading

    Args:
        theta: safety loading, theta > 0

    Returns:
        the RuinProbTable

    Raises:
        pyenlarge.exceptions.EnlargeDomainException: theta <= 0
        pyenlarge.exceptions.EnlargeNumericalException: the series needs too many terms
    """
    return RuinProbTable(theta)


def ruin_prob(theta: float, x: Numeric) -> Numeric:
    """
    Ruin probability of x + mu t - N_t with safety loading theta = mu/lam - 1

    Args:
        theta: safety loading, theta > 0
        x: initial capital, x >= 0

    Returns:
        the probability of ever going below 0, a float for scalar input

    Raises:
        pyenlarge.exceptions.EnlargeDomainException: theta <= 0 or x < 0
    """
    if (np.any(np.asarray(x, dtype=float) < 0)):
        raise EnlargeDomainException("Ruin probabilities require x >= 0, got %s" % (x))
    return ruin_table(float(theta))(x)


def ruin_prob_closed_form(theta: float, x: float) -> float:
    """
    Finite sum form of the unit claim ruin probability,
    1 - Psi(x) = (1 - rho) sum_{k <= x} (rho (k - x))^k / k! exp(-rho (k - x)).

    The alternating sum loses accuracy for large x, it serves as a
    reference for moderate capitals.

    Args:
        theta: safety loading, theta > 0
        x: initial capital, x >= 0

    Returns:
        the ruin probability

    Raises:
        pyenlarge.exceptions.EnlargeDomainException: theta <= 0 or x < 0
    """
    if (not theta > 0 or x < 0):
        raise EnlargeDomainException("Invalid arguments theta=%s, x=%s" % (theta, x))
    rho = 1.0 / (1.0 + theta)
    total = 0.0
    for k in range(0, int(math.floor(x)) + 1):
        u = rho * (k - x)
        total += u**k / math.factorial(k) * math.exp(-u)
    return 1.0 - (1.0 - rho) * total


def lundberg_exponent(theta: float) -> float:
    """
    Adjustment coefficient R > 0 solving lam (e^R - 1) = mu R

    Args:
        theta: safety loading, theta > 0

    Returns:
        the Lundberg exponent
    """
    return ruin_table(float(theta)).lundberg


def exit_level_offset(theta: float) -> float:
    """
    Capital x* with Psi(x*) = Psi(0)/2

    The exit time of the Poisson last passage construction is the first
    time after the last passage that Y climbs to a + x*.

    Args:
        theta: safety loading, theta > 0

    Returns:
        the offset x*

    Raises:
        pyenlarge.exceptions.EnlargeNumericalException: root search failed
    """
    table = ruin_table(float(theta))
    target = 0.5 * table(0.0)
    hi = 1.0
    while (table(hi) > target):
        hi *= 2.0
    try:
        return float(optimize.brentq(lambda x: table(x) - target, 0.0, hi, xtol=1e-14))
    except (ValueError, RuntimeError) as e:
        raise EnlargeNumericalException("Exit level search failed: %s" % (e), diagnostics={"theta": theta}) from e


def __check_poisson(model: MarketModel) -> None:
    if (model.is_poisson is False):
        raise EnlargeContractException("Poisson supremum laws require a Poisson model")


def overall_sup_survival(model: MarketModel, x: Numeric) -> Numeric:
    """
    Closed form of P(sup_t S_t > x) for the Poisson price started at 1.
    With psi > 0 it is the ruin probability at ln(x)/ln(1+psi), with
    psi < 0 it is min(1, 1/x).

    Args:
        model: a Poisson MarketModel
        x: level, scalar or array

    Returns:
        the probability, a float for scalar input
    """
    __check_poisson(model)
    arr = np.asarray(x, dtype=float)
    out = np.ones(arr.shape)
    above = arr > 1.0
    if (model.psi > 0):
        out[arr == 1.0] = 1.0 / (1.0 + model.theta)
        out[above] = ruin_table(model.theta)(np.log(arr[above]) / model.alpha)
    else:
        out[above] = 1.0 / arr[above]
    return scalar_or_array(out, x)


def overall_sup_at_most_one(model: MarketModel) -> float:
    """
    Closed form of P(sup_t S_t <= 1) for the Poisson price started at 1

    Args:
        model: a Poisson MarketModel

    Returns:
        theta/(1+theta) when psi > 0, 0 when psi < 0
    """
    __check_poisson(model)
    if (model.psi > 0):
        return model.theta / (1.0 + model.theta)
    return 0.0


def overall_sup_strict(model: MarketModel, x: Numeric) -> Numeric:
    """
    Closed form of P(sup_t S_t < x) for the Poisson price started at 1

    Args:
        model: a Poisson MarketModel
        x: level, scalar or array

    Returns:
        the probability, a float for scalar input
    """
    __check_poisson(model)
    arr = np.asarray(x, dtype=float)
    out = np.zeros(arr.shape)
    above = arr > 1.0
    if (model.psi > 0):
        out[above] = 1.0 - ruin_table(model.theta)(np.log(arr[above]) / model.alpha)
    else:
        out[above] = 1.0 - 1.0 / arr[above]
    return scalar_or_array(out, x)


def overall_sup_tail(model: MarketModel, horizon: float) -> float:
    """
    Probability that a Poisson price started at 1 exceeds its initial
    value again after the horizon, E[P(sup_{t >= T} S_t > 1 | S_T)].

    It bounds P(tau > T) for the overall supremum time and is summed
    exactly over the Poisson law of N_T.

    Args:
        model: a Poisson MarketModel
        horizon: the time T

    Returns:
        the tail probability
    """
    __check_poisson(model)
    mean = model.lam * horizon
    n = np.arange(0, int(stats.poisson.ppf(1.0 - 1e-15, mean)) + 2)
    weights = stats.poisson.pmf(n, mean)
    s_end = np.exp(-model.lam * model.psi * horizon + model.alpha * n)
    return float(np.sum(weights * overall_sup_survival(model, 1.0 / s_end)))


