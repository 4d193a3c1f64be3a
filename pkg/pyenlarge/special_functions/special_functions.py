"""
Special functions used by the closed forms of the Azema supermartingales
"""

import math
import numpy as np
from scipy import special
from typing import Dict, Optional, Tuple, Union
from . import (SUP_KIND_FINITE_HORIZON,
               SUP_KIND_STRICT_PRE_HORIZON,
               SUP_KIND_AT_MOST_ONE,
               SUP_KIND_INFINITE_HORIZON,
               SUP_KIND_INFINITE_STRICT,
               SUP_KIND_INFINITE_AT_MOST_ONE,
               DEFAULT_SAMPLE_SIZE,
               DEFAULT_EMERY_DT)
from .classes.sup_law_estimator import SupLawEstimator
from .classes.emery_phi_table import EmeryPhiTable
from .._internal.util import scalar_or_array
from ..market.classes.market_model import MarketModel
from ..exceptions import EnlargeContractException, EnlargeDomainException

# pdoc init
__pdoc__: Dict = {}

# in-memory caches of estimated tables
__SUP_LAW_CACHE: Dict[tuple, SupLawEstimator] = {}
__EMERY_CACHE: Dict[tuple, EmeryPhiTable] = {}

# numeric type accepted by the vectorized evaluators
Numeric = Union[float, np.ndarray]


def normal_cdf(x: Numeric) -> Numeric:
    """
    Standard normal cumulative distribution function

    Args:
        x: scalar or array

    Returns:
        N(x), a float for scalar input
    """
    return scalar_or_array(special.ndtr(np.asarray(x, dtype=float)), x)


def normal_pdf(x: Numeric) -> Numeric:
    """
    Standard normal density

    Args:
        x: scalar or array

    Returns:
        n(x), a float for scalar input
    """
    arr = np.asarray(x, dtype=float)
    return scalar_or_array(np.exp(-0.5 * arr**2) / math.sqrt(2.0 * math.pi), x)


def __check_barrier_domain(y, s) -> None:
    if (np.any(np.asarray(s, dtype=float) <= 0) or np.any(~np.isfinite(np.asarray(s, dtype=float)))):
        raise EnlargeDomainException("The barrier function requires s > 0, got %s" % (s))
    if (np.any(np.asarray(y, dtype=float) < 0)):
        raise EnlargeDomainException("The barrier function requires y >= 0, got %s" % (y))


def barrier_h(z: Numeric, y: Numeric, s: Numeric) -> Numeric:
    """
    Two-sided barrier function
    H(z, y, s) = exp(-zy) N((zs - y)/sqrt(s)) + exp(zy) N((-zs - y)/sqrt(s)).

    The exponential factors are folded into log N to stay finite for
    large |z y|.

    Args:
        z: drift argument
        y: distance argument, y >= 0
        s: time argument, s > 0

    Returns:
        the value, a float for scalar inputs

    Raises:
        pyenlarge.exceptions.EnlargeDomainException: s <= 0 or y < 0
    """
    __check_barrier_domain(y, s)
    z = np.asarray(z, dtype=float)
    y_arr = np.asarray(y, dtype=float)
    s_arr = np.asarray(s, dtype=float)
    root = np.sqrt(s_arr)
    d1 = (z * s_arr - y_arr) / root
    d2 = (-z * s_arr - y_arr) / root
    value = np.exp(-z * y_arr + special.log_ndtr(d1)) + np.exp(z * y_arr + special.log_ndtr(d2))
    if (np.ndim(z) == 0 and np.ndim(y) == 0 and np.ndim(s) == 0):
        return float(value)
    return value


def barrier_h_dy(z: Numeric, y: Numeric, s: Numeric) -> Numeric:
    """
    Partial derivative of the barrier function in y

    Uses exp(-zy) n(d1) = exp(zy) n(d2), so that
    H_y = -z exp(-zy) N(d1) + z exp(zy) N(d2) - 2 exp(-zy) n(d1) / sqrt(s).

    Args:
        z: drift argument
        y: distance argument, y >= 0 (right derivative at 0)
        s: time argument, s > 0

    Returns:
        the derivative, a float for scalar inputs

    Raises:
        pyenlarge.exceptions.EnlargeDomainException: s <= 0 or y < 0
    """
    __check_barrier_domain(y, s)
    z = np.asarray(z, dtype=float)
    y_arr = np.asarray(y, dtype=float)
    s_arr = np.asarray(s, dtype=float)
    root = np.sqrt(s_arr)
    d1 = (z * s_arr - y_arr) / root
    d2 = (-z * s_arr - y_arr) / root
    log_density = -0.5 * d1**2 - 0.5 * math.log(2.0 * math.pi)
    value = (-z * np.exp(-z * y_arr + special.log_ndtr(d1))
             + z * np.exp(z * y_arr + special.log_ndtr(d2))
             - 2.0 * np.exp(-z * y_arr + log_density) / root)
    if (np.ndim(z) == 0 and np.ndim(y) == 0 and np.ndim(s) == 0):
        return float(value)
    return value


def brownian_sup_cdf(x: Numeric) -> Numeric:
    """
    Law of the overall supremum of a driftless geometric Brownian motion
    started at 1, P(sup S <= x) = (1 - 1/x)^+

    Args:
        x: level, x > 0

    Returns:
        the probability, a float for scalar input

    Raises:
        pyenlarge.exceptions.EnlargeDomainException: x <= 0
    """
    arr = np.asarray(x, dtype=float)
    if (np.any(arr <= 0)):
        raise EnlargeDomainException("The supremum law requires x > 0, got %s" % (x))
    return scalar_or_array(np.maximum(0.0, 1.0 - 1.0 / arr), x)


def sup_law_estimator(model: MarketModel,
                      kind: str,
                      sample_size: Optional[int] = DEFAULT_SAMPLE_SIZE,
                      seed: Optional[int] = 0,
                      cache_file: Optional[str] = None,
                      verbose: Optional[bool] = False) -> SupLawEstimator:
    """
    Build, load or reuse a Monte-Carlo supremum law table

    Tables are kept in memory keyed by (model hash, kind family,
    sample size, seed). When `cache_file` is given and matches the key
    it is loaded instead of simulated, otherwise the freshly built table
    is written there.

    Args:
        model: a Poisson MarketModel
        kind: one of the SUP_KIND_* constants
        sample_size: number of simulated paths
        seed: base seed
        cache_file: optional JSON cache file
        verbose: output progress messages, defaults to False

    Returns:
        the SupLawEstimator
    """
    if (model.is_poisson is False):
        raise EnlargeContractException("Supremum law tables require a Poisson model")
    estimator = SupLawEstimator(model, kind, sample_size=sample_size, seed=seed)
    key = (model.model_hash(), estimator.family, sample_size, seed)
    if (key in __SUP_LAW_CACHE):
        return __SUP_LAW_CACHE[key].with_kind(kind)
    if (cache_file is not None):
        loaded = SupLawEstimator.load(cache_file)
        if (loaded is not None and loaded.cache_key() == estimator.cache_key()):
            __SUP_LAW_CACHE[key] = loaded
            return loaded.with_kind(kind)
    estimator.build(verbose=verbose)
    if (cache_file is not None):
        estimator.save(cache_file)
    __SUP_LAW_CACHE[key] = estimator
    return estimator


def sup_law(model: MarketModel,
            kind: str,
            x: Optional[float] = None,
            t: Optional[float] = None,
            sample_size: Optional[int] = DEFAULT_SAMPLE_SIZE,
            seed: Optional[int] = 0) -> Tuple[float, float]:
    """
    Monte-Carlo supremum law of the Poisson price started at 1

    The finite horizon kinds take both x and t (only t for the at most one
    kind), the infinite horizon kinds take x (nothing for the at most one
    kind).

    Args:
        model: a Poisson MarketModel
        kind: one of the SUP_KIND_* constants
        x: level
        t: time
        sample_size: number of simulated paths
        seed: base seed

    Returns:
        tuple of (probability, standard error)

    Raises:
        pyenlarge.exceptions.EnlargeContractException: inconsistent arguments
    """
    needs_x = kind in [SUP_KIND_FINITE_HORIZON, SUP_KIND_STRICT_PRE_HORIZON,
                       SUP_KIND_INFINITE_HORIZON, SUP_KIND_INFINITE_STRICT]
    needs_t = kind in [SUP_KIND_FINITE_HORIZON, SUP_KIND_STRICT_PRE_HORIZON, SUP_KIND_AT_MOST_ONE]
    if (kind not in [SUP_KIND_FINITE_HORIZON, SUP_KIND_STRICT_PRE_HORIZON, SUP_KIND_AT_MOST_ONE,
                     SUP_KIND_INFINITE_HORIZON, SUP_KIND_INFINITE_STRICT, SUP_KIND_INFINITE_AT_MOST_ONE]):
        raise EnlargeContractException("Unknown supremum law kind '%s'" % (kind))
    if ((x is None) == needs_x or (t is None) == needs_t):
        raise EnlargeContractException("Supremum law kind '%s' takes %s" % (
            kind,
            " and ".join([n for n, flag in [("x", needs_x), ("t", needs_t)] if flag]) or "no arguments",
        ))
    estimator = sup_law_estimator(model, kind, sample_size=sample_size, seed=seed)
    return estimator.evaluate(x=x, t=t)


def emery_table(sample_size: Optional[int] = DEFAULT_SAMPLE_SIZE,
                seed: Optional[int] = 0,
                sigma: Optional[float] = 1.0,
                dt: Optional[float] = DEFAULT_EMERY_DT,
                verbose: Optional[bool] = False) -> EmeryPhiTable:
    """
    Build or reuse the Monte-Carlo table of the Emery function

    Args:
        sample_size: number of simulated paths
        seed: base seed
        sigma: volatility of the Brownian price
        dt: grid step of the simulated paths
        verbose: output progress messages, defaults to False

    Returns:
        the EmeryPhiTable
    """
    key = (sample_size, seed, sigma, dt)
    if (key not in __EMERY_CACHE):
        table = EmeryPhiTable(sample_size=sample_size, seed=seed, sigma=sigma, dt=dt)
        table.build(verbose=verbose)
        __EMERY_CACHE[key] = table
    return __EMERY_CACHE[key]


def emery_phi(u: float,
              sample_size: Optional[int] = DEFAULT_SAMPLE_SIZE,
              seed: Optional[int] = 0,
              sigma: Optional[float] = 1.0,
              dt: Optional[float] = DEFAULT_EMERY_DT) -> Tuple[float, float]:
    """
    Monte-Carlo estimate of Phi(u) = P(inf_{s <= u} 2 S_s >= S_u)

    Args:
        u: time in [0, 1]
        sample_size: number of simulated paths
        seed: base seed
        sigma: volatility of the Brownian price
        dt: grid step of the simulated paths

    Returns:
        tuple of (probability, standard error)

    Raises:
        pyenlarge.exceptions.EnlargeDomainException: u outside [0, 1]
    """
    if (u is None or not 0.0 <= u <= 1.0):
        raise EnlargeDomainException("The Emery function is defined for u in [0, 1], got %s" % (u))
    return emery_table(sample_size=sample_size, seed=seed, sigma=sigma, dt=dt).evaluate(u)
