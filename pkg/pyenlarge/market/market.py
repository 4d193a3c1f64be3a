"""
Functions for generating sample paths of the market models
"""

import csv
import datetime
import numpy as np
from typing import Dict, Iterable, List, Optional
from .classes.market_model import MarketModel
from .classes.sample_path import SamplePath, CSV_HEADER
from .._internal.util import path_rng, map_ordered
from ..exceptions import EnlargeParameterException, EnlargeContractException

# pdoc init
__pdoc__: Dict = {}


def __check_horizon(horizon: float) -> None:
    if (horizon is None or not np.isfinite(horizon) or horizon < 0):
        raise EnlargeParameterException("Horizon must be a finite non-negative time, got %s" % (horizon))


def bridge_extremes(x0: np.ndarray,
                    x1: np.ndarray,
                    variance: float,
                    u: np.ndarray) -> tuple:
    """
    Sample the maximum and minimum of a Brownian bridge by inversion

    Given the end points of a Brownian motion with the given variance over
    a step, the maximum of the bridge has the law
    P(max >= m) = exp(-2 (m - x0)(m - x1) / variance), which gives
    max = (x0 + x1 + sqrt((x1 - x0)^2 - 2 variance ln U)) / 2 and the
    mirrored expression for the minimum. Both are drawn from the same
    uniform so each is exact marginally.

    Args:
        x0: values at the start of the steps
        x1: values at the end of the steps
        variance: variance of the increment over one step
        u: uniforms in (0, 1]

    Returns:
        tuple of (maximum, minimum) arrays
    """
    root = np.sqrt((x1 - x0)**2 - 2.0 * variance * np.log(u))
    return ((x0 + x1 + root) / 2.0, (x0 + x1 - root) / 2.0)


def brownian_path_from_increments(model: MarketModel,
                                  dt: float,
                                  dw: np.ndarray,
                                  u: Optional[np.ndarray] = None,
                                  seed: int = 0,
                                  index: int = 0) -> SamplePath:
    """
    Build a Brownian path from given Brownian increments

    Each step uses the exact log-normal transition
    ln(S_{i+1}/S_i) = sigma dW - sigma^2 dt / 2.

    Args:
        model: a Brownian MarketModel
        dt: grid step
        dw: Brownian increments, one per step
        u: uniforms in (0, 1] for the bridge extremes, defaults to 1
            (extremes equal to the larger/smaller end point)
        seed: seed recorded on the path
        index: path index recorded on the path

    Returns:
        the SamplePath

    Raises:
        pyenlarge.exceptions.EnlargeContractException: model is not Brownian
        pyenlarge.exceptions.EnlargeParameterException: dt is not positive
    """
    # check inputs
    if (model.is_brownian is False):
        raise EnlargeContractException("A Brownian path requires a Brownian model")
    if (dt is None or not dt > 0):
        raise EnlargeParameterException("dt must be positive, got %s" % (dt))
    dw = np.asarray(dw, dtype=float)
    n = len(dw)
    if (u is None):
        u = np.ones(n)

    # grid and driver
    grid = np.arange(0, n + 1) * dt
    w = np.concatenate([[0.0], np.cumsum(dw)])

    # exact log-normal stepping
    sigma = model.sigma
    log_s = np.log(model.s0) + np.concatenate([[0.0], np.cumsum(sigma * dw - 0.5 * sigma**2 * dt)])
    s = np.exp(log_s)

    # bridge extremes in log space
    if (n > 0):
        log_max, log_min = bridge_extremes(log_s[:-1], log_s[1:], sigma**2 * dt, np.asarray(u, dtype=float))
        step_max = np.exp(log_max)
        step_min = np.exp(log_min)
        s_star = np.maximum.accumulate(s)
        s_star_refined = np.concatenate([[s[0]], np.maximum(np.maximum.accumulate(step_max), s_star[1:])])
    else:
        step_max = np.zeros(0)
        step_min = np.zeros(0)
        s_star = s.copy()
        s_star_refined = s.copy()

    # return
    return SamplePath(model=model,
                      horizon=float(grid[-1]),
                      grid=grid,
                      s=s,
                      s_left=s,
                      driver=w,
                      s_star=s_star,
                      seed=seed,
                      index=index,
                      s_star_refined=s_star_refined,
                      step_max=step_max,
                      step_min=step_min)


def simulate_brownian(model: MarketModel,
                      horizon: float,
                      dt: float,
                      seed: int,
                      index: Optional[int] = 0) -> SamplePath:
    """
    Simulate a geometric Brownian motion path on a uniform grid

    The number of steps is the smallest integer n with n dt >= horizon,
    and the step is then horizon / n so that the grid ends exactly at
    the horizon. A horizon of 0 gives the single point S_0.

    Args:
        model: a Brownian MarketModel
        horizon: last time of the path
        dt: requested grid step
        seed: base seed
        index: path index, selects an independent stream for the same seed

    Returns:
        the SamplePath

    Raises:
        pyenlarge.exceptions.EnlargeParameterException: bad horizon or dt
    """
    # check inputs
    __check_horizon(horizon)
    if (dt is None or not dt > 0 or (horizon > 0 and dt > horizon)):
        raise EnlargeParameterException("dt must satisfy 0 < dt <= horizon, got %s" % (dt))

    # draw
    rng = path_rng(seed, index)
    if (horizon == 0):
        return brownian_path_from_increments(model, 1.0, np.zeros(0), seed=seed, index=index)
    n = int(np.ceil(horizon / dt - 1e-9))
    step = horizon / n
    dw = rng.standard_normal(n) * np.sqrt(step)
    u = 1.0 - rng.random(n)

    # return
    return brownian_path_from_increments(model, step, dw, u, seed=seed, index=index)


def poisson_path_from_jump_times(model: MarketModel,
                                 jump_times: Iterable[float],
                                 horizon: float,
                                 seed: int = 0,
                                 index: int = 0) -> SamplePath:
    """
    Build an exact Poisson path from its jump times

    Args:
        model: a Poisson MarketModel
        jump_times: increasing jump times, those after the horizon are dropped
        horizon: last time of the path
        seed: seed recorded on the path
        index: path index recorded on the path

    Returns:
        the SamplePath

    Raises:
        pyenlarge.exceptions.EnlargeContractException: model is not Poisson
        pyenlarge.exceptions.EnlargeParameterException: bad horizon or jump times
    """
    # check inputs
    if (model.is_poisson is False):
        raise EnlargeContractException("A Poisson path requires a Poisson model")
    __check_horizon(horizon)
    jumps = np.asarray([t for t in jump_times if t <= horizon], dtype=float)
    if (len(jumps) > 0 and (jumps[0] <= 0 or np.any(np.diff(jumps) <= 0))):
        raise EnlargeParameterException("Jump times must be positive and strictly increasing")

    # grid of event times
    grid = np.concatenate([[0.0], jumps])
    if (len(jumps) == 0 or jumps[-1] < horizon):
        grid = np.concatenate([grid, [horizon]]) if horizon > 0 else grid
    n_right = np.searchsorted(jumps, grid, side="right")
    n_left = np.searchsorted(jumps, grid, side="left")

    # closed form values
    drift = -model.lam * model.psi * grid
    s = model.s0 * np.exp(drift + model.alpha * n_right)
    s_left = model.s0 * np.exp(drift + model.alpha * n_left)

    # running supremum, attained at right values (psi > 0) or left limits (psi < 0)
    s_star = np.maximum.accumulate(np.maximum(s, s_left))
    y = model.mu * grid - n_right

    # return
    return SamplePath(model=model,
                      horizon=horizon,
                      grid=grid,
                      s=s,
                      s_left=s_left,
                      driver=n_right.astype(float),
                      s_star=s_star,
                      seed=seed,
                      index=index,
                      jump_times=jumps,
                      y=y)


def simulate_poisson(model: MarketModel,
                     horizon: float,
                     seed: int,
                     index: Optional[int] = 0) -> SamplePath:
    """
    Simulate an exact event-driven geometric Poisson path

    Jump times are exact exponential(lam) arrivals. The path stores the
    values immediately before and after each jump together with Y.

    Args:
        model: a Poisson MarketModel
        horizon: last time of the path
        seed: base seed
        index: path index, selects an independent stream for the same seed

    Returns:
        the SamplePath

    Raises:
        pyenlarge.exceptions.EnlargeParameterException: bad horizon
    """
    # check inputs
    __check_horizon(horizon)

    # draw arrivals in batches until the horizon is passed
    rng = path_rng(seed, index)
    batch = max(16, int(2 * model.lam * horizon) + 16)
    times: List[float] = []
    last = 0.0
    while (last <= horizon):
        arrivals = last + np.cumsum(rng.exponential(1.0 / model.lam, batch))
        times.extend(arrivals.tolist())
        last = float(arrivals[-1])

    # return
    return poisson_path_from_jump_times(model, times, horizon, seed=seed, index=index)


def simulate(model: MarketModel,
             horizon: float,
             seed: int,
             index: Optional[int] = 0,
             dt: Optional[float] = None) -> SamplePath:
    """
    Simulate one path of either model kind

    Args:
        model: the MarketModel
        horizon: last time of the path
        seed: base seed
        index: path index
        dt: grid step, required for Brownian models

    Returns:
        the SamplePath
    """
    if (model.is_brownian):
        if (dt is None):
            raise EnlargeParameterException("Brownian paths require dt")
        return simulate_brownian(model, horizon, dt, seed, index=index)
    return simulate_poisson(model, horizon, seed, index=index)


def simulate_ensemble(model: MarketModel,
                      n_paths: int,
                      horizon: float,
                      seed: int,
                      dt: Optional[float] = None,
                      start_index: Optional[int] = 0,
                      threads: Optional[int] = 1,
                      verbose: Optional[bool] = False) -> List[SamplePath]:
    """
    Simulate an ensemble of paths, optionally on several threads

    Path i uses the stream (seed, start_index + i), so the ensemble is
    the same whatever the number of threads.

    Args:
        model: the MarketModel
        n_paths: number of paths
        horizon: last time of the paths
        seed: base seed
        dt: grid step, required for Brownian models
        start_index: index of the first path
        threads: number of worker threads, defaults to 1
        verbose: output progress messages, defaults to False

    Returns:
        list of SamplePath objects ordered by index
    """
    # init
    if (n_paths < 1):
        raise EnlargeParameterException("n_paths must be at least 1")
    indexes = list(range(start_index, start_index + n_paths))
    if (verbose is True):
        print("[%s] Simulating %d paths ..." % (datetime.datetime.now(), n_paths))

    # simulate
    paths = map_ordered(lambda i: simulate(model, horizon, seed, index=i, dt=dt), indexes, threads=threads)
    if (verbose is True):
        print("[%s] Simulation done" % (datetime.datetime.now()))
    return paths


def write_paths_csv(paths: List[SamplePath], filename: str) -> None:
    """
    Write an ensemble to a long format CSV file with a path_id column

    Args:
        paths: the paths
        filename: output filename
    """
    with open(filename, "w", newline="") as fp:
        writer = csv.writer(fp)
        writer.writerow(CSV_HEADER)
        for path in paths:
            writer.writerows(path.csv_rows())
