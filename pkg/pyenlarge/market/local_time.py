"""
Estimators of the semimartingale local time of a sampled path
"""

import math
import numpy as np
from typing import Dict, Optional
from . import LOCAL_TIME_DOWNCROSSING, LOCAL_TIME_OCCUPATION
from .classes.sample_path import SamplePath
from ..exceptions import EnlargeContractException, EnlargeParameterException

# pdoc init
__pdoc__: Dict = {}

# mean overshoot of a Gaussian random walk over a level, in units of one step deviation
OVERSHOOT_CONSTANT = 0.5826


def default_band(diffusion: float, dt: float) -> float:
    """
    Default band width c dt^(1/4) of the local time estimators, where c is
    the diffusion coefficient of the sampled process at the level
    """
    return diffusion * dt**0.25


def local_time_increments(x: np.ndarray,
                          level: float,
                          diffusion: float,
                          dt: float,
                          eps: Optional[float] = None,
                          method: Optional[str] = LOCAL_TIME_DOWNCROSSING) -> np.ndarray:
    """
    Per step increments of the local time at a level of a process sampled
    on a uniform grid

    The downcrossing estimator counts completed downcrossings D of the band
    [level, level + eps] and returns 2 eps' D, with the band widened to
    eps' = eps + 2 b c sqrt(dt) to account for the grid overshoot on both
    edges. The occupation estimator returns
    (1 / 2 eps) int 1{|X - level| < eps} d<X>, with d<X> = c^2 dt.

    Args:
        x: sampled values, one more than the number of steps
        level: the level
        diffusion: diffusion coefficient c of the process near the level
        dt: grid step
        eps: band width, defaults to c dt^(1/4)
        method: "downcrossing" or "occupation"

    Returns:
        array of local time increments, one per step

    Raises:
        pyenlarge.exceptions.EnlargeParameterException: bad band width or step
        pyenlarge.exceptions.EnlargeContractException: unknown method
    """
    # check inputs
    x = np.asarray(x, dtype=float)
    if (dt is None or not dt > 0):
        raise EnlargeParameterException("dt must be positive, got %s" % (dt))
    if (eps is None):
        eps = default_band(diffusion, dt)
    if (not eps > 0):
        raise EnlargeParameterException("The band width must be positive, got %s" % (eps))
    increments = np.zeros(max(len(x) - 1, 0))
    if (len(x) < 2):
        return increments

    if (method == LOCAL_TIME_OCCUPATION):
        inside = np.abs(x[:-1] - level) < eps
        increments[inside] = diffusion**2 * dt / (2.0 * eps)
        return increments
    if (method != LOCAL_TIME_DOWNCROSSING):
        raise EnlargeContractException("Unknown local time method '%s'" % (method))

    # label points above the band (+1) and at or below the level (-1), carry labels forward
    labels = np.where(x >= level + eps, 1, np.where(x <= level, -1, 0))
    last = np.maximum.accumulate(np.where(labels != 0, np.arange(len(x)), 0))
    carried = labels[last]
    completed = (carried[1:] == -1) & (carried[:-1] == 1)
    width = eps + 2.0 * OVERSHOOT_CONSTANT * diffusion * math.sqrt(dt)
    increments[completed] = 2.0 * width
    return increments


def estimate_local_time(path: SamplePath,
                        level: float,
                        method: Optional[str] = LOCAL_TIME_DOWNCROSSING,
                        eps: Optional[float] = None) -> np.ndarray:
    """
    Running local time of a Brownian price at a level, at every grid point

    The diffusion coefficient of S at the level is sigma * level.

    Args:
        path: a Brownian SamplePath
        level: the price level, positive
        method: "downcrossing" (primary) or "occupation" (cross-check)
        eps: band width, defaults to sigma * level * dt^(1/4)

    Returns:
        array of the running local time, starting at 0

    Raises:
        pyenlarge.exceptions.EnlargeContractException: path is not Brownian
    """
    if (path.model.is_brownian is False):
        raise EnlargeContractException("Local time estimators apply to Brownian paths")
    if (not level > 0):
        raise EnlargeParameterException("The level must be positive, got %s" % (level))
    increments = local_time_increments(path.s, level, path.model.sigma * level, path.dt, eps=eps, method=method)
    return np.concatenate([[0.0], np.cumsum(increments)])
