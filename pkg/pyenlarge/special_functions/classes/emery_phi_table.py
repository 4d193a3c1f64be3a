"""
Class definition for the Monte-Carlo table of the Emery function
"""

import datetime
import numpy as np
from typing import Dict, Optional, Tuple
from .. import DEFAULT_SAMPLE_SIZE, DEFAULT_EMERY_DT
from ...market import MODEL_BROWNIAN
from ...market.classes.market_model import MarketModel
from ...market.market import simulate_brownian
from ...exceptions import EnlargeDomainException

# pdoc init
__pdoc__: Dict = {}


class EmeryPhiTable:
    """
    Estimate of Phi(u) = P(inf_{s <= u} 2 S_s >= S_u) for a geometric
    Brownian motion on [0, 1].

    The infimum uses the Brownian bridge minimum of every step, so that
    a dip between grid points is not missed.

    Attributes:
        sample_size: number of simulated paths
        seed: base seed
        sigma: volatility
        dt: grid step
        u_grid: grid of u
        values: estimated Phi on the grid
        std_errors: binomial standard errors
    """

    def __init__(self,
                 sample_size: Optional[int] = DEFAULT_SAMPLE_SIZE,
                 seed: Optional[int] = 0,
                 sigma: Optional[float] = 1.0,
                 dt: Optional[float] = DEFAULT_EMERY_DT):
        self.sample_size = int(sample_size)
        self.seed = int(seed)
        self.sigma = float(sigma)
        self.dt = float(dt)
        self.u_grid: Optional[np.ndarray] = None
        self.values: Optional[np.ndarray] = None
        self.std_errors: Optional[np.ndarray] = None

    def build(self, verbose: Optional[bool] = False) -> None:
        """
        Simulate the paths and fill the table

        Args:
            verbose: output progress messages, defaults to False
        """
        if (verbose is True):
            print("[%s] Building Emery table from %d paths ..." % (datetime.datetime.now(), self.sample_size))
        model = MarketModel(kind=MODEL_BROWNIAN, sigma=self.sigma)
        counts = None
        for i in range(0, self.sample_size):
            path = simulate_brownian(model, 1.0, self.dt, self.seed, index=i)
            running_min = np.minimum.accumulate(np.concatenate([[path.s[0]], path.step_min]))
            holds = (2.0 * running_min >= path.s)
            counts = holds.astype(int) if counts is None else counts + holds
            if (self.u_grid is None):
                self.u_grid = np.array(path.grid)
        self.values = counts / self.sample_size
        self.std_errors = np.sqrt(self.values * (1.0 - self.values) / self.sample_size)

    def evaluate(self, u: float) -> Tuple[float, float]:
        """
        Evaluate Phi by linear interpolation

        Args:
            u: time in [0, 1]

        Returns:
            tuple of (probability, standard error)
        """
        if (not 0.0 <= u <= 1.0):
            raise EnlargeDomainException("The Emery function is defined for u in [0, 1], got %s" % (u))
        if (self.values is None):
            self.build()
        if (u == 0):
            return (1.0, 0.0)
        return (float(np.interp(u, self.u_grid, self.values)), float(np.interp(u, self.u_grid, self.std_errors)))

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of EmeryPhiTable object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of EmeryPhiTable object
        """
        return "%s(sample_size=%d, seed=%d, sigma=%s, dt=%s)" % (
            self.__class__.__name__,
            self.sample_size,
            self.seed,
            repr(self.sigma),
            repr(self.dt),
        )
