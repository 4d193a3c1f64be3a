"""
Azema bundle of the Brownian last passage time before maturity
"""

import math
import numpy as np
from typing import Dict, Optional, Tuple
from .. import FORM_LOCAL_TIME
from .grid_azema_bundle import GridAzemaBundle
from ...market import LOCAL_TIME_DOWNCROSSING
from ...market.local_time import local_time_increments
from ...market.classes.sample_path import SamplePath
from ...random_times.classes.random_time_spec import RandomTimeSpec
from ...special_functions import barrier_h, barrier_h_dy
from ...exceptions import EnlargeParameterException

# pdoc init
__pdoc__: Dict = {}


class BrownianMaturityBundle(GridAzemaBundle):
    """
    Bundle of tau = sup{t <= 1 : S_t = b s0}

    With gamma = -sigma/2 and V_t = ln(b)/sigma - gamma t - W_t (so that
    V >= 0 iff S <= b s0), Z_t = exp(gamma V_t) H(gamma, |V_t|, 1 - t)
    before maturity and 0 from t = 1 on. The diffusion coefficient of m is
    eta = -exp(gamma V)(gamma H + sgn(V) H_y), and
    A° = -int H_y(gamma, 0, 1 - t) dl_t with l the local time of V at 0,
    plus the atom P(tau = 0) = 1 - Z_0 at t = 0.

    Attributes:
        gamma: drift argument -sigma/2 of H
        level: the price level b s0
        maturity_index: grid index of t = 1
    """
    form = FORM_LOCAL_TIME

    def __init__(self,
                 spec: RandomTimeSpec,
                 path: SamplePath,
                 local_time_method: Optional[str] = LOCAL_TIME_DOWNCROSSING,
                 local_time_eps: Optional[float] = None):
        super(BrownianMaturityBundle, self).__init__(spec, path)
        if (path.horizon < 1.0 - 1e-12):
            raise EnlargeParameterException("The last passage before maturity needs paths reaching t = 1")
        self.gamma = -0.5 * self.model.sigma
        self.level = spec.price_level(path.model)
        self.maturity_index = path.index_of(1.0)
        self.local_time_method = local_time_method
        self.local_time_eps = local_time_eps

    def v_series(self) -> np.ndarray:
        """
        V_t = ln(b)/sigma - gamma t - W_t on the grid
        """
        return math.log(self.spec.b) / self.model.sigma - self.gamma * self.path.grid - self.path.driver

    def h_series(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        H(gamma, |V|, 1 - t) and H_y(gamma, |V|, 1 - t) before maturity

        Returns:
            tuple of (v, h, h_y) arrays over the grid points t < 1
        """
        k = self.maturity_index
        v = self.v_series()[0:k]
        remaining = 1.0 - self.path.grid[0:k]
        return (v, barrier_h(self.gamma, np.abs(v), remaining), barrier_h_dy(self.gamma, np.abs(v), remaining))

    def grid_values(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        n = self.path.n_points
        k = self.maturity_index
        v, h, h_y = self.h_series()
        growth = np.exp(self.gamma * v)

        # Z and the diffusion coefficient of m
        z = np.zeros(n)
        z[0:k] = growth * h
        eta = np.zeros(n)
        eta[0:k] = -growth * (self.gamma * h + np.sign(v) * h_y)

        # local time of V at 0 weighted by -H_y(gamma, 0, 1 - t)
        increments = local_time_increments(self.v_series(), 0.0, 1.0, self.path.dt, eps=self.local_time_eps,
                                           method=self.local_time_method)
        weights = np.zeros(len(increments))
        weights[0:k] = -barrier_h_dy(self.gamma, np.zeros(k), 1.0 - self.path.grid[0:k])
        a_opt = (1.0 - z[0]) + np.concatenate([[0.0], np.cumsum(weights * increments)])
        return (z, a_opt, eta)
