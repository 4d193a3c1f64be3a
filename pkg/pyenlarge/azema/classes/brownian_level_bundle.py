"""
Azema bundle of the Brownian last passage time at a level
"""

import numpy as np
from typing import Dict, Optional, Tuple
from .. import FORM_LOCAL_TIME
from .grid_azema_bundle import GridAzemaBundle
from ...market import LOCAL_TIME_DOWNCROSSING
from ...market.local_time import estimate_local_time
from ...market.classes.sample_path import SamplePath
from ...random_times.classes.random_time_spec import RandomTimeSpec

# pdoc init
__pdoc__: Dict = {}


class BrownianLevelBundle(GridAzemaBundle):
    """
    Z = min(S/a, 1), A° = l^a / (2a) where l^a is the local time of S at
    the price level a, and dm = 1{S < a} dS / a

    Attributes:
        level: the price level a s0
        local_time_method: local time estimator behind A°
        local_time_eps: band width of the estimator, None for its default
    """
    form = FORM_LOCAL_TIME

    def __init__(self,
                 spec: RandomTimeSpec,
                 path: SamplePath,
                 local_time_method: Optional[str] = LOCAL_TIME_DOWNCROSSING,
                 local_time_eps: Optional[float] = None):
        super(BrownianLevelBundle, self).__init__(spec, path)
        self.level = spec.price_level(path.model)
        self.local_time_method = local_time_method
        self.local_time_eps = local_time_eps

    def grid_values(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        s = self.path.s
        below = s < self.level
        z = np.minimum(s / self.level, 1.0)
        local_time = estimate_local_time(self.path, self.level, method=self.local_time_method,
                                         eps=self.local_time_eps)
        a_opt = local_time / (2.0 * self.level)
        eta = np.where(below, self.model.sigma * s / self.level, 0.0)
        return (z, a_opt, eta)
