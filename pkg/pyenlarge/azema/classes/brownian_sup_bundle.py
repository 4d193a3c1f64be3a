"""
Azema bundle of the time of the overall supremum of a Brownian price
"""

import numpy as np
from typing import Dict, Tuple
from .grid_azema_bundle import GridAzemaBundle

# pdoc init
__pdoc__: Dict = {}


class BrownianSupBundle(GridAzemaBundle):
    """
    Z = S/S*, A° = ln(S*/s0) and dm = dS/S*, with S* the running
    supremum refined by the bridge maxima of the steps
    """

    def grid_values(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        s = self.path.s
        s_star = self.path.s_star_refined
        z = s / s_star
        a_opt = np.log(s_star / self.model.s0)
        eta = self.model.sigma * z
        return (z, a_opt, eta)
