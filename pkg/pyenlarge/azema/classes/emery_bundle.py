"""
Azema bundle of the Emery pseudo-stopping time
"""

import numpy as np
from typing import Dict, Optional, Tuple
from .. import FORM_ESTIMATED
from .grid_azema_bundle import GridAzemaBundle
from ...market.classes.sample_path import SamplePath
from ...random_times.classes.random_time_spec import RandomTimeSpec
from ...special_functions import DEFAULT_SAMPLE_SIZE, emery_table
from ...special_functions.classes.emery_phi_table import EmeryPhiTable
from ...exceptions import EnlargeParameterException

# pdoc init
__pdoc__: Dict = {}


class EmeryBundle(GridAzemaBundle):
    """
    Bundle of tau = sup{t <= 1 : S_1 = 2 S_t}

    Z is the deterministic function 1 - Phi(1 - t) before maturity and 0
    after, with Phi(u) = P(inf_{s <= u} 2 S_s >= S_u). tau is a
    pseudo-stopping time: m = 1 and A° = 1 - Z, including the atom
    P(tau = 0) = Phi(1) at t = 0.

    Attributes:
        table: the EmeryPhiTable behind Z
    """
    form = FORM_ESTIMATED

    def __init__(self,
                 spec: RandomTimeSpec,
                 path: SamplePath,
                 table: Optional[EmeryPhiTable] = None,
                 sample_size: Optional[int] = DEFAULT_SAMPLE_SIZE,
                 seed: Optional[int] = 0):
        super(EmeryBundle, self).__init__(spec, path)
        if (path.horizon < 1.0 - 1e-12):
            raise EnlargeParameterException("The Emery time needs paths reaching t = 1")
        if (table is None):
            table = emery_table(sample_size=sample_size, seed=seed, sigma=self.model.sigma)
        self.table = table
        self.__se: Optional[np.ndarray] = None

    def __evaluate(self) -> Tuple[np.ndarray, np.ndarray]:
        grid = self.path.grid
        z = np.zeros(len(grid))
        se = np.zeros(len(grid))
        for i in np.nonzero(grid < 1.0)[0]:
            p, p_se = self.table.evaluate(1.0 - float(grid[i]))
            z[i] = 1.0 - p
            se[i] = p_se
        self.__se = se
        return (z, se)

    def grid_values(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        z, _ = self.__evaluate()
        return (z, 1.0 - z, np.zeros(len(z)))

    def grid_se(self) -> np.ndarray:
        if (self.__se is None):
            self.__evaluate()
        return self.__se
