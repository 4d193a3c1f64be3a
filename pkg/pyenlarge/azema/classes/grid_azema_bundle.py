"""
Base class of the Azema bundles of Brownian paths
"""

import numpy as np
from abc import abstractmethod
from typing import Dict, Optional, Sequence, Tuple
from .azema_bundle import AzemaBundle
from ...market.classes.sample_path import SamplePath
from ...random_times.classes.random_time_spec import RandomTimeSpec

# pdoc init
__pdoc__: Dict = {}


class GridAzemaBundle(AzemaBundle):
    """
    Azema bundle evaluated once on the grid of a Brownian path

    Subclasses return the grid arrays of Z, A° and of eta, the diffusion
    coefficient of m (dm = eta dW). Z is continuous on the grid, A° is
    continuous except for a possible atom at t = 0 (P(tau = 0) > 0).
    """

    def __init__(self, spec: RandomTimeSpec, path: SamplePath):
        super(GridAzemaBundle, self).__init__(spec, path)
        self.__values: Optional[Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]] = None

    @abstractmethod
    def grid_values(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Compute Z, A° and eta at every grid point

        Returns:
            tuple of (z, a_opt, eta) arrays
        """

    def grid_se(self) -> np.ndarray:
        """
        Standard error of Z at every grid point
        """
        return np.zeros(self.path.n_points)

    def __load(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        if (self.__values is None):
            z, a_opt, eta = self.grid_values()
            self.__values = (z, a_opt, eta, self.grid_se())
        return self.__values

    def z_series(self) -> np.ndarray:
        return self.__load()[0]

    def a_opt_series(self) -> np.ndarray:
        return self.__load()[1]

    def a_opt_left_series(self) -> np.ndarray:
        """
        A°_{t-} on the grid (0 at t = 0, A° elsewhere)
        """
        left = self.a_opt_series().copy()
        left[0] = 0.0
        return left

    def eta_series(self) -> np.ndarray:
        return self.__load()[2]

    def m_series(self) -> np.ndarray:
        return self.z_series() + self.a_opt_series()

    def z_tilde_series(self) -> np.ndarray:
        """
        Z~ = m - A°_- on the grid
        """
        return self.m_series() - self.a_opt_left_series()

    def z_at(self, t: float) -> float:
        return float(self.z_series()[self.path.index_of(t)])

    def z_left_at(self, t: float) -> float:
        return self.z_at(t)

    def a_opt_at(self, t: float) -> float:
        return float(self.a_opt_series()[self.path.index_of(t)])

    def a_opt_left_at(self, t: float) -> float:
        return float(self.a_opt_left_series()[self.path.index_of(t)])

    def eta_at(self, t: float) -> float:
        """
        Diffusion coefficient eta_t of m, dm = eta dW
        """
        return float(self.eta_series()[self.path.index_of(t)])

    def z_se_at(self, t: float) -> float:
        return float(self.__load()[3][self.path.index_of(t)])

    def default_times(self) -> np.ndarray:
        return self.path.grid

    def series(self, times: Optional[Sequence[float]] = None) -> Dict[str, np.ndarray]:
        if (times is not None):
            return super(GridAzemaBundle, self).series(times)
        return {
            "time": self.path.grid,
            "Z": self.z_series(),
            "Z_tilde": self.z_tilde_series(),
            "A_opt": self.a_opt_series(),
            "m": self.m_series(),
            "Z_se": self.__load()[3],
        }
