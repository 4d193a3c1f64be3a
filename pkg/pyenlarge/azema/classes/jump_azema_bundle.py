"""
Base class of the Azema bundles of Poisson paths
"""

import math
import numpy as np
from abc import abstractmethod
from typing import Dict, List, Tuple
from .azema_bundle import AzemaBundle
from ...market.classes.sample_path import SamplePath
from ...random_times.classes.random_time_spec import RandomTimeSpec

# pdoc init
__pdoc__: Dict = {}

# number of uniform evaluation times added to the jump grid in exports
SERIES_SAMPLES = 201


class JumpAzemaBundle(AzemaBundle):
    """
    Azema bundle of an exact Poisson path

    The martingale m of a Poisson filtration is a stochastic integral
    against the compensated process, dm = nu^ dM. Subclasses give the
    predictable integrand nu^_t, the jump m would make if N jumped at t,
    computed from the left limits of the path.

    A° is either a step process given by its atoms (set with
    `set_a_opt_atoms`), or reconstructed as m - Z by the subclass.
    """

    def __init__(self, spec: RandomTimeSpec, path: SamplePath):
        super(JumpAzemaBundle, self).__init__(spec, path)
        self.__atom_times = np.zeros(0)
        self.__atom_cumsum = np.zeros(1)
        self.__atom_se: List[float] = []

    @abstractmethod
    def nu_hat_at(self, t: float) -> float:
        """
        Integrand nu^_t of m against the compensated Poisson process
        """

    def nu_hat_se_at(self, t: float) -> float:
        """
        Standard error of nu^_t, 0 for exact closed forms
        """
        return 0.0

    def set_a_opt_atoms(self, atoms: List[Tuple[float, float, float]]) -> None:
        """
        Set A° as a step process

        Args:
            atoms: (time, size, standard error) tuples in increasing time order
        """
        self.__atom_times = np.asarray([a[0] for a in atoms], dtype=float)
        self.__atom_cumsum = np.concatenate([[0.0], np.cumsum([a[1] for a in atoms])])
        self.__atom_se = [a[2] for a in atoms]

    @property
    def a_opt_atom_times(self) -> np.ndarray:
        return self.__atom_times

    def a_opt_at(self, t: float) -> float:
        return float(self.__atom_cumsum[np.searchsorted(self.__atom_times, t, side="right")])

    def a_opt_left_at(self, t: float) -> float:
        return float(self.__atom_cumsum[np.searchsorted(self.__atom_times, t, side="left")])

    def a_opt_se_at(self, t: float) -> float:
        """
        Standard error of A°_t from the standard errors of its atoms
        """
        k = int(np.searchsorted(self.__atom_times, t, side="right"))
        return math.sqrt(sum([se**2 for se in self.__atom_se[0:k]]))

    def left_state(self, t: float) -> Tuple[float, float, float]:
        """
        S_{t-}, the price after a jump at t and S*_{t-}

        Args:
            t: a time, at which the path may or may not jump

        Returns:
            tuple of (S_{t-}, S_t if N jumps at t, S*_{t-})
        """
        s_left = self.path.left_value_at(t)
        if (self.path.n_at(t) > self.path.n_before(t)):
            s_right = self.path.value_at(t)
        else:
            s_right = s_left * (1.0 + self.model.psi)
        return (s_left, s_right, self.path.sup_left_at(t))

    def default_times(self) -> np.ndarray:
        samples = np.linspace(0.0, self.path.horizon, SERIES_SAMPLES)
        return np.unique(np.concatenate([self.path.grid, samples]))

    def first_jumps(self) -> Tuple[float, float]:
        """
        First two jump times of the path, inf when they fall after the horizon
        """
        jumps = [float(t) for t in self.path.jump_times[0:2]]
        while (len(jumps) < 2):
            jumps.append(float("inf"))
        return (jumps[0], jumps[1])
