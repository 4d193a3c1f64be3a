"""
Class definition for the G-compensated version of an F-martingale
"""

import numpy as np
from typing import Dict, Optional

# pdoc init
__pdoc__: Dict = {}


class GHatMartingale:
    """
    X^ = X - (G-compensator of X) along one path

    Before tau, X^_t = X_{t^tau} - int_0^{t^tau} d<X, m>/Z_-. After an
    honest tau the integral int_{t^tau}^t d<X, m>/(1 - Z_-) is added
    back and X is no longer stopped.

    Attributes:
        x: name of the F-martingale ("S", "m" or "M")
        when: "before" or "after" tau
        path_index: index of the path within its ensemble
        tau: the realized time
        times: evaluation times
        x_values: X (stopped at tau before tau) at the evaluation times
        compensator: the compensator at the evaluation times
        excluded: exclusion reason code, None when Z stays inside ]0, 1[ where needed
    """

    def __init__(self,
                 x: str,
                 when: str,
                 path_index: int,
                 tau: float,
                 times: np.ndarray,
                 x_values: np.ndarray,
                 compensator: np.ndarray,
                 excluded: Optional[str] = None):
        self.x = x
        self.when = when
        self.path_index = path_index
        self.tau = tau
        self.times = times
        self.x_values = x_values
        self.compensator = compensator
        self.excluded = excluded

    @property
    def x_hat(self) -> np.ndarray:
        return self.x_values - self.compensator

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of GHatMartingale object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of GHatMartingale object
        """
        return "%s(x='%s', when='%s', path_index=%d, tau=%s)" % (
            self.__class__.__name__,
            self.x,
            self.when,
            self.path_index,
            repr(self.tau),
        )
