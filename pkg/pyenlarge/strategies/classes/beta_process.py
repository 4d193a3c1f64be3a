"""
Class definition for the integrand of the last passage time before maturity
"""

import math
import numpy as np
from typing import Dict, Optional
from .. import VARIANT_DERIVED
from ...azema.classes.brownian_maturity_bundle import BrownianMaturityBundle
from ...special_functions import barrier_h
from ...exceptions import EnlargeContractException

# pdoc init
__pdoc__: Dict = {}


class BetaProcess:
    """
    beta_t, the coefficient of dW in dZ for tau = sup{t <= 1 : S_t = b s0}

    Z_t = exp(gamma V_t) H(gamma, |V_t|, 1 - t) is a function of W_t through
    V_t = ln(b)/sigma - gamma t - W_t. Ito's formula gives
    beta = -exp(gamma V)(gamma H + sgn(V) H_y), the "derived" variant.
    The "printed" variant is exp(gamma V)(gamma H - sgn(V) H_y).

    Attributes:
        bundle: the BrownianMaturityBundle of the path
    """

    def __init__(self, bundle: BrownianMaturityBundle):
        if (not isinstance(bundle, BrownianMaturityBundle)):
            raise EnlargeContractException("beta is defined for the last passage time before maturity only")
        self.bundle = bundle

    def beta_series(self, variant: Optional[str] = VARIANT_DERIVED) -> np.ndarray:
        """
        beta at every grid point (0 from maturity on)

        Args:
            variant: "derived" or "printed"

        Returns:
            array of beta values
        """
        if (variant == VARIANT_DERIVED):
            return self.bundle.eta_series()
        v, h, h_y = self.bundle.h_series()
        gamma = self.bundle.gamma
        beta = np.zeros(self.bundle.path.n_points)
        beta[0:len(v)] = np.exp(gamma * v) * (gamma * h - np.sign(v) * h_y)
        return beta

    def z_of_driver(self, index: int, w: float) -> float:
        """
        Z at grid point `index` had W taken the value w there
        """
        bundle = self.bundle
        t = float(bundle.path.grid[index])
        if (t >= 1.0):
            return 0.0
        v = math.log(bundle.spec.b) / bundle.model.sigma - bundle.gamma * t - w
        return float(math.exp(bundle.gamma * v) * barrier_h(bundle.gamma, abs(v), 1.0 - t))

    def finite_difference(self, index: int, h: Optional[float] = 1e-5) -> float:
        """
        Central difference of Z with respect to W at a grid point

        Args:
            index: grid index, before maturity
            h: half width of the difference

        Returns:
            the estimate of dZ/dW
        """
        w = float(self.bundle.path.driver[index])
        return (self.z_of_driver(index, w + h) - self.z_of_driver(index, w - h)) / (2.0 * h)

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of BetaProcess object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of BetaProcess object
        """
        return "%s(path_index=%d, gamma=%s)" % (self.__class__.__name__, self.bundle.path.index, repr(self.bundle.gamma))
