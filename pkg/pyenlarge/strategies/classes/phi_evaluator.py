"""
Class definition for a predictable strategy evaluator
"""

import numpy as np
from typing import Callable, Dict, Optional
from ...market.classes.market_model import MarketModel
from ...random_times.classes.random_time_spec import RandomTimeSpec
from ...exceptions import EnlargeContractException

# pdoc init
__pdoc__: Dict = {}


class PhiEvaluator:
    """
    Position phi in the risky asset, as a function of the Azema bundle of
    a path

    On Poisson paths `at(bundle, t)` reads left limits only, so that phi
    is predictable and can be integrated exactly between jumps. On
    Brownian paths `on_grid(bundle)` gives the position held over each
    grid step, taken at its left end.

    Attributes:
        spec: the RandomTimeSpec the strategy was built for, None for recipes
        model: the MarketModel
        variant: "derived" or "printed"
        description: short description of the formula
    """

    def __init__(self,
                 spec: Optional[RandomTimeSpec],
                 model: MarketModel,
                 variant: str,
                 description: str,
                 at: Optional[Callable] = None,
                 on_grid: Optional[Callable] = None):
        self.spec = spec
        self.model = model
        self.variant = variant
        self.description = description
        self.__at = at
        self.__on_grid = on_grid

    def at(self, bundle, t: float) -> float:
        """
        phi_t on a Poisson path

        Args:
            bundle: the AzemaBundle of the path
            t: time

        Returns:
            the position at t

        Raises:
            pyenlarge.exceptions.EnlargeContractException: Brownian model
        """
        if (self.__at is None):
            raise EnlargeContractException("Strategy '%s' is evaluated on the grid of Brownian paths" % (
                self.description))
        return float(self.__at(bundle, t))

    def on_grid(self, bundle) -> np.ndarray:
        """
        phi at every grid point of a Brownian path

        Args:
            bundle: the AzemaBundle of the path

        Returns:
            array of positions, one per grid point

        Raises:
            pyenlarge.exceptions.EnlargeContractException: Poisson model
        """
        if (self.__on_grid is None):
            raise EnlargeContractException("Strategy '%s' is evaluated pointwise on Poisson paths" % (
                self.description))
        return np.asarray(self.__on_grid(bundle), dtype=float)

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of PhiEvaluator object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of PhiEvaluator object
        """
        return "%s(kind=%s, variant='%s', description='%s')" % (
            self.__class__.__name__,
            None if self.spec is None else repr(self.spec.kind),
            self.variant,
            self.description,
        )
