"""
Class definition for the wealth process of a strategy along one path
"""

import numpy as np
from typing import Dict, Optional
from .phi_evaluator import PhiEvaluator

# pdoc init
__pdoc__: Dict = {}


class StrategyRun:
    """
    Wealth V = int phi dS of a self-financing strategy with zero initial
    cost, over its active interval ]start, end]

    Poisson wealth is recorded at every jump of the interval and at its
    end, Brownian wealth at every grid point of the interval.

    Attributes:
        phi: the PhiEvaluator held over the interval
        path_index: index of the path within its ensemble
        when: "before" or "after" tau
        recipe: name of the recipe ("theorem", "buy_and_hold", ...)
        start: left end of the active interval
        end: right end of the active interval
        times: times at which the wealth is recorded, starting at `start`
        wealth: wealth at those times, starting at 0
        admissibility_bound: the a of the admissibility constraint V >= -a
        tolerance: numerical tolerance of the verdicts
    """

    def __init__(self,
                 phi: PhiEvaluator,
                 path_index: int,
                 when: str,
                 recipe: str,
                 start: float,
                 end: float,
                 times: np.ndarray,
                 wealth: np.ndarray,
                 admissibility_bound: Optional[float] = 1.0,
                 tolerance: Optional[float] = 0.0):
        self.phi = phi
        self.path_index = path_index
        self.when = when
        self.recipe = recipe
        self.start = start
        self.end = end
        self.times = times
        self.wealth = wealth
        self.admissibility_bound = admissibility_bound
        self.tolerance = tolerance

    @property
    def final_wealth(self) -> float:
        return float(self.wealth[-1])

    @property
    def min_wealth(self) -> float:
        return float(np.min(self.wealth))

    def nonneg_at_end(self) -> bool:
        """
        V_end >= -tolerance
        """
        return self.final_wealth >= -self.tolerance

    def strictly_positive(self) -> bool:
        """
        V_end > tolerance
        """
        return self.final_wealth > self.tolerance

    def admissible(self) -> bool:
        """
        V >= -a - tolerance at every recorded time
        """
        if (self.admissibility_bound is None):
            return True
        return self.min_wealth >= -self.admissibility_bound - self.tolerance

    def to_json_serializable(self) -> Dict:
        """
        Convert object to a JSON-serializable dictionary

        Returns:
            a dictionary object that is JSON-serializable
        """
        return {
            "path_index": self.path_index,
            "when": self.when,
            "recipe": self.recipe,
            "variant": self.phi.variant,
            "start": self.start,
            "end": self.end,
            "final_wealth": self.final_wealth,
            "min_wealth": self.min_wealth,
            "nonneg_at_end": self.nonneg_at_end(),
            "strictly_positive": self.strictly_positive(),
            "admissible": self.admissible(),
        }

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of StrategyRun object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of StrategyRun object
        """
        return "%s(path_index=%d, when='%s', recipe='%s', start=%s, end=%s, final_wealth=%s)" % (
            self.__class__.__name__,
            self.path_index,
            self.when,
            self.recipe,
            repr(self.start),
            repr(self.end),
            repr(self.final_wealth),
        )
