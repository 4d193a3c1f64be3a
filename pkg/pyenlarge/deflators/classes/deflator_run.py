"""
Class definition for a deflator along one path
"""

import csv
import numpy as np
from typing import Dict, List, Optional
from .. import DEFLATOR_CSV_HEADER
from ...exceptions import EnlargeParameterException

# pdoc init
__pdoc__: Dict = {}


class DeflatorRun:
    """
    Positive local martingale deflator L of S^tau ("before") or of
    S - S^tau ("after"), evaluated at fixed times of one path

    Attributes:
        path_index: index of the path within its ensemble
        when: "before" or "after" tau
        tau: the realized time (the path horizon when tau was not detected before it)
        times: evaluation times
        l: L at the evaluation times
        deflated: L S^tau or L (S - S^tau) at the evaluation times
        undeflated: S^tau or S - S^tau at the evaluation times
        kappa: integrand of L against m^ at every jump (Poisson) or grid step (Brownian)
        jump_factors: factors 1 + kappa dm^ of the stochastic exponential at the jumps
        excluded: exclusion reason code, None when the path enters the statistics
    """

    def __init__(self,
                 path_index: int,
                 when: str,
                 tau: float,
                 times: np.ndarray,
                 l: np.ndarray,
                 deflated: np.ndarray,
                 undeflated: np.ndarray,
                 kappa: Optional[np.ndarray] = None,
                 jump_factors: Optional[np.ndarray] = None,
                 excluded: Optional[str] = None):
        self.path_index = path_index
        self.when = when
        self.tau = tau
        self.times = times
        self.l = l  # noqa: E741
        self.deflated = deflated
        self.undeflated = undeflated
        self.kappa = np.zeros(0) if kappa is None else kappa
        self.jump_factors = np.zeros(0) if jump_factors is None else jump_factors
        self.excluded = excluded

    @property
    def min_l(self) -> float:
        return float(np.min(self.l)) if len(self.l) > 0 else float("nan")

    @property
    def min_jump_factor(self) -> float:
        return float(np.min(self.jump_factors)) if len(self.jump_factors) > 0 else float("nan")

    def positive(self) -> bool:
        """
        L > 0 at every evaluation time and every jump factor > 0
        """
        if (len(self.jump_factors) > 0 and not np.all(self.jump_factors > 0)):
            return False
        return bool(np.all(self.l > 0))

    def at(self, t: float) -> float:
        """
        L at one of the evaluation times

        Raises:
            pyenlarge.exceptions.EnlargeParameterException: t is not an evaluation time
        """
        matches = np.nonzero(np.isclose(self.times, t, rtol=0.0, atol=1e-12))[0]
        if (len(matches) == 0):
            raise EnlargeParameterException("Time %s is not an evaluation time of the deflator" % (t))
        return float(self.l[matches[0]])

    def csv_rows(self) -> List[List]:
        """
        Rows of the deflator CSV export, matching DEFLATOR_CSV_HEADER
        """
        rows = []
        for i in range(0, len(self.times)):
            rows.append([self.path_index, repr(float(self.times[i])), repr(float(self.l[i])), repr(float(self.deflated[i]))])
        return rows

    def to_csv(self, filename: str) -> None:
        """
        Write this run to a CSV file

        Args:
            filename: output filename
        """
        with open(filename, "w", newline="") as fp:
            writer = csv.writer(fp)
            writer.writerow(DEFLATOR_CSV_HEADER)
            writer.writerows(self.csv_rows())

    def to_json_serializable(self) -> Dict:
        """
        Convert object to a JSON-serializable dictionary

        Returns:
            a dictionary object that is JSON-serializable
        """
        return {
            "path_index": self.path_index,
            "when": self.when,
            "tau": self.tau,
            "times": self.times.tolist(),
            "l": self.l.tolist(),
            "deflated": self.deflated.tolist(),
            "min_jump_factor": self.min_jump_factor,
            "excluded": self.excluded,
        }

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of DeflatorRun object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of DeflatorRun object
        """
        return "%s(path_index=%d, when='%s', tau=%s, min_l=%s, excluded=%s)" % (
            self.__class__.__name__,
            self.path_index,
            self.when,
            repr(self.tau),
            repr(self.min_l),
            repr(self.excluded),
        )
