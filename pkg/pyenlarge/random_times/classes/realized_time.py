"""
Class definition for a random time realized on a sample path
"""

import math
from pydantic import BaseModel
from typing import Dict, Optional

# pdoc init
__pdoc__: Dict = {}


class RealizedTime(BaseModel):
    """
    Pathwise value of a random time

    Attributes:
        kind: random time kind
        path_index: index of the path within its ensemble
        tau: the realized time, float("inf") when not detected
        detected: False when the path ends before tau could be located
        t_grid_index: index of tau on the path grid (Brownian), or of the
            last event at or before tau (Poisson)
        empty_set: tau is the supremum of an empty set and was set to 0
        left_limit: the supremum defining tau is attained as a left limit
            at the jump time tau (psi < 0 supremum kinds)
        auxiliary: values used downstream, e.g. T1, T2 or the level of Y
    """
    kind: str
    path_index: int = 0
    tau: float
    detected: bool = True
    t_grid_index: Optional[int] = None
    empty_set: bool = False
    left_limit: bool = False
    auxiliary: Dict[str, float] = {}

    class Config:
        allow_mutation = False

    @property
    def finite(self) -> bool:
        return self.detected and math.isfinite(self.tau)

    def csv_row(self, auxiliary_keys: list) -> list:
        """
        Row for the realized time CSV export

        Args:
            auxiliary_keys: auxiliary columns to write, missing values are left empty

        Returns:
            the row
        """
        row = [self.path_index, repr(self.tau), int(self.detected), int(self.empty_set), int(self.left_limit)]
        for key in auxiliary_keys:
            row.append(repr(self.auxiliary[key]) if key in self.auxiliary else "")
        return row

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of RealizedTime object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of RealizedTime object
        """
        return "%s(kind='%s', path_index=%d, tau=%s, detected=%s, empty_set=%s, left_limit=%s)" % (
            self.__class__.__name__,
            self.kind,
            self.path_index,
            repr(self.tau),
            self.detected,
            self.empty_set,
            self.left_limit,
        )
