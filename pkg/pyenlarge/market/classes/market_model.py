"""
Class definition for a market model
"""

import math
import json
from pydantic import BaseModel, root_validator
from typing import Dict, Optional
from .. import MODEL_BROWNIAN, MODEL_POISSON
from ..._internal.util import short_hash

# pdoc init
__pdoc__: Dict = {}


class MarketModel(BaseModel):
    """
    Parameters of a one asset market

    Two kinds are supported. The Brownian kind is the geometric Brownian
    motion dS = S sigma dW with no drift. The Poisson kind is the geometric
    compensated Poisson process dS = S_- psi dM, with M = N - lam t,
    whose explicit solution is S = s0 exp(-lam psi t + ln(1+psi) N).

    Attributes:
        kind: "brownian_gbm" or "geom_poisson"
        sigma: volatility (Brownian kind only)
        lam: jump intensity (Poisson kind only)
        psi: relative jump size, psi > -1 and psi != 0 (Poisson kind only)
        s0: initial price, defaults to 1
    """
    kind: str
    sigma: Optional[float] = None
    lam: Optional[float] = None
    psi: Optional[float] = None
    s0: float = 1.0

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def __parameters_must_match_kind(cls, values):  # pylint: disable=unused-private-member
        kind = values.get("kind")
        if (values.get("s0") is None or not values["s0"] > 0):
            raise ValueError("s0 must be positive")
        if (kind == MODEL_BROWNIAN):
            if (values.get("sigma") is None or not values["sigma"] > 0):
                raise ValueError("Brownian model requires sigma > 0")
            if (values.get("lam") is not None or values.get("psi") is not None):
                raise ValueError("Brownian model does not take lam or psi")
        elif (kind == MODEL_POISSON):
            if (values.get("lam") is None or not values["lam"] > 0):
                raise ValueError("Poisson model requires lam > 0")
            psi = values.get("psi")
            if (psi is None or not psi > -1.0 or psi == 0.0):
                raise ValueError("Poisson model requires psi > -1 and psi != 0")
            if (values.get("sigma") is not None):
                raise ValueError("Poisson model does not take sigma")
        else:
            raise ValueError("Unknown model kind '%s'" % (kind))
        return values

    @property
    def is_brownian(self) -> bool:
        return self.kind == MODEL_BROWNIAN

    @property
    def is_poisson(self) -> bool:
        return self.kind == MODEL_POISSON

    @property
    def alpha(self) -> float:
        """
        Log jump size ln(1+psi)
        """
        return math.log1p(self.psi)

    @property
    def mu(self) -> float:
        """
        Drift of Y = mu t - N, mu = lam psi / ln(1+psi)
        """
        return self.lam * self.psi / self.alpha

    @property
    def theta(self) -> float:
        """
        Safety loading mu/lam - 1 of the ruin problem attached to Y
        """
        return self.mu / self.lam - 1.0

    def model_hash(self) -> str:
        """
        Stable hash of the model parameters, used to key cached tables

        Returns:
            hexadecimal hash string
        """
        return short_hash(json.dumps(self.dict(), sort_keys=True))

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of MarketModel object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of MarketModel object
        """
        if (self.kind == MODEL_BROWNIAN):
            return "%s(kind='%s', sigma=%s, s0=%s)" % (self.__class__.__name__, self.kind,
                                                        repr(self.sigma), repr(self.s0))
        return "%s(kind='%s', lam=%s, psi=%s, s0=%s)" % (self.__class__.__name__, self.kind,
                                                         repr(self.lam), repr(self.psi), repr(self.s0))
