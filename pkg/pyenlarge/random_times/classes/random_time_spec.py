"""
Class definition for a random time description
"""

import math
from pydantic import BaseModel, root_validator
from typing import Dict, Optional
from .. import (KIND_BROWNIAN_LEVEL,
                KIND_BROWNIAN_MATURITY,
                KIND_BROWNIAN_SUP_OVERALL,
                KIND_POISSON_LEVEL,
                KIND_POISSON_SUP_UNIT,
                KIND_POISSON_SUP_OVERALL,
                KIND_EMERY,
                KIND_CONVEX_COMBO,
                KIND_MIN_SCALED,
                KIND_MAX_SCALED)
from ...market import MODEL_BROWNIAN, MODEL_POISSON
from ...market.classes.market_model import MarketModel
from ...exceptions import EnlargeContractException

# pdoc init
__pdoc__: Dict = {}

# parameters taken by each kind
KIND_PARAMETERS = {
    KIND_BROWNIAN_LEVEL: ["a"],
    KIND_BROWNIAN_MATURITY: ["b"],
    KIND_BROWNIAN_SUP_OVERALL: [],
    KIND_POISSON_LEVEL: ["b"],
    KIND_POISSON_SUP_UNIT: [],
    KIND_POISSON_SUP_OVERALL: [],
    KIND_EMERY: [],
    KIND_CONVEX_COMBO: ["k1", "k2"],
    KIND_MIN_SCALED: ["a"],
    KIND_MAX_SCALED: ["a"],
}


def kind_parameters(kind: str) -> list:
    """
    Names of the parameters a random time kind takes

    Args:
        kind: one of the KIND_* constants

    Returns:
        list of parameter names
    """
    if (kind not in KIND_PARAMETERS):
        raise EnlargeContractException("Unknown random time kind '%s'" % (kind))
    return list(KIND_PARAMETERS[kind])


class RandomTimeSpec(BaseModel):
    """
    Declarative description of a random time

    The parameters a, b, k1 and k2 are only set for the kinds that take
    them. Levels are fractions of the initial price s0.

    Attributes:
        kind: one of the KIND_* constants of the random_times module
        a: level (Brownian level kind) or scale factor (min/max scaled kinds), in (0, 1)
        b: level of the last passage before maturity and Poisson level kinds, in (0, 1)
        k1: weight of T1 for the convex combination kind
        k2: weight of T2 for the convex combination kind
    """
    kind: str
    a: Optional[float] = None
    b: Optional[float] = None
    k1: Optional[float] = None
    k2: Optional[float] = None

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def __parameters_must_match_kind(cls, values):  # pylint: disable=unused-private-member
        kind = values.get("kind")
        if (kind not in KIND_PARAMETERS):
            raise ValueError("Unknown random time kind '%s'" % (kind))
        expected = KIND_PARAMETERS[kind]
        for name in ["a", "b", "k1", "k2"]:
            given = values.get(name) is not None
            if (given and name not in expected):
                raise ValueError("Random time kind '%s' does not take parameter %s" % (kind, name))
            if (not given and name in expected):
                raise ValueError("Random time kind '%s' requires parameter %s" % (kind, name))
        for name in ["a", "b"]:
            if (values.get(name) is not None and not 0.0 < values[name] < 1.0):
                raise ValueError("Parameter %s must lie in (0, 1), got %s" % (name, values[name]))
        if (kind == KIND_CONVEX_COMBO):
            if (not values["k1"] > 0 or not values["k2"] > 0):
                raise ValueError("Weights k1 and k2 must be positive")
            if (abs(values["k1"] + values["k2"] - 1.0) > 1e-12):
                raise ValueError("Weights must satisfy k1 + k2 = 1, got %s" % (values["k1"] + values["k2"]))
        return values

    @property
    def model_kind(self) -> str:
        """
        Market model kind the random time is built on
        """
        if (self.kind in [KIND_BROWNIAN_LEVEL, KIND_BROWNIAN_MATURITY, KIND_BROWNIAN_SUP_OVERALL, KIND_EMERY]):
            return MODEL_BROWNIAN
        return MODEL_POISSON

    @property
    def honest(self) -> bool:
        """
        Declared honesty of the random time
        """
        return self.kind not in [KIND_EMERY, KIND_CONVEX_COMBO, KIND_MIN_SCALED, KIND_MAX_SCALED]

    @property
    def avoids_stopping_times(self) -> bool:
        """
        Declared avoidance of stopping times (P(tau = sigma) = 0 for every stopping time sigma)
        """
        return self.kind in [KIND_BROWNIAN_LEVEL, KIND_BROWNIAN_MATURITY, KIND_BROWNIAN_SUP_OVERALL, KIND_CONVEX_COMBO]

    @property
    def infinite_horizon(self) -> bool:
        """
        Whether the random time is unbounded and needs an effective horizon
        """
        return self.kind in [KIND_BROWNIAN_LEVEL, KIND_BROWNIAN_SUP_OVERALL, KIND_POISSON_LEVEL,
                             KIND_POISSON_SUP_OVERALL, KIND_CONVEX_COMBO, KIND_MIN_SCALED, KIND_MAX_SCALED]

    @property
    def maturity(self) -> Optional[float]:
        """
        Maturity bounding the random time, None for unbounded kinds
        """
        if (self.kind in [KIND_BROWNIAN_MATURITY, KIND_POISSON_SUP_UNIT, KIND_EMERY]):
            return 1.0
        return None

    @property
    def is_sup_time(self) -> bool:
        return self.kind in [KIND_BROWNIAN_SUP_OVERALL, KIND_POISSON_SUP_UNIT, KIND_POISSON_SUP_OVERALL]

    @property
    def label(self) -> str:
        """
        Short label with the parameters, e.g. "brownian_last_passage_level(a=0.5)"
        """
        parameters = ["%s=%s" % (name, getattr(self, name)) for name in KIND_PARAMETERS[self.kind]]
        return "%s(%s)" % (self.kind, ", ".join(parameters))

    def check_model(self, model: MarketModel) -> None:
        """
        Check that a market model can carry this random time

        Args:
            model: the MarketModel

        Raises:
            pyenlarge.exceptions.EnlargeContractException: incompatible model
        """
        if (model.kind != self.model_kind):
            raise EnlargeContractException("Random time '%s' requires a %s model, got %s" % (
                self.kind, self.model_kind, model.kind))
        if (self.kind == KIND_POISSON_LEVEL and not model.psi > 0):
            raise EnlargeContractException("The Poisson last passage time requires psi > 0, got %s" % (model.psi))

    def price_level(self, model: MarketModel) -> float:
        """
        Price level a s0 (Brownian level kind) or b s0 (last passage before
        maturity and Poisson level kinds)

        Args:
            model: the MarketModel

        Returns:
            the price level
        """
        self.check_model(model)
        if (self.kind == KIND_BROWNIAN_LEVEL):
            return self.a * model.s0
        if (self.kind in [KIND_BROWNIAN_MATURITY, KIND_POISSON_LEVEL]):
            return self.b * model.s0
        raise EnlargeContractException("Random time kind '%s' has no price level" % (self.kind))

    def level_a(self, model: MarketModel) -> float:
        """
        Level of Y = mu t - N matching the price level b of the Poisson
        level kind, a = -ln(b)/ln(1+psi), so that S_t >= b s0 iff Y_t <= a

        Args:
            model: a Poisson MarketModel with psi > 0

        Returns:
            the level a
        """
        self.check_model(model)
        if (self.kind != KIND_POISSON_LEVEL):
            raise EnlargeContractException("Only the Poisson last passage time has a Y level")
        return -math.log(self.b) / model.alpha

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of RandomTimeSpec object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of RandomTimeSpec object
        """
        return "%s(%s)" % (self.__class__.__name__, self.label)
