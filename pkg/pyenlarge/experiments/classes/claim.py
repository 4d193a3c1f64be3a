"""
Class definition for a reproduced claim
"""

from pydantic import BaseModel, validator
from typing import Dict, Optional
from .. import CHECKS
from ...market.classes.market_model import MarketModel

# pdoc init
__pdoc__: Dict = {}


class Claim(BaseModel):
    """
    One statement about a random time and the check that reproduces it

    Attributes:
        group: claim group, orders the verdict table
        kind: random time kind the claim is about
        check: one of the CHECK_* constants
        recipe: strategy recipe of the arbitrage checks, None for the default one
        statement: the claim in words
        positive_psi_only: the claim only holds for Poisson models with psi > 0
        informational: the check records an observation, a rejection is not a failure
    """
    group: str
    kind: str
    check: str
    recipe: Optional[str] = None
    statement: str
    positive_psi_only: bool = False
    informational: bool = False

    class Config:
        allow_mutation = False

    @validator("check")
    def __check_must_be_known(cls, v):  # pylint: disable=unused-private-member
        if (v not in CHECKS):
            raise ValueError("Unknown check '%s'" % (v))
        return v

    @property
    def name(self) -> str:
        """
        Row name in the verdict table, e.g. "arbitrage_before.buy_and_hold"
        """
        if (self.recipe is None):
            return self.check
        return "%s.%s" % (self.check, self.recipe)

    def applies_to(self, model: MarketModel) -> bool:
        """
        Whether the claim is made for a market model

        Args:
            model: the MarketModel

        Returns:
            True if the claim should be checked on this model
        """
        if (self.positive_psi_only is True):
            return model.is_poisson and model.psi > 0
        return True

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of Claim object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of Claim object
        """
        return "%s(group='%s', kind='%s', name='%s')" % (self.__class__.__name__, self.group, self.kind, self.name)
