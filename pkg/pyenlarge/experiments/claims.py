"""
Registry of the reproduced claims
"""

from typing import Dict, List, Optional
from . import (GROUP_HONEST_BROWNIAN,
               GROUP_HONEST_POISSON,
               GROUP_NON_HONEST_POISSON,
               GROUP_PSEUDO_STOPPING,
               GROUP_DEFLATOR,
               CHECK_HONEST,
               CHECK_JUMP_IDENTITY,
               CHECK_ARBITRAGE_BEFORE,
               CHECK_ARBITRAGE_AFTER,
               CHECK_DEFLATOR_BEFORE,
               CHECK_DEFLATOR_AFTER)
from .classes.claim import Claim
from ..random_times import (KIND_BROWNIAN_LEVEL,
                            KIND_BROWNIAN_MATURITY,
                            KIND_BROWNIAN_SUP_OVERALL,
                            KIND_POISSON_LEVEL,
                            KIND_POISSON_SUP_UNIT,
                            KIND_POISSON_SUP_OVERALL,
                            KIND_EMERY,
                            KIND_CONVEX_COMBO,
                            KIND_MIN_SCALED,
                            KIND_MAX_SCALED)
from ..random_times.classes.random_time_spec import kind_parameters
from ..strategies import RECIPE_BUY_AND_HOLD, RECIPE_SHORT_AFTER

# pdoc init
__pdoc__: Dict = {}


def __honest_claims(group: str, kind: str) -> List[Claim]:
    # S_tau = a on every path of the Brownian level time, so E[L_tau S_tau] <= a < 1
    # and L S^tau is a strict local martingale whose mean decays
    strict = kind == KIND_BROWNIAN_LEVEL
    deflator = "L S^tau is a positive strict local martingale with decaying mean" if strict else \
        "L S^tau has constant expectation with L > 0"
    return [
        Claim(group=group, kind=kind, check=CHECK_HONEST,
              statement="Z~_tau = 1 on {tau < infinity}"),
        Claim(group=group, kind=kind, check=CHECK_ARBITRAGE_BEFORE,
              statement="phi . S on ]0, tau] has V_tau = m_tau - 1 >= 0 and P(V_tau > 0) > 0"),
        Claim(group=group, kind=kind, check=CHECK_ARBITRAGE_AFTER,
              statement="-phi . S on ]tau, nu] has V_nu >= 0 and P(V_nu > 0) > 0"),
        Claim(group=GROUP_DEFLATOR, kind=kind, check=CHECK_DEFLATOR_BEFORE, informational=strict,
              statement=deflator),
    ]


def __non_honest_claims(kind: str) -> List[Claim]:
    return [
        Claim(group=GROUP_NON_HONEST_POISSON, kind=kind, check=CHECK_HONEST,
              statement="Z~_tau matches its closed form and stays below 1"),
        Claim(group=GROUP_NON_HONEST_POISSON, kind=kind, check=CHECK_JUMP_IDENTITY,
              statement="dm = phi dS at every jump"),
        Claim(group=GROUP_NON_HONEST_POISSON, kind=kind, check=CHECK_ARBITRAGE_BEFORE,
              statement="phi . S on ]0, tau] gains m_tau - 1"),
        Claim(group=GROUP_NON_HONEST_POISSON, kind=kind, check=CHECK_ARBITRAGE_AFTER,
              statement="a position opened at tau gains on every path whose window is realized"),
        Claim(group=GROUP_DEFLATOR, kind=kind, check=CHECK_DEFLATOR_BEFORE,
              statement="L S^tau has constant expectation with L > 0"),
    ]


def __build_claims() -> List[Claim]:
    claims: List[Claim] = []

    # honest Brownian times
    claims += __honest_claims(GROUP_HONEST_BROWNIAN, KIND_BROWNIAN_LEVEL)
    claims += __honest_claims(GROUP_HONEST_BROWNIAN, KIND_BROWNIAN_MATURITY)
    claims.append(Claim(group=GROUP_HONEST_BROWNIAN, kind=KIND_BROWNIAN_MATURITY, check=CHECK_JUMP_IDENTITY,
                        statement="beta is the derivative of Z in W"))
    claims += __honest_claims(GROUP_HONEST_BROWNIAN, KIND_BROWNIAN_SUP_OVERALL)
    claims.append(Claim(group=GROUP_HONEST_BROWNIAN, kind=KIND_BROWNIAN_SUP_OVERALL, check=CHECK_ARBITRAGE_BEFORE,
                        recipe=RECIPE_BUY_AND_HOLD, statement="one share held to tau gains S_tau - S_0 > 0"))
    claims.append(Claim(group=GROUP_HONEST_BROWNIAN, kind=KIND_BROWNIAN_SUP_OVERALL, check=CHECK_ARBITRAGE_AFTER,
                        recipe=RECIPE_SHORT_AFTER, statement="one share sold short at tau gains S_tau - S_t > 0"))

    # honest Poisson times
    for kind in [KIND_POISSON_LEVEL, KIND_POISSON_SUP_UNIT, KIND_POISSON_SUP_OVERALL]:
        claims += __honest_claims(GROUP_HONEST_POISSON, kind)
        claims.append(Claim(group=GROUP_HONEST_POISSON, kind=kind, check=CHECK_JUMP_IDENTITY,
                            statement="dm = phi dS at every jump"))
        claims.append(Claim(group=GROUP_DEFLATOR, kind=kind, check=CHECK_DEFLATOR_AFTER, positive_psi_only=True,
                            statement="L (S - S^tau) has constant expectation with L > 0 when Z_tau < 1"))
    claims.append(Claim(group=GROUP_HONEST_POISSON, kind=KIND_POISSON_SUP_OVERALL, check=CHECK_ARBITRAGE_BEFORE,
                        recipe=RECIPE_BUY_AND_HOLD, positive_psi_only=True,
                        statement="one share held to tau gains S_tau - S_0 >= 0"))

    # non-honest Poisson times
    for kind in [KIND_CONVEX_COMBO, KIND_MIN_SCALED, KIND_MAX_SCALED]:
        claims += __non_honest_claims(kind)

    # pseudo-stopping time
    claims += [
        Claim(group=GROUP_PSEUDO_STOPPING, kind=KIND_EMERY, check=CHECK_HONEST,
              statement="P(tau > t | F_t) does not depend on the path at fixed times"),
        Claim(group=GROUP_PSEUDO_STOPPING, kind=KIND_EMERY, check=CHECK_ARBITRAGE_BEFORE,
              statement="one share held to tau has zero mean gain"),
        Claim(group=GROUP_PSEUDO_STOPPING, kind=KIND_EMERY, check=CHECK_ARBITRAGE_AFTER,
              statement="S_t > S_tau for t > tau"),
        Claim(group=GROUP_DEFLATOR, kind=KIND_EMERY, check=CHECK_DEFLATOR_BEFORE,
              statement="L = 1 and S^tau has constant expectation"),
    ]
    return claims


# every reproduced claim
CLAIMS: List[Claim] = __build_claims()


def claims_for(kind: str, checks: Optional[List[str]] = None) -> List[Claim]:
    """
    Claims made about one random time kind

    Args:
        kind: one of the KIND_* constants
        checks: only keep claims with these check names, defaults to all

    Returns:
        the claims, in registry order

    Raises:
        pyenlarge.exceptions.EnlargeContractException: unknown kind
    """
    kind_parameters(kind)
    return [c for c in CLAIMS if c.kind == kind and (not checks or c.check in checks)]
