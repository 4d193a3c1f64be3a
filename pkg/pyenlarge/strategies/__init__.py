"""
The strategies module evaluates the arbitrage strategies built from the
martingale m = 1 + phi . S, integrates them pathwise into wealth processes
and verifies the arbitrage, honesty and jump identity claims over
ensembles of paths.

Note that all functions and classes from submodules are all imported
at this level of the strategies module. They can be referenced from
here instead of digging in deeper to the submodules.
"""

# strategy variants
VARIANT_DERIVED: str = "derived"
"""
Strategy read from the jump of m (Poisson) or from Ito's formula (Brownian)
"""

VARIANT_PRINTED: str = "printed"
"""
Strategy evaluated from its displayed closed formula
"""

# active intervals
WHEN_BEFORE: str = "before"
"""
Strategy held on ]0, tau]
"""

WHEN_AFTER: str = "after"
"""
Strategy held after tau
"""

# recipes
RECIPE_THEOREM: str = "theorem"
"""
phi from m = 1 + phi . S, held on ]0, tau] or sold short on ]tau, nu]
"""

RECIPE_BUY_AND_HOLD: str = "buy_and_hold"
"""
One share bought at 0 and held to tau
"""

RECIPE_SHORT_AFTER: str = "short_after"
"""
One share sold short at tau and held to the end of the path
"""

RECIPE_WINDOW: str = "window"
"""
One share traded at tau over a window known at tau in which the price moves deterministically
"""

RECIPE_EMERY_ENTRY: str = "emery_entry"
"""
One share bought at tau at the price S_1/2 and held to maturity
"""

# tolerances
DEFAULT_TOLERANCE: float = 1e-8
"""
Tolerance of the pathwise checks of exact closed forms
"""

DEFAULT_BROWNIAN_TOL_C: float = 4.0
"""
Constant c of the Brownian tolerance c sigma sqrt(dt)
"""

ESTIMATED_TOL_SIGMAS: float = 3.0
"""
Tolerance of estimated closed forms, in propagated standard errors
"""

QUAD_TOLERANCE: float = 1e-10
"""
Absolute tolerance of the quadrature of the drift of S between jumps
"""

JUMP_IDENTITY_ULPS: int = 8
"""
Largest accepted gap between dm and phi dS at a jump, in units in the last place
"""

BROWNIAN_VIOLATION_LIMIT: float = 0.01
"""
Largest accepted fraction of Brownian paths violating a pathwise claim
"""

BETA_FD_TOLERANCE: float = 1e-5
"""
Relative tolerance of the finite difference identification of beta
"""

# function and class imports
from .strategies import (phi_of,
                         segment_points,
                         segment_quad,
                         constant_phi,
                         tolerance_for,
                         integrate_wealth,
                         run_strategy)
from .verify import (verify_before_tau,
                     verify_after_tau,
                     verify_jump_identity,
                     verify_honest,
                     conditional_frequencies,
                     residual_slope)
from .classes.phi_evaluator import PhiEvaluator
from .classes.beta_process import BetaProcess
from .classes.strategy_run import StrategyRun

# pdoc imports and exports
from .strategies import __pdoc__ as __strategies_pdoc__
from .verify import __pdoc__ as __verify_pdoc__
from .classes.phi_evaluator import __pdoc__ as __classes_phi_evaluator_pdoc__
from .classes.beta_process import __pdoc__ as __classes_beta_process_pdoc__
from .classes.strategy_run import __pdoc__ as __classes_strategy_run_pdoc__
__pdoc__ = __strategies_pdoc__
__pdoc__ = dict(__pdoc__, **__verify_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_phi_evaluator_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_beta_process_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_strategy_run_pdoc__)
__all__ = [
    "phi_of",
    "constant_phi",
    "tolerance_for",
    "integrate_wealth",
    "run_strategy",
    "segment_points",
    "segment_quad",
    "verify_before_tau",
    "verify_after_tau",
    "verify_jump_identity",
    "verify_honest",
    "conditional_frequencies",
    "residual_slope",
    "PhiEvaluator",
    "BetaProcess",
    "StrategyRun",
]
