"""
The market module defines the two market models (a driftless geometric
Brownian motion and a geometric compensated Poisson process), simulates
their sample paths and estimates local times and effective horizons.

Note that all functions and classes from submodules are all imported
at this level of the market module. They can be referenced from
here instead of digging in deeper to the submodules.
"""

# geometric Brownian motion kind
MODEL_BROWNIAN: str = "brownian_gbm"
"""
Model kind of the driftless geometric Brownian motion dS = S sigma dW
"""

# geometric compensated Poisson kind
MODEL_POISSON: str = "geom_poisson"
"""
Model kind of the geometric compensated Poisson process dS = S_- psi dM
"""

# default initial price
DEFAULT_S0: float = 1.0
"""
Initial price used when a configuration does not set one
"""

# default tail probability of the effective horizon
DEFAULT_EPS: float = 1e-4
"""
Default bound on P(tau > T) used to truncate infinite horizon constructions
"""

# local time estimators
LOCAL_TIME_DOWNCROSSING: str = "downcrossing"
"""
Downcrossing count estimator of the local time (primary)
"""

LOCAL_TIME_OCCUPATION: str = "occupation"
"""
Occupation density estimator of the local time (cross-check)
"""

# function and class imports
from .market import (bridge_extremes,
                     brownian_path_from_increments,
                     simulate_brownian,
                     poisson_path_from_jump_times,
                     simulate_poisson,
                     simulate,
                     simulate_ensemble,
                     write_paths_csv)
from .local_time import (default_band,
                         local_time_increments,
                         estimate_local_time)
from .classes.market_model import MarketModel
from .classes.sample_path import SamplePath
from .horizon import (brownian_level_tail,
                      poisson_level_tail,
                      two_jump_tail,
                      effective_horizon)

# pdoc imports and exports
from .market import __pdoc__ as __market_pdoc__
from .local_time import __pdoc__ as __local_time_pdoc__
from .horizon import __pdoc__ as __horizon_pdoc__
from .classes.market_model import __pdoc__ as __classes_market_model_pdoc__
from .classes.sample_path import __pdoc__ as __classes_sample_path_pdoc__
__pdoc__ = __market_pdoc__
__pdoc__ = dict(__pdoc__, **__local_time_pdoc__)
__pdoc__ = dict(__pdoc__, **__horizon_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_market_model_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_sample_path_pdoc__)
__all__ = [
    "bridge_extremes",
    "brownian_path_from_increments",
    "simulate_brownian",
    "poisson_path_from_jump_times",
    "simulate_poisson",
    "simulate",
    "simulate_ensemble",
    "write_paths_csv",
    "default_band",
    "local_time_increments",
    "estimate_local_time",
    "brownian_level_tail",
    "poisson_level_tail",
    "two_jump_tail",
    "effective_horizon",
    "MarketModel",
    "SamplePath",
]
