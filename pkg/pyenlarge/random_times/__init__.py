"""
The random_times module describes the random times studied by the
library, realizes them on simulated paths and locates the exit time nu
after an honest time.

Note that all functions and classes from submodules are all imported
at this level of the random_times module. They can be referenced from
here instead of digging in deeper to the submodules.
"""

# Brownian last passage time at a level
KIND_BROWNIAN_LEVEL: str = "brownian_last_passage_level"
"""
tau = sup{t : S_t = a} for a geometric Brownian price and a level 0 < a < 1
"""

# Brownian last passage time before maturity
KIND_BROWNIAN_MATURITY: str = "brownian_last_passage_before_maturity"
"""
tau = sup{t <= 1 : S_t = b} for a geometric Brownian price and 0 < b < 1
"""

# Brownian time of the overall supremum
KIND_BROWNIAN_SUP_OVERALL: str = "brownian_sup_overall"
"""
tau = sup{t : S_t = S*_t}, the time a geometric Brownian price reaches its overall maximum
"""

# Poisson last passage time at a level
KIND_POISSON_LEVEL: str = "poisson_last_passage_level"
"""
tau = sup{t : S_t >= b} for a geometric Poisson price (psi > 0) and 0 < b < 1
"""

# Poisson time of the supremum on [0, 1]
KIND_POISSON_SUP_UNIT: str = "poisson_sup_on_unit"
"""
tau = sup{t <= 1 : S_t = S*_t} for a geometric Poisson price
"""

# Poisson time of the overall supremum
KIND_POISSON_SUP_OVERALL: str = "poisson_sup_overall"
"""
tau = sup{t : S_t = S*_t} for a geometric Poisson price
"""

# pseudo-stopping time built from a Brownian price
KIND_EMERY: str = "emery_pseudo"
"""
tau = sup{t <= 1 : S_1 = 2 S_t}, sup of the empty set being 0
"""

# convex combination of the first two jump times
KIND_CONVEX_COMBO: str = "convex_combo_jumps"
"""
tau = k1 T1 + k2 T2 with k1 + k2 = 1
"""

# minimum of the first jump time and a scaled second jump time
KIND_MIN_SCALED: str = "min_scaled_jumps"
"""
tau = T1 ^ a T2 with 0 < a < 1
"""

# maximum of the first jump time and a scaled second jump time
KIND_MAX_SCALED: str = "max_scaled_jumps"
"""
tau = T1 v a T2 with 0 < a < 1
"""

# function and class imports
from .random_times import (realize,
                           realize_many,
                           poisson_level_visits,
                           exit_time_nu,
                           nu_is_ambiguous,
                           poisson_level_exit_time,
                           write_realized_csv)
from .classes.random_time_spec import RandomTimeSpec, kind_parameters
from .classes.realized_time import RealizedTime

# pdoc imports and exports
from .random_times import __pdoc__ as __random_times_pdoc__
from .classes.random_time_spec import __pdoc__ as __classes_random_time_spec_pdoc__
from .classes.realized_time import __pdoc__ as __classes_realized_time_pdoc__
__pdoc__ = __random_times_pdoc__
__pdoc__ = dict(__pdoc__, **__classes_random_time_spec_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_realized_time_pdoc__)
__all__ = [
    "realize",
    "realize_many",
    "poisson_level_visits",
    "exit_time_nu",
    "nu_is_ambiguous",
    "poisson_level_exit_time",
    "write_realized_csv",
    "kind_parameters",
    "RandomTimeSpec",
    "RealizedTime",
]
