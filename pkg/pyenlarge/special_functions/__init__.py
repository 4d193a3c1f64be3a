"""
The special_functions module evaluates the analytic functions the closed
forms of the library rest on: the normal distribution, the two-sided
barrier function H and its y-derivative, the Brownian supremum law, the
ruin probability of Y = x + mu t - N, and the Poisson supremum laws.

Note that all functions and classes from submodules are all imported
at this level of the special_functions module. They can be referenced from
here instead of digging in deeper to the submodules.
"""

# finite horizon supremum law
SUP_KIND_FINITE_HORIZON: str = "finite_horizon"
"""
Psi(x, t) = P(sup_{s <= t} S_s > x) for a Poisson price started at 1
"""

# strict pre-horizon supremum law
SUP_KIND_STRICT_PRE_HORIZON: str = "strict_pre_horizon"
"""
Phi~(x, t) = P(sup_{s < t} S_s < x) for a Poisson price started at 1
"""

# probability of never exceeding the start before t
SUP_KIND_AT_MOST_ONE: str = "at_most_one"
"""
Phi^(t) = P(sup_{s < t} S_s <= 1) for a Poisson price started at 1
"""

# infinite horizon supremum law
SUP_KIND_INFINITE_HORIZON: str = "infinite_horizon"
"""
Psi(x) = P(sup_s S_s > x) for a Poisson price started at 1
"""

# strict infinite horizon supremum law
SUP_KIND_INFINITE_STRICT: str = "infinite_strict"
"""
Phi~(x) = P(sup_s S_s < x) for a Poisson price started at 1
"""

# probability of never exceeding the start
SUP_KIND_INFINITE_AT_MOST_ONE: str = "infinite_at_most_one"
"""
Phi^ = P(sup_s S_s <= 1) for a Poisson price started at 1
"""

# default Monte-Carlo sample size for estimated tables
DEFAULT_SAMPLE_SIZE: int = 20000
"""
Number of simulated paths behind a supremum law or Emery table
"""

# ruin series truncation
RUIN_SERIES_TOLERANCE: float = 1e-10
"""
Bound on the neglected tail rho^(N+1)/(1-rho) of the ruin series
"""

# range of the tabulated ruin probability
RUIN_TABLE_RANGE: int = 64
"""
Ruin probabilities are tabulated on [0, RUIN_TABLE_RANGE] and follow the
Cramer-Lundberg exponential tail beyond
"""

# table nodes per unit of capital
RUIN_NODES_PER_UNIT: int = 256
"""
Number of Hermite interpolation pieces per unit interval of capital
"""

# maximum number of ruin series terms
RUIN_MAX_TERMS: int = 2000
"""
The ruin series is refused when it needs more terms (very small loading)
"""

# default step of the Emery table paths
DEFAULT_EMERY_DT: float = 2.0**-8
"""
Grid step of the Brownian paths simulated for the Emery function
"""

# version of the cached table files
TABLE_CACHE_VERSION: int = 1
"""
Version written in cached table files, older files are rebuilt
"""

# function and class imports
from .ruin import (ruin_table,
                   ruin_prob,
                   ruin_prob_closed_form,
                   lundberg_exponent,
                   exit_level_offset,
                   overall_sup_survival,
                   overall_sup_at_most_one,
                   overall_sup_strict,
                   overall_sup_tail)
from .special_functions import (normal_cdf,
                                normal_pdf,
                                barrier_h,
                                barrier_h_dy,
                                brownian_sup_cdf,
                                sup_law_estimator,
                                sup_law,
                                emery_table,
                                emery_phi)
from .classes.ruin_prob_table import RuinProbTable
from .classes.sup_law_estimator import SupLawEstimator
from .classes.emery_phi_table import EmeryPhiTable

# pdoc imports and exports
from .ruin import __pdoc__ as __ruin_pdoc__
from .special_functions import __pdoc__ as __special_functions_pdoc__
from .classes.ruin_prob_table import __pdoc__ as __classes_ruin_prob_table_pdoc__
from .classes.sup_law_estimator import __pdoc__ as __classes_sup_law_estimator_pdoc__
from .classes.emery_phi_table import __pdoc__ as __classes_emery_phi_table_pdoc__
__pdoc__ = __ruin_pdoc__
__pdoc__ = dict(__pdoc__, **__special_functions_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_ruin_prob_table_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_sup_law_estimator_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_emery_phi_table_pdoc__)
__all__ = [
    "normal_cdf",
    "normal_pdf",
    "barrier_h",
    "barrier_h_dy",
    "brownian_sup_cdf",
    "ruin_table",
    "ruin_prob",
    "ruin_prob_closed_form",
    "lundberg_exponent",
    "exit_level_offset",
    "overall_sup_survival",
    "overall_sup_at_most_one",
    "overall_sup_strict",
    "overall_sup_tail",
    "sup_law_estimator",
    "sup_law",
    "emery_table",
    "emery_phi",
    "RuinProbTable",
    "SupLawEstimator",
    "EmeryPhiTable",
]
