"""
The deflators module builds the positive local martingale deflators of
the price before and after a random time, the G-compensated versions of
F-martingales, and the constant expectation test used to check them over
ensembles of paths.

Note that all functions and classes from submodules are all imported
at this level of the deflators module. They can be referenced from
here instead of digging in deeper to the submodules.
"""

# F-martingales with a closed form bracket against m
X_PRICE: str = "S"
"""
The price process
"""

X_MARTINGALE: str = "m"
"""
The martingale m = Z + A°
"""

X_DRIVER: str = "M"
"""
The compensated Poisson process N - lam t (the Brownian motion W on Brownian paths)
"""

# martingale test
DEFAULT_TOLERANCE_SIGMAS: float = 3.0
"""
Largest accepted mean difference between two times, in standard errors
"""

DEFAULT_TEST_TIMES: int = 5
"""
Number of evaluation times of the martingale test
"""

MIN_TEST_PATHS: int = 1000
"""
Ensemble size below which the martingale test warns
"""

# Z_tau < 1 gate of the deflator after tau
GATE_TOLERANCE: float = 1e-8
"""
Z_tau must be below 1 - GATE_TOLERANCE for the deflator after tau
"""

ROUNDOFF_ULPS: float = 1024.0
"""
Floor of the standard error of the martingale test, in units of machine
epsilon times the largest absolute mean. Processes that are constant up to
floating point rounding have no meaningful standard error below it.
"""

# header of the deflator CSV export
DEFLATOR_CSV_HEADER = ["path_id", "time", "L", "deflated"]

# function and class imports
from .deflators import (evaluation_times,
                        g_hat,
                        deflator_before,
                        deflator_after,
                        martingale_test,
                        verify_deflator,
                        write_deflator_csv)
from .classes.deflator_run import DeflatorRun
from .classes.g_hat_martingale import GHatMartingale

# pdoc imports and exports
from .deflators import __pdoc__ as __deflators_pdoc__
from .classes.deflator_run import __pdoc__ as __classes_deflator_run_pdoc__
from .classes.g_hat_martingale import __pdoc__ as __classes_g_hat_martingale_pdoc__
__pdoc__ = __deflators_pdoc__
__pdoc__ = dict(__pdoc__, **__classes_deflator_run_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_g_hat_martingale_pdoc__)
__all__ = [
    "evaluation_times",
    "g_hat",
    "deflator_before",
    "deflator_after",
    "martingale_test",
    "verify_deflator",
    "write_deflator_csv",
    "DeflatorRun",
    "GHatMartingale",
]
