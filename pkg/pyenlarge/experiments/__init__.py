"""
The experiments module runs batch experiments: it reads and writes the
flat experiment configuration files, maps every reproduced claim to the
verification that checks it, runs those verifications over a simulated
ensemble and collects the reports into verdict tables.

Note that all functions and classes from submodules are all imported
at this level of the experiments module. They can be referenced from
here instead of digging in deeper to the submodules.
"""

# configuration file format version
CONFIG_VERSION: int = 1
"""
Version of the flat experiment configuration format
"""

# default ensemble
DEFAULT_N_PATHS: int = 100000
"""
Default number of simulated paths of an experiment
"""

DEFAULT_DT: float = 2.0**-10
"""
Default grid step of Brownian paths
"""

DEFAULT_OUTPUT_DIR: str = "results"
"""
Default output directory of the command line
"""

# claim groups, in table order
GROUP_HONEST_BROWNIAN: str = "honest-brownian"
"""
Honest times of the Brownian market
"""

GROUP_HONEST_POISSON: str = "honest-poisson"
"""
Honest times of the Poisson market
"""

GROUP_NON_HONEST_POISSON: str = "non-honest-poisson"
"""
Non-honest times built on the first two jump times
"""

GROUP_PSEUDO_STOPPING: str = "pseudo-stopping"
"""
The Emery pseudo-stopping time
"""

GROUP_DEFLATOR: str = "deflator"
"""
Deflators before and after tau
"""

GROUP_CONVERGENCE: str = "convergence"
"""
Grid convergence of the Brownian identities
"""

GROUP_ORDER = [GROUP_HONEST_BROWNIAN,
               GROUP_HONEST_POISSON,
               GROUP_NON_HONEST_POISSON,
               GROUP_PSEUDO_STOPPING,
               GROUP_DEFLATOR,
               GROUP_CONVERGENCE]

# check names
CHECK_HONEST: str = "honest"
"""
Honesty certificate Z~_tau = 1, or its failure for non-honest times
"""

CHECK_JUMP_IDENTITY: str = "jump_identity"
"""
dm = phi dS at every jump (beta finite difference on Brownian paths)
"""

CHECK_ARBITRAGE_BEFORE: str = "arbitrage_before"
"""
Arbitrage held on ]0, tau]
"""

CHECK_ARBITRAGE_AFTER: str = "arbitrage_after"
"""
Arbitrage held after tau
"""

CHECK_DEFLATOR_BEFORE: str = "deflator_before"
"""
Deflator of S^tau
"""

CHECK_DEFLATOR_AFTER: str = "deflator_after"
"""
Deflator of S - S^tau
"""

CHECKS = [CHECK_HONEST,
          CHECK_JUMP_IDENTITY,
          CHECK_ARBITRAGE_BEFORE,
          CHECK_ARBITRAGE_AFTER,
          CHECK_DEFLATOR_BEFORE,
          CHECK_DEFLATOR_AFTER]

# convergence study
DEFAULT_CONVERGENCE_DTS = [2.0**-8, 2.0**-10, 2.0**-12]

CONVERGENCE_SLOPE_RANGE = (0.35, 0.65)

# output files
REPORTS_FILENAME: str = "reports.json"
VERDICTS_CSV_FILENAME: str = "verdicts.csv"
VERDICTS_JSON_FILENAME: str = "verdicts.json"

# header of the verdict table
VERDICT_TABLE_HEADER = ["group", "kind", "name", "verdict", "estimate", "std_error",
                        "ci_low", "ci_high", "n_used", "n_excluded", "claim"]

# function and class imports
from .claims import CLAIMS, claims_for
from .experiments import (parse_config,
                          load_config,
                          format_config,
                          dump_config,
                          run_claim,
                          run_experiment,
                          tabulate,
                          convergence_study,
                          write_reports,
                          read_reports)
from .classes.claim import Claim
from .classes.experiment_config import ExperimentConfig

# pdoc imports and exports
from .claims import __pdoc__ as __claims_pdoc__
from .experiments import __pdoc__ as __experiments_pdoc__
from .classes.claim import __pdoc__ as __classes_claim_pdoc__
from .classes.experiment_config import __pdoc__ as __classes_experiment_config_pdoc__
__pdoc__ = __claims_pdoc__
__pdoc__ = dict(__pdoc__, **__experiments_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_claim_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_experiment_config_pdoc__)
__all__ = [
    "CLAIMS",
    "claims_for",
    "parse_config",
    "load_config",
    "format_config",
    "dump_config",
    "run_claim",
    "run_experiment",
    "tabulate",
    "convergence_study",
    "write_reports",
    "read_reports",
    "Claim",
    "ExperimentConfig",
]
