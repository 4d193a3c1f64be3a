"""
The azema module evaluates the Azema supermartingale Z, its left-closed
variant Z~, the dual optional projection A° and the martingale m = Z + A°
along a sample path, in closed form for every supported random time.

Note that all functions and classes from submodules are all imported
at this level of the azema module. They can be referenced from
here instead of digging in deeper to the submodules.
"""

# closed form evaluated exactly
FORM_ANALYTIC: str = "analytic"
"""
Every quantity of the bundle is an exact closed form
"""

# closed form built on a Monte-Carlo table
FORM_ESTIMATED: str = "estimated"
"""
Z rests on a Monte-Carlo supremum law or Emery table and carries a standard error
"""

# closed form with a local time estimate
FORM_LOCAL_TIME: str = "local_time"
"""
Z is exact and A° is reconstructed from a local time estimate on the grid
"""

# header of the Azema series CSV export
AZEMA_CSV_HEADER = ["path_id", "time", "Z", "Z_tilde", "A_opt", "m", "Z_se"]

# function and class imports
from .azema import (azema_bundle,
                    eval_z,
                    eval_z_tilde,
                    eval_a_opt,
                    eval_m,
                    eval_nu_hat,
                    min_scaled_m_tau,
                    write_azema_csv)
from .classes.azema_bundle import AzemaBundle
from .classes.grid_azema_bundle import GridAzemaBundle
from .classes.jump_azema_bundle import JumpAzemaBundle
from .classes.brownian_level_bundle import BrownianLevelBundle
from .classes.brownian_maturity_bundle import BrownianMaturityBundle
from .classes.brownian_sup_bundle import BrownianSupBundle
from .classes.emery_bundle import EmeryBundle
from .classes.poisson_level_bundle import PoissonLevelBundle
from .classes.poisson_sup_unit_bundle import PoissonSupUnitBundle
from .classes.poisson_sup_overall_bundle import PoissonSupOverallBundle
from .classes.convex_combo_bundle import ConvexComboBundle
from .classes.min_scaled_bundle import MinScaledBundle
from .classes.max_scaled_bundle import MaxScaledBundle

# pdoc imports and exports
from .azema import __pdoc__ as __azema_pdoc__
from .classes.azema_bundle import __pdoc__ as __classes_azema_bundle_pdoc__
from .classes.grid_azema_bundle import __pdoc__ as __classes_grid_azema_bundle_pdoc__
from .classes.jump_azema_bundle import __pdoc__ as __classes_jump_azema_bundle_pdoc__
from .classes.brownian_level_bundle import __pdoc__ as __classes_brownian_level_bundle_pdoc__
from .classes.brownian_maturity_bundle import __pdoc__ as __classes_brownian_maturity_bundle_pdoc__
from .classes.brownian_sup_bundle import __pdoc__ as __classes_brownian_sup_bundle_pdoc__
from .classes.emery_bundle import __pdoc__ as __classes_emery_bundle_pdoc__
from .classes.poisson_level_bundle import __pdoc__ as __classes_poisson_level_bundle_pdoc__
from .classes.poisson_sup_unit_bundle import __pdoc__ as __classes_poisson_sup_unit_bundle_pdoc__
from .classes.poisson_sup_overall_bundle import __pdoc__ as __classes_poisson_sup_overall_bundle_pdoc__
from .classes.convex_combo_bundle import __pdoc__ as __classes_convex_combo_bundle_pdoc__
from .classes.min_scaled_bundle import __pdoc__ as __classes_min_scaled_bundle_pdoc__
from .classes.max_scaled_bundle import __pdoc__ as __classes_max_scaled_bundle_pdoc__
__pdoc__ = __azema_pdoc__
__pdoc__ = dict(__pdoc__, **__classes_azema_bundle_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_grid_azema_bundle_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_jump_azema_bundle_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_brownian_level_bundle_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_brownian_maturity_bundle_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_brownian_sup_bundle_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_emery_bundle_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_poisson_level_bundle_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_poisson_sup_unit_bundle_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_poisson_sup_overall_bundle_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_convex_combo_bundle_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_min_scaled_bundle_pdoc__)
__pdoc__ = dict(__pdoc__, **__classes_max_scaled_bundle_pdoc__)
__all__ = [
    "azema_bundle",
    "eval_z",
    "eval_z_tilde",
    "eval_a_opt",
    "eval_m",
    "eval_nu_hat",
    "min_scaled_m_tau",
    "write_azema_csv",
    "AzemaBundle",
    "GridAzemaBundle",
    "JumpAzemaBundle",
    "BrownianLevelBundle",
    "BrownianMaturityBundle",
    "BrownianSupBundle",
    "EmeryBundle",
    "PoissonLevelBundle",
    "PoissonSupUnitBundle",
    "PoissonSupOverallBundle",
    "ConvexComboBundle",
    "MinScaledBundle",
    "MaxScaledBundle",
]
