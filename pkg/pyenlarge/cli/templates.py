"""
This module contains the template of an experiment configuration file
"""

CONFIG_TEMPLATE = """# pyenlarge experiment configuration
config_version = 1
name = poisson_level

# market model: brownian_gbm (sigma) or geom_poisson (lam, psi)
model_kind = geom_poisson
lam = 1.0
psi = 0.5
s0 = 1.0

# random time and its parameters (a, b, k1, k2 as the kind requires)
time_kind = poisson_last_passage_level
b = 0.5

# ensemble; dt is only used by Brownian models, horizon = none picks the
# maturity of bounded times and the effective horizon for eps otherwise
n_paths = 100000
dt = 0.0009765625
horizon = none
eps = 0.0001
seed = 0

# checks to run, empty for every claim about the random time
checks =

# tolerance policy
variant = derived
tolerance = none
tol_c = 4.0
tolerance_sigmas = 3.0

# Monte-Carlo tables
sample_size = 20000
table_seed = 0
table_cache = none
local_time_method = downcrossing

# execution
threads = 1
output_dir = results
"""
