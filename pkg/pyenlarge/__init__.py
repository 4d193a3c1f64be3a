"""
The PyEnlarge package is a simulation laboratory for random times in
one asset markets. It simulates geometric Brownian and geometric
compensated Poisson prices, realizes last passage, supremum and
pseudo-stopping times along the paths, evaluates their Azema
supermartingales, and verifies over ensembles of paths the arbitrages
and deflators that appear when the information flow is enlarged with
the random time.

Installation:
```console
$ python -m pip install pyenlarge
```

Basic usage:
```python
> import pyenlarge
> model = pyenlarge.MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=0.5)
> spec = pyenlarge.RandomTimeSpec(kind=pyenlarge.KIND_POISSON_LEVEL, b=0.5)
```
"""

# versioning info
__version__ = "0.1.0"

# documentation excludes
__pdoc__ = {"cli": False}

# pull in top level constants and classes
from .report import (McReport,
                     VERDICT_PASS,
                     VERDICT_FAIL,
                     VERDICT_INFORMATIONAL)
from .market import (MODEL_BROWNIAN,
                     MODEL_POISSON,
                     DEFAULT_EPS,
                     MarketModel,
                     SamplePath)
from .random_times import (KIND_BROWNIAN_LEVEL,
                           KIND_BROWNIAN_MATURITY,
                           KIND_BROWNIAN_SUP_OVERALL,
                           KIND_POISSON_LEVEL,
                           KIND_POISSON_SUP_UNIT,
                           KIND_POISSON_SUP_OVERALL,
                           KIND_EMERY,
                           KIND_CONVEX_COMBO,
                           KIND_MIN_SCALED,
                           KIND_MAX_SCALED,
                           RandomTimeSpec)
from .special_functions import DEFAULT_SAMPLE_SIZE

# pull in exceptions at top level
from .exceptions import (EnlargeException,
                         EnlargeParameterException,
                         EnlargeContractException,
                         EnlargeDomainException,
                         EnlargeNumericalException,
                         EnlargeInvariantException,
                         EnlargeConfigException)

# pull in modules (order matters otherwise we get circular import errors)
from pyenlarge import exceptions
from pyenlarge import report
from pyenlarge import market
from pyenlarge import special_functions
from pyenlarge import random_times
from pyenlarge import azema
from pyenlarge import strategies
from pyenlarge import deflators
from pyenlarge import experiments
