"""
Class definition for the configuration of a batch experiment
"""

from pydantic import BaseModel, validator, root_validator
from typing import Any, Dict, List, Optional
from .. import CONFIG_VERSION, DEFAULT_N_PATHS, DEFAULT_DT, DEFAULT_OUTPUT_DIR, CHECKS
from ...market import MODEL_BROWNIAN, DEFAULT_S0, DEFAULT_EPS, LOCAL_TIME_DOWNCROSSING, LOCAL_TIME_OCCUPATION
from ...market.classes.market_model import MarketModel
from ...market.horizon import effective_horizon
from ...random_times.classes.random_time_spec import RandomTimeSpec
from ...special_functions import DEFAULT_SAMPLE_SIZE
from ...strategies import VARIANT_DERIVED, VARIANT_PRINTED, DEFAULT_BROWNIAN_TOL_C
from ...deflators import DEFAULT_TOLERANCE_SIGMAS
from ...exceptions import EnlargeException
from ..._internal.util import dumps_sorted, short_hash

# pdoc init
__pdoc__: Dict = {}

# fields left out of the configuration hash
UNHASHED_FIELDS = ["threads", "output_dir", "table_cache"]


class ExperimentConfig(BaseModel):
    """
    Everything needed to rerun an experiment

    Attributes:
        config_version: version of the configuration format
        name: experiment name
        model_kind: "brownian_gbm" or "geom_poisson"
        sigma: volatility (Brownian model)
        lam: jump intensity (Poisson model)
        psi: relative jump size (Poisson model)
        s0: initial price
        time_kind: random time kind, one of the KIND_* constants
        a: parameter a of the random time
        b: parameter b of the random time
        k1: weight k1 of the random time
        k2: weight k2 of the random time
        n_paths: number of simulated paths
        dt: grid step of Brownian paths
        horizon: path horizon, defaults to the maturity of bounded times and
            to the effective horizon of unbounded ones
        eps: tail bound of the effective horizon
        seed: base seed of the ensemble
        checks: check names to run, empty for every claim about the kind
        variant: strategy variant, "derived" or "printed"
        tolerance: explicit tolerance of the pathwise checks
        tol_c: constant c of the Brownian tolerance c sigma sqrt(dt)
        tolerance_sigmas: tolerance of the martingale tests, in standard errors
        sample_size: sample size of the Monte-Carlo tables
        table_seed: seed of the Monte-Carlo tables
        table_cache: JSON cache file of the supremum law table
        local_time_method: local time estimator of the Brownian last passage kinds
        threads: number of worker threads
        output_dir: output directory
    """
    config_version: int = CONFIG_VERSION
    name: str = "experiment"
    model_kind: str
    sigma: Optional[float] = None
    lam: Optional[float] = None
    psi: Optional[float] = None
    s0: float = DEFAULT_S0
    time_kind: str
    a: Optional[float] = None
    b: Optional[float] = None
    k1: Optional[float] = None
    k2: Optional[float] = None
    n_paths: int = DEFAULT_N_PATHS
    dt: float = DEFAULT_DT
    horizon: Optional[float] = None
    eps: float = DEFAULT_EPS
    seed: int = 0
    checks: List[str] = []
    variant: str = VARIANT_DERIVED
    tolerance: Optional[float] = None
    tol_c: float = DEFAULT_BROWNIAN_TOL_C
    tolerance_sigmas: float = DEFAULT_TOLERANCE_SIGMAS
    sample_size: int = DEFAULT_SAMPLE_SIZE
    table_seed: int = 0
    table_cache: Optional[str] = None
    local_time_method: str = LOCAL_TIME_DOWNCROSSING
    threads: int = 1
    output_dir: str = DEFAULT_OUTPUT_DIR

    class Config:
        allow_mutation = False

    @validator("config_version")
    def __version_must_match(cls, v):  # pylint: disable=unused-private-member
        if (v != CONFIG_VERSION):
            raise ValueError("Unsupported config_version %d, expected %d" % (v, CONFIG_VERSION))
        return v

    @validator("n_paths", "sample_size", "threads")
    def __count_must_be_positive(cls, v, field):  # pylint: disable=unused-private-member
        if (v < 1):
            raise ValueError("%s must be at least 1, got %d" % (field.name, v))
        return v

    @validator("dt", "tol_c", "tolerance_sigmas")
    def __value_must_be_positive(cls, v, field):  # pylint: disable=unused-private-member
        if (not v > 0):
            raise ValueError("%s must be positive, got %s" % (field.name, v))
        return v

    @validator("horizon")
    def __horizon_must_be_positive(cls, v):  # pylint: disable=unused-private-member
        if (v is not None and not v > 0):
            raise ValueError("horizon must be positive, got %s" % (v))
        return v

    @validator("tolerance")
    def __tolerance_must_be_non_negative(cls, v):  # pylint: disable=unused-private-member
        if (v is not None and v < 0):
            raise ValueError("tolerance must be non-negative, got %s" % (v))
        return v

    @validator("eps")
    def __eps_must_be_a_probability(cls, v):  # pylint: disable=unused-private-member
        if (not 0.0 < v <= 1.0):
            raise ValueError("eps must lie in (0, 1], got %s" % (v))
        return v

    @validator("checks")
    def __checks_must_be_known(cls, v):  # pylint: disable=unused-private-member
        for check in v:
            if (check not in CHECKS):
                raise ValueError("Unknown check '%s', expected one of %s" % (check, ", ".join(CHECKS)))
        return v

    @validator("variant")
    def __variant_must_be_known(cls, v):  # pylint: disable=unused-private-member
        if (v not in [VARIANT_DERIVED, VARIANT_PRINTED]):
            raise ValueError("Unknown strategy variant '%s'" % (v))
        return v

    @validator("local_time_method")
    def __local_time_method_must_be_known(cls, v):  # pylint: disable=unused-private-member
        if (v not in [LOCAL_TIME_DOWNCROSSING, LOCAL_TIME_OCCUPATION]):
            raise ValueError("Unknown local time estimator '%s'" % (v))
        return v

    @root_validator(skip_on_failure=True)
    def __model_and_time_must_agree(cls, values):  # pylint: disable=unused-private-member
        try:
            model = MarketModel(kind=values["model_kind"],
                                sigma=values["sigma"],
                                lam=values["lam"],
                                psi=values["psi"],
                                s0=values["s0"])
            spec = RandomTimeSpec(kind=values["time_kind"],
                                  a=values["a"],
                                  b=values["b"],
                                  k1=values["k1"],
                                  k2=values["k2"])
            spec.check_model(model)
        except (ValueError, EnlargeException) as e:
            raise ValueError(str(e).replace("\n", " "))
        return values

    def market_model(self) -> MarketModel:
        """
        The MarketModel of the experiment
        """
        return MarketModel(kind=self.model_kind, sigma=self.sigma, lam=self.lam, psi=self.psi, s0=self.s0)

    def random_time(self) -> RandomTimeSpec:
        """
        The RandomTimeSpec of the experiment
        """
        return RandomTimeSpec(kind=self.time_kind, a=self.a, b=self.b, k1=self.k1, k2=self.k2)

    def resolved_horizon(self) -> float:
        """
        Horizon of the simulated paths: the configured one, else the
        maturity of a bounded time, else the effective horizon for eps

        Returns:
            the horizon
        """
        if (self.horizon is not None):
            return self.horizon
        spec = self.random_time()
        if (spec.infinite_horizon is False):
            return spec.maturity
        return effective_horizon(self.market_model(), spec, eps=self.eps)

    def grid_step(self) -> Optional[float]:
        """
        Grid step passed to the simulation, None for Poisson models
        """
        return self.dt if self.model_kind == MODEL_BROWNIAN else None

    def bundle_options(self) -> Dict[str, Any]:
        """
        Keyword arguments of `pyenlarge.azema.azema_bundle`
        """
        return {
            "sample_size": self.sample_size,
            "seed": self.table_seed,
            "local_time_method": self.local_time_method,
        }

    def with_overrides(self, **overrides) -> "ExperimentConfig":
        """
        Validated copy with some fields replaced, None values are ignored

        Args:
            **overrides: field values

        Returns:
            the new ExperimentConfig
        """
        values = self.dict()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return ExperimentConfig(**values)

    def config_hash(self) -> str:
        """
        Hash of the fields that determine the reports (worker count and
        file locations are left out)

        Returns:
            hexadecimal hash string
        """
        return short_hash(dumps_sorted(self.dict(exclude=set(UNHASHED_FIELDS))))

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of ExperimentConfig object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of ExperimentConfig object
        """
        return "%s(name='%s', model_kind='%s', time_kind='%s', n_paths=%d, seed=%d)" % (
            self.__class__.__name__,
            self.name,
            self.model_kind,
            self.time_kind,
            self.n_paths,
            self.seed,
        )
