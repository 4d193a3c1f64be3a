"""
Class definition for the Monte-Carlo supremum law estimator
"""

import os
import copy
import json
import math
import datetime
import warnings
import numpy as np
from scipy import interpolate, stats
from typing import Dict, Optional, Tuple
from .. import (SUP_KIND_FINITE_HORIZON,
                SUP_KIND_STRICT_PRE_HORIZON,
                SUP_KIND_AT_MOST_ONE,
                SUP_KIND_INFINITE_HORIZON,
                SUP_KIND_INFINITE_STRICT,
                SUP_KIND_INFINITE_AT_MOST_ONE,
                DEFAULT_SAMPLE_SIZE,
                TABLE_CACHE_VERSION)
from ..ruin import overall_sup_tail, ruin_table
from ...market.classes.market_model import MarketModel
from ...market.market import simulate_poisson
from ..._internal.util import dumps_sorted
from ...exceptions import EnlargeContractException

# pdoc init
__pdoc__: Dict = {}

# kind families sharing one simulated table
FAMILY_FINITE = "finite"
FAMILY_INFINITE = "infinite"
__FINITE_KINDS = [SUP_KIND_FINITE_HORIZON, SUP_KIND_STRICT_PRE_HORIZON, SUP_KIND_AT_MOST_ONE]
__INFINITE_KINDS = [SUP_KIND_INFINITE_HORIZON, SUP_KIND_INFINITE_STRICT, SUP_KIND_INFINITE_AT_MOST_ONE]


def kind_family(kind: str) -> str:
    if (kind in __FINITE_KINDS):
        return FAMILY_FINITE
    if (kind in __INFINITE_KINDS):
        return FAMILY_INFINITE
    raise EnlargeContractException("Unknown supremum law kind '%s'" % (kind))


class SupLawEstimator:
    """
    Monte-Carlo table of the supremum laws of a Poisson price started at 1

    One ensemble of exact Poisson paths gives the empirical survival
    function P(S*_t > x) on a grid of (ln x, t) for the finite horizon
    family, or of ln x alone for the infinite horizon family (paths are
    then simulated up to a horizon after which a new supremum has
    probability below `eps`). Values between nodes are bilinear
    interpolations, each node carries the binomial standard error.

    The weak and strict variants differ only on events of positive
    probability at known values, which are resolved exactly instead of
    interpolated: the atom at the start value 1, and for psi < 0 the
    no-jump path whose supremum is exp(-lam psi t).

    Attributes:
        model: the Poisson MarketModel (its s0 is ignored)
        kind: one of the SUP_KIND_* constants
        family: "finite" or "infinite"
        sample_size: number of simulated paths
        seed: base seed
        horizon: last time of the simulated paths
        log_x_grid: grid of ln x
        t_grid: grid of t (a single point for the infinite family)
        values: empirical P(S*_t > x) on the grid
        std_errors: binomial standard errors on the grid
    """

    def __init__(self,
                 model: MarketModel,
                 kind: str,
                 sample_size: Optional[int] = DEFAULT_SAMPLE_SIZE,
                 seed: Optional[int] = 0,
                 horizon: Optional[float] = 1.0,
                 n_x: Optional[int] = 161,
                 n_t: Optional[int] = 41,
                 eps: Optional[float] = 1e-4):
        # check inputs
        if (model.is_poisson is False):
            raise EnlargeContractException("Supremum law tables require a Poisson model")
        if (sample_size is None or sample_size < 1):
            raise EnlargeContractException("sample_size must be at least 1")

        # set values
        self.model = MarketModel(kind=model.kind, lam=model.lam, psi=model.psi, s0=1.0)
        self.kind = kind
        self.family = kind_family(kind)
        self.sample_size = int(sample_size)
        self.seed = int(seed)
        self.eps = eps
        if (self.family == FAMILY_FINITE):
            self.horizon = float(horizon)
            self.t_grid = np.linspace(0.0, self.horizon, n_t)
        else:
            self.horizon = self.__truncation_horizon()
            self.t_grid = np.array([self.horizon])
        self.log_x_grid = np.linspace(0.0, self.__log_x_max(), n_x)
        self.values: Optional[np.ndarray] = None
        self.std_errors: Optional[np.ndarray] = None
        self.__interpolators: Optional[tuple] = None

    def __truncation_horizon(self) -> float:
        horizon = 1.0
        while (overall_sup_tail(self.model, horizon) >= self.eps):
            horizon *= 2.0
        return horizon

    def __log_x_max(self) -> float:
        m = self.model
        if (m.psi < 0):
            if (self.family == FAMILY_FINITE):
                return -m.lam * m.psi * self.horizon
            return math.log(1e6)
        if (self.family == FAMILY_FINITE):
            return m.alpha * max(2.0, float(stats.poisson.ppf(1.0 - 1e-6, m.lam * self.horizon)))
        x = 1.0
        table = ruin_table(m.theta)
        while (table(x) > 1e-6):
            x *= 2.0
        return m.alpha * x

    @property
    def built(self) -> bool:
        return self.values is not None

    def __sup_at_times(self, path, times: np.ndarray) -> np.ndarray:
        # S*_t = max(running sup at the last event <= t, S_t)
        m = self.model
        k = np.searchsorted(path.grid, times, side="right") - 1
        n = np.searchsorted(path.jump_times, times, side="right")
        s_t = np.exp(-m.lam * m.psi * times + m.alpha * n)
        return np.maximum(path.s_star[k], s_t)

    def build(self, verbose: Optional[bool] = False) -> None:
        """
        Simulate the ensemble and fill the table

        Args:
            verbose: output progress messages, defaults to False
        """
        # init
        if (verbose is True):
            print("[%s] Building %s supremum law table from %d paths ..." % (datetime.datetime.now(),
                                                                            self.family,
                                                                            self.sample_size))
        if (self.sample_size < 1000):
            warnings.warn("Supremum law table built from only %d paths, standard errors will be large" % (
                self.sample_size), stacklevel=2)

        # simulate suprema at the table times
        sups = np.empty((self.sample_size, len(self.t_grid)))
        for i in range(0, self.sample_size):
            path = simulate_poisson(self.model, self.horizon, self.seed, index=i)
            sups[i] = self.__sup_at_times(path, self.t_grid)

        # empirical survival counts per time column
        x_grid = np.exp(self.log_x_grid)
        values = np.empty((len(x_grid), len(self.t_grid)))
        for j in range(0, len(self.t_grid)):
            column = np.sort(sups[:, j])
            values[:, j] = (self.sample_size - np.searchsorted(column, x_grid, side="right")) / self.sample_size
        self.values = values
        self.std_errors = np.sqrt(values * (1.0 - values) / self.sample_size)
        self.__interpolators = None
        if (verbose is True):
            print("[%s] Supremum law table done" % (datetime.datetime.now()))

    def __interpolate(self, log_x: float, t: float) -> Tuple[float, float]:
        if (self.built is False):
            self.build()
        if (self.family == FAMILY_INFINITE):
            return (float(np.interp(log_x, self.log_x_grid, self.values[:, 0])),
                    float(np.interp(log_x, self.log_x_grid, self.std_errors[:, 0])))
        if (self.__interpolators is None):
            grid = (self.log_x_grid, self.t_grid)
            self.__interpolators = (interpolate.RegularGridInterpolator(grid, self.values),
                                    interpolate.RegularGridInterpolator(grid, self.std_errors))
        point = np.array([[log_x, t]])
        return (float(self.__interpolators[0](point)[0]), float(self.__interpolators[1](point)[0]))

    def __survival(self, x: float, t: Optional[float]) -> Tuple[float, float]:
        # P(S*_t > x) with the exact atoms resolved
        m = self.model
        if (self.family == FAMILY_FINITE):
            if (t < 0 or t > self.horizon * (1.0 + 1e-12)):
                raise EnlargeContractException("t=%s is outside the table horizon [0, %s]" % (t, self.horizon))
            t = min(t, self.horizon)
            if (t == 0):
                return (1.0 if x < 1.0 else 0.0, 0.0)
        if (x < 1.0):
            return (1.0, 0.0)
        if (m.psi < 0 and self.family == FAMILY_FINITE):
            if (x == 1.0):
                return (1.0, 0.0)
            if (x >= math.exp(-m.lam * m.psi * t)):
                return (0.0, 0.0)
        log_x = math.log(x)
        if (log_x > self.log_x_grid[-1]):
            return (0.0, 0.0)
        return self.__interpolate(log_x, self.t_grid[0] if t is None else t)

    def evaluate(self, x: Optional[float] = None, t: Optional[float] = None) -> Tuple[float, float]:
        """
        Evaluate the law of this estimator's kind

        Args:
            x: level (not used by the at most one kinds)
            t: time (finite horizon kinds only)

        Returns:
            tuple of (probability, standard error)
        """
        m = self.model
        if (self.kind == SUP_KIND_FINITE_HORIZON):
            return self.__survival(x, t)
        if (self.kind == SUP_KIND_STRICT_PRE_HORIZON):
            if (t <= 0):
                return (1.0, 0.0)
            if (x <= 1.0):
                return (0.0, 0.0)
            if (m.psi < 0):
                no_jump_sup = math.exp(-m.lam * m.psi * t)
                if (x > no_jump_sup):
                    return (1.0, 0.0)
                if (x == no_jump_sup):
                    return (-math.expm1(-m.lam * t), 0.0)
            p, se = self.__survival(x, t)
            return (1.0 - p, se)
        if (self.kind == SUP_KIND_AT_MOST_ONE):
            if (t <= 0):
                return (1.0, 0.0)
            if (m.psi < 0):
                return (0.0, 0.0)
            p, se = self.__survival(1.0, t)
            return (1.0 - p, se)
        if (self.kind == SUP_KIND_INFINITE_HORIZON):
            return self.__survival(x, None)
        if (self.kind == SUP_KIND_INFINITE_STRICT):
            if (x <= 1.0):
                return (0.0, 0.0)
            p, se = self.__survival(x, None)
            return (1.0 - p, se)
        if (m.psi < 0):
            return (0.0, 0.0)
        p, se = self.__survival(1.0, None)
        return (1.0 - p, se)

    def with_kind(self, kind: str) -> "SupLawEstimator":
        """
        The same table read through another kind of the same family

        Args:
            kind: one of the SUP_KIND_* constants

        Returns:
            a shallow copy sharing the table
        """
        if (kind_family(kind) != self.family):
            raise EnlargeContractException("Kind '%s' does not belong to the %s family" % (kind, self.family))
        other = copy.copy(self)
        other.kind = kind
        return other

    def cache_key(self) -> Dict:
        """
        Key identifying the simulated table

        Returns:
            dictionary of the values the table depends on
        """
        return {
            "version": TABLE_CACHE_VERSION,
            "model_hash": self.model.model_hash(),
            "family": self.family,
            "sample_size": self.sample_size,
            "seed": self.seed,
            "horizon": self.horizon,
            "n_x": len(self.log_x_grid),
            "n_t": len(self.t_grid),
        }

    def to_json_serializable(self) -> Dict:
        """
        Convert object to a JSON-serializable dictionary

        Returns:
            a dictionary object that is JSON-serializable
        """
        if (self.built is False):
            self.build()
        return {
            "key": self.cache_key(),
            "model": self.model.dict(),
            "kind": self.kind,
            "eps": self.eps,
            "log_x_grid": self.log_x_grid,
            "t_grid": self.t_grid,
            "values": self.values,
            "std_errors": self.std_errors,
        }

    def save(self, filename: str) -> None:
        """
        Write the table to a JSON cache file

        Args:
            filename: output filename
        """
        with open(filename, "w") as fp:
            fp.write(dumps_sorted(self.to_json_serializable()))

    @classmethod
    def load(cls, filename: str) -> Optional["SupLawEstimator"]:
        """
        Read a table from a JSON cache file

        Args:
            filename: cache filename

        Returns:
            the SupLawEstimator, or None when the file is missing or was
            written by another cache version
        """
        if (os.path.exists(filename) is False):
            return None
        with open(filename, "r") as fp:
            data = json.load(fp)
        if (data["key"]["version"] != TABLE_CACHE_VERSION):
            return None
        obj = cls(MarketModel(**data["model"]),
                  data["kind"],
                  sample_size=data["key"]["sample_size"],
                  seed=data["key"]["seed"],
                  horizon=data["key"]["horizon"],
                  n_x=data["key"]["n_x"],
                  n_t=data["key"]["n_t"],
                  eps=data["eps"])
        obj.log_x_grid = np.asarray(data["log_x_grid"], dtype=float)
        obj.t_grid = np.asarray(data["t_grid"], dtype=float)
        obj.values = np.asarray(data["values"], dtype=float)
        obj.std_errors = np.asarray(data["std_errors"], dtype=float)
        return obj

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of SupLawEstimator object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of SupLawEstimator object
        """
        return "%s(model=%s, kind='%s', sample_size=%d, seed=%d, horizon=%s, built=%s)" % (
            self.__class__.__name__,
            repr(self.model),
            self.kind,
            self.sample_size,
            self.seed,
            repr(self.horizon),
            self.built,
        )
