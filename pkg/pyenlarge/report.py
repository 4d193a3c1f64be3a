"""
The report module provides the Monte-Carlo report class used throughout
the PyEnlarge library to carry an estimate, its uncertainty and the
verdict of a numerical check.
"""

import math
import numpy as np
from pydantic import BaseModel, validator, root_validator
from scipy import stats
from typing import Any, Dict, Optional, Sequence, Tuple

# verdict values
VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"
VERDICT_INFORMATIONAL = "informational"

# exclusion reason codes
EXCLUDED_TAU_UNDETECTED = "undetected_tau"
EXCLUDED_NU_UNDETECTED = "undetected_nu"
EXCLUDED_Z_HIT_ZERO = "z_hit_zero"
EXCLUDED_Z_HIT_ONE = "z_hit_one"
EXCLUDED_AMBIGUOUS_THRESHOLD = "ambiguous_threshold"
EXCLUDED_WINDOW_NOT_REALIZED = "window_not_realized"

# two sided 95% normal quantile
Z_95 = float(stats.norm.ppf(0.975))


def proportion_interval(successes: int, trials: int) -> Tuple[float, float, float]:
    """
    Wilson score interval for a binomial proportion

    Args:
        successes: number of successes
        trials: number of trials

    Returns:
        tuple of (estimate, lower bound, upper bound) at 95% level
    """
    if (trials == 0):
        return (float("nan"), float("nan"), float("nan"))
    p = successes / trials
    denominator = 1.0 + Z_95**2 / trials
    center = (p + Z_95**2 / (2.0 * trials)) / denominator
    half = Z_95 * math.sqrt(p * (1.0 - p) / trials + Z_95**2 / (4.0 * trials**2)) / denominator
    return (p, max(0.0, center - half), min(1.0, center + half))


class McReport(BaseModel):
    """
    Outcome of one Monte-Carlo check

    Attributes:
        name: name of the check (for example "before_tau_arbitrage")
        kind: random time kind the check was run for
        group: claim group used to order verdict tables
        estimate: point estimate of the reported quantity
        std_error: standard error of the estimate
        ci_low: lower bound of the 95% confidence interval
        ci_high: upper bound of the 95% confidence interval
        n_paths: number of simulated paths
        n_used: number of paths that entered the statistic
        n_excluded: number of paths left out of the statistic
        exclusions: count of excluded paths per reason code
        verdict: one of "pass", "fail" or "informational"
        seed: base seed of the ensemble
        config_hash: hash of the experiment configuration
        details: additional check specific values
    """
    name: str
    kind: Optional[str] = None
    group: Optional[str] = None
    estimate: float
    std_error: float
    ci_low: float
    ci_high: float
    n_paths: int
    n_used: int
    n_excluded: int = 0
    exclusions: Dict[str, int] = {}
    verdict: str
    seed: Optional[int] = None
    config_hash: Optional[str] = None
    details: Dict[str, Any] = {}

    @validator("verdict")
    def __verdict_must_be_known(cls, v):  # pylint: disable=unused-private-member
        if (v not in [VERDICT_PASS, VERDICT_FAIL, VERDICT_INFORMATIONAL]):
            raise ValueError("Unknown verdict '%s'" % (v))
        return v

    @root_validator(skip_on_failure=True)
    def __counts_and_interval_must_agree(cls, values):  # pylint: disable=unused-private-member
        if (values["n_used"] + values["n_excluded"] != values["n_paths"]):
            raise ValueError("n_used + n_excluded must equal n_paths")
        if (sum(values["exclusions"].values()) != values["n_excluded"]):
            raise ValueError("Exclusion reason counts must add up to n_excluded")
        estimate = values["estimate"]
        if (math.isfinite(estimate) and math.isfinite(values["ci_low"]) and math.isfinite(values["ci_high"])):
            if not (values["ci_low"] <= estimate <= values["ci_high"]):
                raise ValueError("Confidence interval must contain the estimate")
        return values

    @classmethod
    def from_values(cls,
                    name: str,
                    values: Sequence[float],
                    verdict: str,
                    n_paths: Optional[int] = None,
                    exclusions: Optional[Dict[str, int]] = None,
                    **kwargs) -> "McReport":
        """
        Build a report from per-path values (mean, standard error and
        a normal 95% confidence interval)

        Args:
            name: name of the check
            values: per-path values that entered the statistic
            verdict: verdict of the check
            n_paths: total number of paths, defaults to len(values) plus exclusions
            exclusions: count of excluded paths per reason code
            **kwargs: any other McReport attribute

        Returns:
            the report
        """
        # init
        arr = np.asarray(values, dtype=float)
        exclusions = {k: int(v) for k, v in (exclusions or {}).items() if v > 0}
        n_excluded = sum(exclusions.values())
        if (n_paths is None):
            n_paths = int(arr.size) + n_excluded

        # statistics
        if (arr.size == 0):
            estimate, se = (float("nan"), float("nan"))
        else:
            estimate = float(arr.mean())
            se = float(arr.std(ddof=1) / math.sqrt(arr.size)) if arr.size > 1 else 0.0

        # return
        return cls(name=name,
                   estimate=estimate,
                   std_error=se,
                   ci_low=estimate - Z_95 * se,
                   ci_high=estimate + Z_95 * se,
                   n_paths=n_paths,
                   n_used=n_paths - n_excluded,
                   n_excluded=n_excluded,
                   exclusions=exclusions,
                   verdict=verdict,
                   **kwargs)

    @property
    def passed(self) -> bool:
        return self.verdict != VERDICT_FAIL

    def to_json_serializable(self) -> Dict:
        """
        Convert object to a JSON-serializable dictionary

        Returns:
            a dictionary object that is JSON-serializable
        """
        d = dict(self.__dict__)
        d["exclusions"] = dict(sorted(self.exclusions.items()))
        return d

    def __str__(self) -> str:
        """
        String method

        Returns:
            string format of McReport object
        """
        return self.__repr__()

    def __repr__(self) -> str:
        """
        Object representation

        Returns:
            object representation of McReport object
        """
        return "%s(name='%s', kind=%s, estimate=%s, std_error=%s, n_used=%d, verdict='%s')" % (
            self.__class__.__name__,
            self.name,
            repr(self.kind),
            repr(self.estimate),
            repr(self.std_error),
            self.n_used,
            self.verdict,
        )
