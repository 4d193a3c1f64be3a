"""
Functions for realizing random times on sample paths
"""

import csv
import math
import numpy as np
from scipy import optimize
from typing import Any, Dict, List, Optional
from . import (KIND_BROWNIAN_LEVEL,
               KIND_BROWNIAN_MATURITY,
               KIND_BROWNIAN_SUP_OVERALL,
               KIND_POISSON_LEVEL,
               KIND_POISSON_SUP_UNIT,
               KIND_POISSON_SUP_OVERALL,
               KIND_EMERY,
               KIND_CONVEX_COMBO,
               KIND_MIN_SCALED,
               KIND_MAX_SCALED)
from .classes.random_time_spec import RandomTimeSpec
from .classes.realized_time import RealizedTime
from ..market.classes.sample_path import SamplePath
from ..special_functions.ruin import exit_level_offset
from ..exceptions import EnlargeContractException, EnlargeNumericalException, EnlargeParameterException

# pdoc init
__pdoc__: Dict = {}

# number of sub-samples per jump-free segment when scanning Z~ for a threshold
SEGMENT_SAMPLES = 32

# header of the realized time CSV export
REALIZED_CSV_HEADER = ["path_id", "tau", "detected", "empty_set", "left_limit"]


def __undetected(spec: RandomTimeSpec, path: SamplePath, **auxiliary) -> RealizedTime:
    return RealizedTime(kind=spec.kind, path_index=path.index, tau=float("inf"), detected=False,
                        auxiliary={k: float(v) for k, v in auxiliary.items()})


def __maturity_index(path: SamplePath) -> int:
    # grid index of t = 1 on a Brownian path
    if (path.horizon < 1.0 - 1e-12):
        raise EnlargeParameterException("Random times bounded by 1 need paths reaching t = 1, horizon is %s" % (
            path.horizon))
    return path.index_of(1.0)


def __last_crossing_step(path: SamplePath, level: float, n_steps: int) -> Optional[int]:
    # last step i < n_steps whose bridge range contains the level
    if (n_steps <= 0):
        return None
    crossing = np.nonzero((path.step_min[:n_steps] <= level) & (path.step_max[:n_steps] >= level))[0]
    if (len(crossing) == 0):
        return None
    return int(crossing[-1])


def __realize_brownian_level(spec: RandomTimeSpec, path: SamplePath) -> RealizedTime:
    level = spec.price_level(path.model)
    n_steps = len(path.grid) - 1
    i = __last_crossing_step(path, level, n_steps)
    if (i is None or path.s[-1] >= level):
        return __undetected(spec, path, level=level)
    return RealizedTime(kind=spec.kind,
                        path_index=path.index,
                        tau=float(path.grid[i + 1]),
                        t_grid_index=i + 1,
                        auxiliary={"level": level, "s_tau": float(path.s[i + 1])})


def __realize_brownian_maturity(spec: RandomTimeSpec, path: SamplePath) -> RealizedTime:
    level = spec.price_level(path.model)
    k1 = __maturity_index(path)
    i = __last_crossing_step(path, level, k1)
    if (i is None):
        return RealizedTime(kind=spec.kind, path_index=path.index, tau=0.0, t_grid_index=0, empty_set=True,
                            auxiliary={"level": level})
    return RealizedTime(kind=spec.kind,
                        path_index=path.index,
                        tau=float(path.grid[i + 1]),
                        t_grid_index=i + 1,
                        auxiliary={"level": level, "s_tau": float(path.s[i + 1])})


def __realize_brownian_sup(spec: RandomTimeSpec, path: SamplePath) -> RealizedTime:
    n_steps = len(path.grid) - 1
    if (n_steps == 0):
        return __undetected(spec, path)
    i = int(np.argmax(path.step_max))
    if (i == n_steps - 1):
        return __undetected(spec, path, s_star=float(path.step_max[i]))
    j = i if path.s[i] >= path.s[i + 1] else i + 1
    return RealizedTime(kind=spec.kind,
                        path_index=path.index,
                        tau=float(path.grid[j]),
                        t_grid_index=j,
                        auxiliary={"s_star": float(path.step_max[i]), "s_tau": float(path.s[j])})


def __realize_emery(spec: RandomTimeSpec, path: SamplePath) -> RealizedTime:
    k1 = __maturity_index(path)
    s1 = float(path.s[k1])
    i = __last_crossing_step(path, s1 / 2.0, k1)
    if (i is None):
        return RealizedTime(kind=spec.kind, path_index=path.index, tau=0.0, t_grid_index=0, empty_set=True,
                            auxiliary={"s_1": s1})
    return RealizedTime(kind=spec.kind,
                        path_index=path.index,
                        tau=float(path.grid[i + 1]),
                        t_grid_index=i + 1,
                        auxiliary={"s_1": s1, "entry_price": s1 / 2.0})


def poisson_level_visits(spec: RandomTimeSpec, path: SamplePath) -> np.ndarray:
    """
    Times at which Y = mu t - N reaches the level a of the Poisson last
    passage time from below (Y only moves up continuously, so every
    visit is an upcrossing between two jumps)

    Args:
        spec: a Poisson level RandomTimeSpec
        path: a Poisson SamplePath

    Returns:
        array of the visit times up to the path horizon
    """
    a = spec.level_a(path.model)
    mu = path.model.mu
    y_start = path.y[:-1]
    y_end = y_start + mu * np.diff(path.grid)
    crossing = (y_start < a) & (y_end >= a)
    return path.grid[:-1][crossing] + (a - y_start[crossing]) / mu


def __realize_poisson_level(spec: RandomTimeSpec, path: SamplePath) -> RealizedTime:
    a = spec.level_a(path.model)
    visits = poisson_level_visits(spec, path)
    if (len(visits) == 0 or path.y[-1] < a):
        return __undetected(spec, path, level_a=a, n_visits=len(visits))
    tau = float(visits[-1])
    return RealizedTime(kind=spec.kind,
                        path_index=path.index,
                        tau=tau,
                        t_grid_index=int(np.searchsorted(path.grid, tau, side="right")) - 1,
                        auxiliary={"level_a": a, "n_visits": float(len(visits)), "y_horizon": float(path.y[-1])})


def __poisson_records(path: SamplePath, end: float) -> np.ndarray:
    # grid indexes of the jump times <= end at which the supremum is reached,
    # by the right value (psi > 0) or by the left limit (psi < 0)
    g = np.arange(1, len(path.grid))
    g = g[(path.grid[g] <= end) & (path.s[g] != path.s_left[g])]
    if (path.model.psi > 0):
        return g[path.s[g] > path.s_star[g - 1]]
    return g[path.s_left[g] >= path.s_star[g - 1]]


def __realize_poisson_sup(spec: RandomTimeSpec, path: SamplePath) -> RealizedTime:
    end = 1.0 if spec.kind == KIND_POISSON_SUP_UNIT else path.horizon
    if (path.horizon < end - 1e-12):
        raise EnlargeParameterException("The supremum time on [0, 1] needs paths reaching t = 1, horizon is %s" % (
            path.horizon))
    records = __poisson_records(path, end)
    s_star_end = path.sup_at(end)
    auxiliary = {"s_star_end": s_star_end}

    # psi > 0: the last record jump, or 0 without records
    if (path.model.psi > 0):
        g = int(records[-1]) if len(records) > 0 else 0
        return RealizedTime(kind=spec.kind, path_index=path.index, tau=float(path.grid[g]), t_grid_index=g,
                            auxiliary=auxiliary)

    # psi < 0: the price still at its supremum at the end, or the last jump taken from the supremum
    if (path.value_at(end) >= s_star_end):
        if (spec.kind == KIND_POISSON_SUP_OVERALL):
            return __undetected(spec, path, s_star_end=s_star_end)
        k = int(np.searchsorted(path.grid, end, side="right")) - 1
        return RealizedTime(kind=spec.kind, path_index=path.index, tau=end, t_grid_index=k, auxiliary=auxiliary)
    g = int(records[-1])
    return RealizedTime(kind=spec.kind, path_index=path.index, tau=float(path.grid[g]), t_grid_index=g,
                        left_limit=True, auxiliary=auxiliary)


def __realize_two_jumps(spec: RandomTimeSpec, path: SamplePath) -> RealizedTime:
    if (len(path.jump_times) < 2):
        return __undetected(spec, path, n_jumps=len(path.jump_times))
    t1 = float(path.jump_times[0])
    t2 = float(path.jump_times[1])
    if (spec.kind == KIND_CONVEX_COMBO):
        tau = spec.k1 * t1 + spec.k2 * t2
    elif (spec.kind == KIND_MIN_SCALED):
        tau = min(t1, spec.a * t2)
    else:
        tau = max(t1, spec.a * t2)
    return RealizedTime(kind=spec.kind,
                        path_index=path.index,
                        tau=tau,
                        t_grid_index=int(np.searchsorted(path.grid, tau, side="right")) - 1,
                        auxiliary={"T1": t1, "T2": t2})


def realize(spec: RandomTimeSpec, path: SamplePath) -> RealizedTime:
    """
    Compute a random time on a sample path

    Last passage times scan backward from the horizon using the
    Brownian-bridge range of every step (Brownian) or the exact
    upcrossings of Y (Poisson). Supremum times locate the last record of
    the price; with psi < 0 the supremum of a Poisson path is a left limit
    and the returned time is the jump time that ends the record. Times
    built from T1 and T2 are computed directly.

    A time that cannot be located before the end of the path is returned
    with `detected=False` and tau = inf. The supremum of an empty set is
    returned as 0 with `empty_set=True`.

    Args:
        spec: the RandomTimeSpec
        path: a SamplePath from a compatible model

    Returns:
        the RealizedTime

    Raises:
        pyenlarge.exceptions.EnlargeContractException: incompatible model
    """
    spec.check_model(path.model)
    if (spec.kind == KIND_BROWNIAN_LEVEL):
        return __realize_brownian_level(spec, path)
    if (spec.kind == KIND_BROWNIAN_MATURITY):
        return __realize_brownian_maturity(spec, path)
    if (spec.kind == KIND_BROWNIAN_SUP_OVERALL):
        return __realize_brownian_sup(spec, path)
    if (spec.kind == KIND_EMERY):
        return __realize_emery(spec, path)
    if (spec.kind == KIND_POISSON_LEVEL):
        return __realize_poisson_level(spec, path)
    if (spec.kind in [KIND_POISSON_SUP_UNIT, KIND_POISSON_SUP_OVERALL]):
        return __realize_poisson_sup(spec, path)
    return __realize_two_jumps(spec, path)


def realize_many(spec: RandomTimeSpec, paths: List[SamplePath]) -> List[RealizedTime]:
    """
    Realize a random time on every path of an ensemble

    Args:
        spec: the RandomTimeSpec
        paths: the SamplePath objects

    Returns:
        list of RealizedTime objects, in path order
    """
    return [realize(spec, path) for path in paths]


def __exit_threshold(realized: RealizedTime, azema: Any) -> float:
    jump = azema.a_opt_at(realized.tau) - azema.a_opt_left_at(realized.tau)
    return (1.0 - jump) / 2.0


def __brownian_exit_time(path: SamplePath, realized: RealizedTime, azema: Any, threshold: float) -> float:
    z_tilde = azema.z_tilde_series()
    after = np.nonzero(z_tilde[realized.t_grid_index + 1:] <= threshold)[0]
    if (len(after) == 0):
        return float("inf")
    return float(path.grid[realized.t_grid_index + 1 + after[0]])


def __segment_crossing(azema: Any, a: float, b: float, threshold: float) -> Optional[float]:
    # first t in ]a, b[ with Z_t <= threshold, Z being continuous on the open segment
    samples = np.linspace(a, b, SEGMENT_SAMPLES + 2)[1:-1]
    previous = a
    for t in samples:
        if (azema.z_at(float(t)) <= threshold):
            if (azema.z_at(previous) <= threshold):
                return previous
            try:
                return float(optimize.brentq(lambda s: azema.z_at(s) - threshold, previous, float(t), xtol=1e-12))
            except (ValueError, RuntimeError) as e:
                raise EnlargeNumericalException("Exit time search failed: %s" % (e),
                                                diagnostics={"segment": (a, b), "threshold": threshold}) from e
        previous = float(t)
    return None


def __poisson_exit_time(spec: RandomTimeSpec,
                        path: SamplePath,
                        realized: RealizedTime,
                        azema: Any,
                        threshold: float) -> float:
    breaks = []
    for (a, b, jump_at_b) in path.segments(realized.tau, path.horizon):
        if (spec.maturity is not None and a < spec.maturity < b):
            breaks.append((a, spec.maturity, True))
            breaks.append((spec.maturity, b, jump_at_b))
        else:
            breaks.append((a, b, jump_at_b or (spec.maturity is not None and b == spec.maturity)))
    for (a, b, event_at_b) in breaks:
        nu = __segment_crossing(azema, a, b, threshold)
        if (nu is not None):
            return nu
        if (event_at_b and azema.z_tilde_at(b) <= threshold):
            return b
    return float("inf")


def exit_time_nu(spec: RandomTimeSpec, path: SamplePath, realized: RealizedTime, azema: Any) -> float:
    """
    Exit time nu = inf{t > tau : Z~_t <= (1 - dA°_tau)/2} of an honest time

    Brownian paths are scanned on the grid. Poisson paths are scanned
    between jumps on a sub-sample of every segment, the crossing is then
    refined by root finding on the closed form of Z, and the jump and
    maturity times are checked separately.

    Args:
        spec: an honest RandomTimeSpec
        path: the SamplePath
        realized: tau on that path
        azema: the AzemaBundle of (spec, path)

    Returns:
        nu, or inf when tau or nu is not detected before the end of the path

    Raises:
        pyenlarge.exceptions.EnlargeContractException: spec is not honest
    """
    if (spec.honest is False):
        raise EnlargeContractException("The exit time nu is defined for honest times only, got '%s'" % (spec.kind))
    if (realized.finite is False):
        return float("inf")
    threshold = __exit_threshold(realized, azema)
    if (path.model.is_brownian):
        return __brownian_exit_time(path, realized, azema, threshold)
    return __poisson_exit_time(spec, path, realized, azema, threshold)


def nu_is_ambiguous(spec: RandomTimeSpec, path: SamplePath, realized: RealizedTime, azema: Any, nu: float) -> bool:
    """
    Whether an exit time found on an estimated Z~ is within one standard
    error of the threshold, i.e. Z~ never falls below the threshold by more
    than the standard error of the table at nu before the next event

    Args:
        spec: an honest RandomTimeSpec
        path: the SamplePath
        realized: tau on that path
        azema: the AzemaBundle of (spec, path)
        nu: the exit time

    Returns:
        True when the crossing is ambiguous, always False for closed forms
    """
    if (not math.isfinite(nu)):
        return False
    se = azema.z_se_at(nu)
    if (se == 0):
        return False
    threshold = __exit_threshold(realized, azema)
    following = path.next_jump_after(nu)
    end = path.horizon if following is None else following
    if (spec.maturity is not None and nu < spec.maturity < end):
        end = spec.maturity
    samples = np.linspace(nu, end, SEGMENT_SAMPLES + 2)[1:-1]
    return all([azema.z_at(float(t)) > threshold - se for t in samples])


def poisson_level_exit_time(spec: RandomTimeSpec, path: SamplePath, realized: RealizedTime) -> float:
    """
    Exit time of the Poisson last passage time as the first hitting
    time of a + x* by Y after tau, with Psi(x*) = Psi(0)/2

    Args:
        spec: a Poisson level RandomTimeSpec
        path: the SamplePath
        realized: tau on that path

    Returns:
        nu, or inf when it is not reached before the end of the path
    """
    if (spec.kind != KIND_POISSON_LEVEL):
        raise EnlargeContractException("The Y level exit time applies to the Poisson last passage time only")
    if (realized.finite is False):
        return float("inf")
    mu = path.model.mu
    target = spec.level_a(path.model) + exit_level_offset(path.model.theta)
    for (a, b, _) in path.segments(realized.tau, path.horizon):
        y_start = path.y_at(a)
        y_end = y_start + mu * (b - a)
        if (y_start < target <= y_end):
            return a + (target - y_start) / mu
    return float("inf")


def write_realized_csv(realized: List[RealizedTime], filename: str) -> None:
    """
    Write realized times to a CSV file, one row per path

    Args:
        realized: the RealizedTime objects
        filename: output filename
    """
    keys = sorted(set([k for r in realized for k in r.auxiliary.keys()]))
    with open(filename, "w", newline="") as fp:
        writer = csv.writer(fp)
        writer.writerow(REALIZED_CSV_HEADER + keys)
        for r in realized:
            writer.writerow(r.csv_row(keys))
