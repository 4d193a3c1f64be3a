"""
Functions for building deflators and testing deflated processes
"""

import csv
import datetime
import math
import warnings
import numpy as np
from collections import Counter
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple
from . import (X_PRICE,
               X_MARTINGALE,
               X_DRIVER,
               DEFAULT_TOLERANCE_SIGMAS,
               DEFAULT_TEST_TIMES,
               MIN_TEST_PATHS,
               GATE_TOLERANCE,
               ROUNDOFF_ULPS,
               DEFLATOR_CSV_HEADER)
from .classes.deflator_run import DeflatorRun
from .classes.g_hat_martingale import GHatMartingale
from ..azema.azema import azema_bundle
from ..azema.classes.azema_bundle import AzemaBundle
from ..market.classes.market_model import MarketModel
from ..market.classes.sample_path import SamplePath
from ..random_times.random_times import realize
from ..random_times.classes.random_time_spec import RandomTimeSpec
from ..random_times.classes.realized_time import RealizedTime
from ..report import (McReport,
                      VERDICT_PASS,
                      VERDICT_FAIL,
                      VERDICT_INFORMATIONAL,
                      EXCLUDED_TAU_UNDETECTED,
                      EXCLUDED_Z_HIT_ZERO,
                      EXCLUDED_Z_HIT_ONE)
from ..strategies import WHEN_BEFORE, WHEN_AFTER
from ..strategies.strategies import segment_quad
from .._internal.util import map_ordered
from ..exceptions import (EnlargeContractException,
                          EnlargeInvariantException,
                          EnlargeParameterException)

# pdoc init
__pdoc__: Dict = {}


def evaluation_times(paths: Sequence[SamplePath], n_times: Optional[int] = DEFAULT_TEST_TIMES) -> np.ndarray:
    """
    Evenly spaced times from 0 to the shortest horizon of an ensemble,
    moved onto the grid for Brownian paths

    Args:
        paths: the ensemble of SamplePath objects
        n_times: number of times, at least 2

    Returns:
        array of evaluation times

    Raises:
        pyenlarge.exceptions.EnlargeParameterException: empty ensemble or fewer than 2 times
    """
    if (len(paths) == 0):
        raise EnlargeParameterException("Evaluation times need at least one path")
    if (n_times < 2):
        raise EnlargeParameterException("Evaluation times need n_times >= 2, got %d" % (n_times))
    horizon = min([p.horizon for p in paths])
    times = np.linspace(0.0, horizon, n_times)
    path = paths[0]
    if (path.model.is_brownian and path.dt > 0):
        times = np.unique(np.minimum(np.rint(times / path.dt), path.n_points - 1) * path.dt)
    return times


def __grid_indices(path: SamplePath, times: np.ndarray) -> np.ndarray:
    indices = np.rint(np.asarray(times) / path.dt).astype(int) if path.dt > 0 else np.zeros(len(times), dtype=int)
    if (np.any(indices < 0) or np.any(indices >= path.n_points)
            or not np.allclose(path.grid[np.clip(indices, 0, path.n_points - 1)], times, rtol=0.0, atol=1e-9)):
        raise EnlargeParameterException("Evaluation times must lie on the path grid")
    return indices


def __default_times(path: SamplePath, times: Optional[Sequence[float]]) -> np.ndarray:
    if (times is not None):
        return np.asarray(times, dtype=float)
    if (path.model.is_brownian):
        return np.asarray(path.grid, dtype=float)
    return evaluation_times([path])


def __stop(realized: RealizedTime, path: SamplePath) -> float:
    # an undetected tau lies beyond the horizon of the path
    return realized.tau if realized.finite else path.horizon


def __driver_at(path: SamplePath, t: float) -> float:
    if (path.model.is_brownian):
        return float(path.driver[path.index_of(t)])
    return path.n_at(t) - path.model.lam * t


def __x_at(bundle: AzemaBundle, x: str, t: float) -> float:
    if (x == X_PRICE):
        return bundle.path.value_at(t)
    if (x == X_MARTINGALE):
        return bundle.m_at(t)
    return __driver_at(bundle.path, t)


def __poisson_bracket_density(bundle: AzemaBundle, x: str) -> Callable[[float], float]:
    # d<X, m>/dt between jumps, with dm = nu^ dM and d<M> = lam dt
    model = bundle.model
    path = bundle.path
    if (x == X_PRICE):
        return lambda s: model.lam * model.psi * path.left_value_at(s) * bundle.nu_hat_at(s)
    if (x == X_MARTINGALE):
        return lambda s: model.lam * bundle.nu_hat_at(s) ** 2
    return lambda s: model.lam * bundle.nu_hat_at(s)


def __grid_bracket_density(bundle: AzemaBundle, x: str) -> np.ndarray:
    # d<X, m>/dt on the grid, with dm = eta dW and dS = sigma S dW
    eta = bundle.eta_series()
    if (x == X_PRICE):
        return bundle.model.sigma * bundle.path.s * eta
    if (x == X_MARTINGALE):
        return eta ** 2
    return eta


def __poisson_walk(bundle: AzemaBundle,
                   start: float,
                   end: float,
                   times: np.ndarray,
                   density: Callable[[float], float],
                   guard: Callable[[float], bool],
                   jump: Optional[Callable[[float], Tuple[float, float]]] = None) -> Dict[str, Any]:
    # integrates density over ]start, end] segment by segment and, when
    # given, adds log(factor) at every jump of the interval
    path = bundle.path
    jumps = [float(t) for t in path.jump_times if start < t <= end]
    checkpoints = sorted(set(jumps + [float(t) for t in times if start < t < end] + ([end] if end > start else [])))
    recorded = {}
    kappas: List[float] = []
    factors: List[float] = []
    total = 0.0
    previous = start
    for t in checkpoints:
        if (guard(t) is False):
            return {"excluded": True}
        if (t > previous):
            total += segment_quad(density, bundle, previous, t)
        if (jump is not None and t in jumps):
            kappa, factor = jump(t)
            if (factor is None):
                return {"excluded": True}
            kappas.append(kappa)
            factors.append(factor)
            total += math.log(factor)
        recorded[t] = total
        previous = t

    # values at the evaluation times, constant outside of ]start, end]
    values = np.zeros(len(times))
    for i, t in enumerate(times):
        if (t <= start):
            values[i] = 0.0
        elif (t >= end):
            values[i] = total
        else:
            values[i] = recorded[float(t)]
    return {"values": values, "kappa": np.asarray(kappas), "factors": np.asarray(factors)}


def __checked_factor(factor: float, t: float, path: SamplePath, diagnostics: Dict) -> float:
    if (not math.isfinite(factor) or factor <= 0):
        raise EnlargeInvariantException("Non-positive jump factor %s of the deflator at t = %s on path %d" % (factor, t, path.index),
                                        diagnostics=dict(diagnostics, time=t, path_index=path.index, factor=factor))
    return factor


def g_hat(spec: RandomTimeSpec,
          model: MarketModel,
          path: SamplePath,
          x: Optional[str] = X_PRICE,
          when: Optional[str] = WHEN_BEFORE,
          times: Optional[Sequence[float]] = None,
          bundle_options: Optional[Dict[str, Any]] = None) -> GHatMartingale:
    """
    G-compensated version X^ of an F-martingale X along one path

    Before tau, X^_t = X_{t^tau} - int_0^{t^tau} d<X, m>/Z_-. After an honest
    tau, X^_t = X_t - int_0^{t^tau} d<X, m>/Z_- + int_{t^tau}^t d<X, m>/(1 - Z_-).
    The brackets are lam nu^ (X = M), lam nu^^2 (X = m) and lam psi S_- nu^
    (X = S) on Poisson paths, integrated exactly between jumps, and
    eta, eta^2 and sigma S eta on Brownian paths (grid sums, X = M then
    stands for W).

    Args:
        spec: the RandomTimeSpec
        model: the MarketModel
        path: a SamplePath of the model
        x: "S", "m" or "M"
        when: "before" or "after" tau
        times: evaluation times, defaults to the grid (Brownian) or to
            DEFAULT_TEST_TIMES times (Poisson)
        bundle_options: keyword arguments of `pyenlarge.azema.azema_bundle`

    Returns:
        the GHatMartingale, flagged as excluded when Z reaches 0 before tau
        (or 1 after tau)

    Raises:
        pyenlarge.exceptions.EnlargeContractException: unknown process, or
            decomposition after tau of a time that is not honest
    """
    # init
    spec.check_model(model)
    if (x not in [X_PRICE, X_MARTINGALE, X_DRIVER]):
        raise EnlargeContractException("No bracket with m for the process '%s'" % (x))
    if (when == WHEN_AFTER and spec.honest is False):
        raise EnlargeContractException("The decomposition after tau needs an honest time, got '%s'" % (spec.kind))
    times = __default_times(path, times)
    realized = realize(spec, path)
    bundle = azema_bundle(spec, path, **(bundle_options or {}))
    stop = __stop(realized, path)

    # X, stopped at tau before tau
    if (when == WHEN_BEFORE):
        x_values = np.asarray([__x_at(bundle, x, min(t, stop)) for t in times])
    else:
        x_values = np.asarray([__x_at(bundle, x, t) for t in times])

    # compensator
    excluded = None
    if (model.is_brownian):
        z = bundle.z_series()
        density = __grid_bracket_density(bundle, x)
        k = realized.t_grid_index if realized.finite else path.n_points - 1
        steps = np.arange(0, path.n_points - 1)
        with np.errstate(divide="ignore", invalid="ignore"):
            increments = np.where(steps < k, density[:-1] / z[:-1], 0.0) * path.dt
            if (when == WHEN_AFTER):
                increments -= np.where(steps >= k, density[:-1] / (1.0 - z[:-1]), 0.0) * path.dt
        if (np.any(z[:k] <= 0)):
            excluded = EXCLUDED_Z_HIT_ZERO
        elif (when == WHEN_AFTER and np.any(z[k + 1:] >= 1.0)):
            excluded = EXCLUDED_Z_HIT_ONE
        cumulative = np.concatenate([[0.0], np.cumsum(increments)])
        compensator = cumulative[__grid_indices(path, times)] if excluded is None else np.full(len(times), np.nan)
    else:
        density = __poisson_bracket_density(bundle, x)
        before = __poisson_walk(bundle, 0.0, stop, times,
                                lambda s: density(s) / bundle.z_left_at(s),
                                lambda t: bundle.z_left_at(t) > 0)
        if ("excluded" in before):
            excluded = EXCLUDED_Z_HIT_ZERO
            compensator = np.full(len(times), np.nan)
        else:
            compensator = before["values"]
            if (when == WHEN_AFTER):
                after = __poisson_walk(bundle, stop, path.horizon, times,
                                       lambda s: density(s) / (1.0 - bundle.z_left_at(s)),
                                       lambda t: bundle.z_left_at(t) < 1.0)
                if ("excluded" in after):
                    excluded = EXCLUDED_Z_HIT_ONE
                    compensator = np.full(len(times), np.nan)
                else:
                    compensator = compensator - after["values"]

    # return
    return GHatMartingale(x, when, path.index, stop, times, x_values, compensator, excluded=excluded)


def deflator_before(spec: RandomTimeSpec,
                    model: MarketModel,
                    path: SamplePath,
                    times: Optional[Sequence[float]] = None,
                    bundle_options: Optional[Dict[str, Any]] = None) -> DeflatorRun:
    """
    Local martingale deflator L of S^tau along one path

    On Poisson paths L = E(-nu^/(Z_- + nu^) . M^): between jumps
    d log L = lam nu^/Z_- dt, and every jump up to tau multiplies L by
    Z_-/(Z_- + nu^). On Brownian paths L solves dL = -(L/Z) dm^, that is
    log L = -int (eta/Z) dW + 1/2 int (eta/Z)^2 dt on the grid. L is
    constant after tau. Paths where Z reaches 0 up to tau are returned
    flagged with the "z_hit_zero" exclusion code.

    Args:
        spec: the RandomTimeSpec
        model: the MarketModel
        path: a SamplePath of the model
        times: evaluation times, defaults to the grid (Brownian) or to
            DEFAULT_TEST_TIMES times (Poisson)
        bundle_options: keyword arguments of `pyenlarge.azema.azema_bundle`

    Returns:
        the DeflatorRun, with L S^tau as the deflated process

    Raises:
        pyenlarge.exceptions.EnlargeInvariantException: a jump factor is not positive
    """
    # init
    spec.check_model(model)
    times = __default_times(path, times)
    realized = realize(spec, path)
    bundle = azema_bundle(spec, path, **(bundle_options or {}))
    stop = __stop(realized, path)
    undeflated = np.asarray([path.value_at(min(t, stop)) for t in times])

    # Brownian paths
    if (model.is_brownian):
        z = bundle.z_series()
        eta = bundle.eta_series()
        k = realized.t_grid_index if realized.finite else path.n_points - 1
        if (np.any(z[:k] <= 0)):
            return DeflatorRun(path.index, WHEN_BEFORE, stop, times, np.full(len(times), np.nan),
                               np.full(len(times), np.nan), undeflated, excluded=EXCLUDED_Z_HIT_ZERO)
        q = np.zeros(path.n_points - 1)
        q[:k] = eta[:k] / z[:k]
        increments = -q * np.diff(path.driver) + 0.5 * q ** 2 * path.dt
        log_l = np.concatenate([[0.0], np.cumsum(increments)])
        l = np.exp(log_l[__grid_indices(path, times)])  # noqa: E741
        return DeflatorRun(path.index, WHEN_BEFORE, stop, times, l, l * undeflated, undeflated, kappa=-1.0 / z[:k])

    # Poisson paths
    def jump(t: float) -> Tuple[float, Optional[float]]:
        z_left = bundle.z_left_at(t)
        nu = bundle.nu_hat_at(t)
        denominator = z_left + nu
        if (abs(denominator) <= GATE_TOLERANCE):
            # Z_t = 0 at a jump up to tau
            return (float("nan"), None)
        kappa = -nu / denominator
        factor = __checked_factor(z_left / denominator, t, path, {"z_left": z_left, "nu_hat": nu})
        return (kappa, factor)

    walk = __poisson_walk(bundle, 0.0, stop, times,
                          lambda s: model.lam * bundle.nu_hat_at(s) / bundle.z_left_at(s),
                          lambda t: bundle.z_left_at(t) > 0,
                          jump)
    if ("excluded" in walk):
        return DeflatorRun(path.index, WHEN_BEFORE, stop, times, np.full(len(times), np.nan),
                           np.full(len(times), np.nan), undeflated, excluded=EXCLUDED_Z_HIT_ZERO)
    l = np.exp(walk["values"])  # noqa: E741
    return DeflatorRun(path.index, WHEN_BEFORE, stop, times, l, l * undeflated, undeflated,
                       kappa=walk["kappa"], jump_factors=walk["factors"])


def deflator_after(spec: RandomTimeSpec,
                   model: MarketModel,
                   path: SamplePath,
                   times: Optional[Sequence[float]] = None,
                   bundle_options: Optional[Dict[str, Any]] = None) -> DeflatorRun:
    """
    Local martingale deflator L of S - S^tau along one path, for an honest
    time with Z_tau < 1

    L = E(nu^/(1 - Z_- - nu^) 1]tau, oo[ . M^): L = 1 up to tau, then
    d log L = -lam nu^/(1 - Z_-) dt between jumps and every jump multiplies
    L by (1 - Z_-)/(1 - Z_- - nu^).

    Z_tau < 1 is checked on the path. An honest time avoiding stopping
    times in a Brownian market has Z_tau = 1, for which no deflator
    exists after tau.

    Args:
        spec: the RandomTimeSpec
        model: the MarketModel
        path: a SamplePath of the model
        times: evaluation times, defaults to DEFAULT_TEST_TIMES times
        bundle_options: keyword arguments of `pyenlarge.azema.azema_bundle`

    Returns:
        the DeflatorRun, with L (S - S^tau) as the deflated process

    Raises:
        pyenlarge.exceptions.EnlargeContractException: the time is not honest or Z_tau = 1
        pyenlarge.exceptions.EnlargeInvariantException: a jump factor is not positive
    """
    # gate
    spec.check_model(model)
    if (spec.honest is False):
        raise EnlargeContractException("The deflator after tau needs an honest time, got '%s'" % (spec.kind))
    if (model.is_brownian and spec.avoids_stopping_times):
        raise EnlargeContractException("Z_tau = 1 for '%s' in a Brownian market, there is no deflator after tau" % (spec.kind))
    times = __default_times(path, times)
    realized = realize(spec, path)
    if (realized.finite is False):
        nan = np.full(len(times), np.nan)
        return DeflatorRun(path.index, WHEN_AFTER, realized.tau, times, nan, nan, nan, excluded=EXCLUDED_TAU_UNDETECTED)
    bundle = azema_bundle(spec, path, **(bundle_options or {}))
    tau = realized.tau
    z_tau = bundle.z_at(tau)
    if (not z_tau < 1.0 - GATE_TOLERANCE):
        raise EnlargeContractException("Z_tau = %s on path %d, the deflator after tau needs Z_tau < 1" % (z_tau, path.index))
    s_tau = path.value_at(tau)
    undeflated = np.asarray([path.value_at(t) - s_tau if t > tau else 0.0 for t in times])

    # stochastic exponential after tau
    def jump(t: float) -> Tuple[float, Optional[float]]:
        z_left = bundle.z_left_at(t)
        nu = bundle.nu_hat_at(t)
        denominator = 1.0 - z_left - nu
        if (abs(denominator) <= GATE_TOLERANCE):
            # Z_t = 1 at a jump after tau
            return (float("nan"), None)
        kappa = nu / denominator
        factor = __checked_factor((1.0 - z_left) / denominator, t, path, {"z_left": z_left, "nu_hat": nu})
        return (kappa, factor)

    walk = __poisson_walk(bundle, tau, path.horizon, times,
                          lambda s: -model.lam * bundle.nu_hat_at(s) / (1.0 - bundle.z_left_at(s)),
                          lambda t: bundle.z_left_at(t) < 1.0,
                          jump)
    if ("excluded" in walk):
        nan = np.full(len(times), np.nan)
        return DeflatorRun(path.index, WHEN_AFTER, tau, times, nan, nan, undeflated, excluded=EXCLUDED_Z_HIT_ONE)
    l = np.exp(walk["values"])  # noqa: E741
    return DeflatorRun(path.index, WHEN_AFTER, tau, times, l, l * undeflated, undeflated,
                       kappa=walk["kappa"], jump_factors=walk["factors"])


def martingale_test(values: np.ndarray,
                    times: Sequence[float],
                    tolerance_sigmas: Optional[float] = DEFAULT_TOLERANCE_SIGMAS,
                    name: Optional[str] = "martingale_test",
                    verdict_on_fail: Optional[str] = VERDICT_FAIL,
                    **kwargs) -> McReport:
    """
    Constant expectation test of a process sampled at fixed times

    For every pair of times s < t the mean of X_t - X_s over the paths
    must be within `tolerance_sigmas` standard errors of 0. Standard errors
    are floored at ROUNDOFF_ULPS machine epsilons of the largest mean, so a
    process constant up to rounding passes. The report carries the
    differences of the worst pair.

    Args:
        values: array of shape (paths, times)
        times: the sampling times
        tolerance_sigmas: accepted number of standard errors
        name: name of the report
        verdict_on_fail: verdict when a pair is rejected, "fail" or "informational"
        **kwargs: other McReport attributes (kind, seed, exclusions, n_paths, details)

    Returns:
        the McReport

    Raises:
        pyenlarge.exceptions.EnlargeContractException: fewer than 2 times or a shape mismatch
    """
    # init
    arr = np.asarray(values, dtype=float)
    times = list(times)
    if (len(times) < 2):
        raise EnlargeContractException("The martingale test needs at least two times, got %d" % (len(times)))
    if (arr.ndim != 2 or arr.shape[1] != len(times)):
        raise EnlargeContractException("Expected values of shape (paths, %d), got %s" % (len(times), arr.shape))
    n = arr.shape[0]
    if (n < MIN_TEST_PATHS):
        warnings.warn("Martingale test on %d paths, below the %d recommended" % (n, MIN_TEST_PATHS), stacklevel=2)

    # worst pair of times, with standard errors floored at the rounding of the means
    means = arr.mean(axis=0) if n > 0 else np.zeros(len(times))
    floor = ROUNDOFF_ULPS * np.finfo(float).eps * float(np.max(np.abs(means))) if n > 0 else 0.0
    worst = (0, 1, -1.0)
    for i in range(0, len(times)):
        for j in range(i + 1, len(times)):
            diff = arr[:, j] - arr[:, i]
            mean = float(diff.mean()) if n > 0 else 0.0
            se = float(diff.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
            scale = max(se, floor)
            if (scale > 0):
                score = abs(mean) / scale
            else:
                score = 0.0 if mean == 0 else float("inf")
            if (score > worst[2]):
                worst = (i, j, score)
    i, j, score = worst
    verdict = VERDICT_PASS if (n > 0 and score <= tolerance_sigmas) else verdict_on_fail

    # return
    details = dict(kwargs.pop("details", {}))
    details.update({
        "times": [float(t) for t in times],
        "means": [float(m) for m in means] if n > 0 else [],
        "worst_pair": [float(times[i]), float(times[j])],
        "worst_sigmas": score,
        "tolerance_sigmas": tolerance_sigmas,
        "se_floor": floor,
    })
    return McReport.from_values(name, arr[:, j] - arr[:, i], verdict, details=details, **kwargs)


def __relative_decay(runs: List[DeflatorRun]) -> float:
    # 1 - E[deflated at the last time] / E[deflated at the first time]
    if (len(runs) == 0):
        return float("nan")
    first = float(np.mean([r.deflated[0] for r in runs]))
    last = float(np.mean([r.deflated[-1] for r in runs]))
    return 1.0 - last / first if first != 0 else float("nan")


def verify_deflator(spec: RandomTimeSpec,
                    model: MarketModel,
                    paths: Sequence[SamplePath],
                    when: Optional[str] = WHEN_BEFORE,
                    times: Optional[Sequence[float]] = None,
                    tolerance_sigmas: Optional[float] = DEFAULT_TOLERANCE_SIGMAS,
                    threads: Optional[int] = 1,
                    bundle_options: Optional[Dict[str, Any]] = None,
                    seed: Optional[int] = None,
                    verdict_on_fail: Optional[str] = VERDICT_FAIL,
                    verbose: Optional[bool] = False) -> Tuple[McReport, List[DeflatorRun]]:
    """
    Build the deflator on every path and test the deflated price for
    constant expectation

    The undeflated process is tested too, its verdict is only recorded in
    the details: an honest time admitting arbitrage makes S^tau a strict
    local martingale whose mean may decay.

    Args:
        spec: the RandomTimeSpec
        model: the MarketModel
        paths: the ensemble of SamplePath objects
        when: "before" or "after" tau
        times: evaluation times, defaults to `evaluation_times(paths)`
        tolerance_sigmas: accepted number of standard errors
        threads: number of worker threads
        bundle_options: keyword arguments of `pyenlarge.azema.azema_bundle`
        seed: base seed of the ensemble, recorded in the report
        verdict_on_fail: verdict when the constant expectation is rejected,
            "informational" for deflated processes known to be strict local
            martingales
        verbose: output progress messages, defaults to False

    Returns:
        tuple of the McReport and the DeflatorRun of every path

    Raises:
        pyenlarge.exceptions.EnlargeContractException: no deflator for this time and side of tau
        pyenlarge.exceptions.EnlargeInvariantException: a jump factor is not positive
    """
    # init
    if (when not in [WHEN_BEFORE, WHEN_AFTER]):
        raise EnlargeContractException("Unknown side of tau '%s'" % (when))
    for path in paths:
        if (path.model != model):
            raise EnlargeContractException("Path %d was generated from %s, not from %s" % (path.index, path.model, model))
    times = evaluation_times(paths) if times is None else np.asarray(times, dtype=float)
    options = dict(bundle_options or {})
    fn = deflator_before if when == WHEN_BEFORE else deflator_after

    # per path deflators
    if (verbose is True):
        print("[%s] Building the deflator %s tau of %s over %d paths" % (datetime.datetime.now(), when, spec.label, len(paths)))
    runs = map_ordered(lambda path: fn(spec, model, path, times=times, bundle_options=options), list(paths), threads=threads)
    used = [r for r in runs if r.excluded is None]
    exclusions = dict(Counter([r.excluded for r in runs if r.excluded is not None]))
    if (verbose is True):
        print("[%s] Testing %d deflated paths" % (datetime.datetime.now(), len(used)))

    # undeflated process, informational
    shape = (len(used), len(times))
    undeflated = martingale_test(np.asarray([r.undeflated for r in used]).reshape(shape),
                                 times,
                                 tolerance_sigmas=tolerance_sigmas,
                                 name="undeflated",
                                 verdict_on_fail=VERDICT_INFORMATIONAL)

    # deflated process
    positive = all([r.positive() for r in used])
    factors = [r.min_jump_factor for r in used if len(r.jump_factors) > 0]
    report = martingale_test(np.asarray([r.deflated for r in used]).reshape(shape),
                             times,
                             tolerance_sigmas=tolerance_sigmas,
                             name="deflator_%s_tau" % (when),
                             verdict_on_fail=verdict_on_fail,
                             n_paths=len(paths),
                             exclusions=exclusions,
                             kind=spec.kind,
                             seed=seed,
                             details={
                                 "when": when,
                                 "positive": positive,
                                 "min_l": float(min([r.min_l for r in used])) if len(used) > 0 else float("nan"),
                                 "min_jump_factor": float(min(factors)) if len(factors) > 0 else float("nan"),
                                 "n_jump_factors": int(sum([len(r.jump_factors) for r in used])),
                                 "undeflated_worst_sigmas": undeflated.details["worst_sigmas"],
                                 "undeflated_verdict": undeflated.verdict,
                                 "relative_decay": __relative_decay(used),
                             })
    if (positive is False and report.verdict == VERDICT_PASS):
        report = report.copy(update={"verdict": VERDICT_FAIL})
    return (report, runs)


def write_deflator_csv(runs: List[DeflatorRun], filename: str) -> None:
    """
    Write the deflators of several paths to one long format CSV file

    Args:
        runs: the DeflatorRun objects, one per path
        filename: output filename
    """
    with open(filename, "w", newline="") as fp:
        writer = csv.writer(fp)
        writer.writerow(DEFLATOR_CSV_HEADER)
        for run in runs:
            if (run.excluded is None):
                writer.writerows(run.csv_rows())
