"""
Functions for verifying the arbitrage and honesty claims over ensembles of paths
"""

import datetime
import math
import numpy as np
from collections import Counter
from typing import Any, Callable, Dict, List, Optional, Sequence
from . import (VARIANT_DERIVED,
               VARIANT_PRINTED,
               WHEN_BEFORE,
               WHEN_AFTER,
               RECIPE_THEOREM,
               RECIPE_BUY_AND_HOLD,
               RECIPE_SHORT_AFTER,
               RECIPE_WINDOW,
               RECIPE_EMERY_ENTRY,
               DEFAULT_TOLERANCE,
               DEFAULT_BROWNIAN_TOL_C,
               ESTIMATED_TOL_SIGMAS,
               JUMP_IDENTITY_ULPS,
               BROWNIAN_VIOLATION_LIMIT,
               BETA_FD_TOLERANCE)
from .strategies import phi_of, constant_phi, tolerance_for, run_strategy
from .classes.beta_process import BetaProcess
from ..azema import FORM_ANALYTIC
from ..azema.azema import azema_bundle
from ..market.classes.market_model import MarketModel
from ..market.classes.sample_path import SamplePath
from ..random_times import (KIND_BROWNIAN_MATURITY,
                            KIND_BROWNIAN_SUP_OVERALL,
                            KIND_POISSON_LEVEL,
                            KIND_POISSON_SUP_UNIT,
                            KIND_POISSON_SUP_OVERALL,
                            KIND_EMERY,
                            KIND_CONVEX_COMBO,
                            KIND_MIN_SCALED,
                            KIND_MAX_SCALED)
from ..random_times.random_times import realize, exit_time_nu, nu_is_ambiguous, poisson_level_exit_time
from ..random_times.classes.random_time_spec import RandomTimeSpec
from ..report import (McReport,
                      proportion_interval,
                      VERDICT_PASS,
                      VERDICT_FAIL,
                      VERDICT_INFORMATIONAL,
                      EXCLUDED_TAU_UNDETECTED,
                      EXCLUDED_NU_UNDETECTED,
                      EXCLUDED_AMBIGUOUS_THRESHOLD,
                      EXCLUDED_WINDOW_NOT_REALIZED)
from .._internal.util import map_ordered
from ..exceptions import EnlargeContractException, EnlargeParameterException

# pdoc init
__pdoc__: Dict = {}

# grid times at which P(tau > t | F_t) is compared with the Emery Z
EMERY_CHECK_TIMES = [0.25, 0.5, 0.75]

# bins of S_t/S*_t the paths are split into at every Emery check time
EMERY_BINS = 2

# number of grid points per path used by the finite difference check of beta
BETA_FD_SAMPLES = 64

# half width of the finite difference of Z in W
BETA_FD_STEP = 1e-5

# non-honest kinds built on the first two jump times
TWO_JUMP_KINDS = [KIND_CONVEX_COMBO, KIND_MIN_SCALED, KIND_MAX_SCALED]


def __check_ensemble(spec: RandomTimeSpec, model: MarketModel, paths: Sequence[SamplePath]) -> None:
    spec.check_model(model)
    for path in paths:
        if (path.model != model):
            raise EnlargeContractException("Path %d was generated from %s, not from %s" % (path.index, path.model, model))


def __run_paths(fn: Callable[[SamplePath], Dict],
                paths: Sequence[SamplePath],
                threads: Optional[int],
                name: str,
                verbose: Optional[bool]) -> List[Dict]:
    if (verbose is True):
        print("[%s] Running %s over %d paths" % (datetime.datetime.now(), name, len(paths)))
    results = map_ordered(fn, list(paths), threads=threads)
    if (verbose is True):
        print("[%s] Finished %s" % (datetime.datetime.now(), name))
    return results


def __split(results: List[Dict]) -> tuple:
    used = [r for r in results if "excluded" not in r]
    exclusions = dict(Counter([r["excluded"] for r in results if "excluded" in r]))
    return (used, exclusions)


def __violation_limit(model: MarketModel, n_used: int) -> float:
    # Brownian checks hold up to the discretization, Poisson checks are exact
    if (model.is_brownian):
        return BROWNIAN_VIOLATION_LIMIT * n_used
    return 0.0


def __max_or_nan(values: List[float]) -> float:
    return float(max(values)) if len(values) > 0 else float("nan")


def __mean_or_nan(values: List[float]) -> float:
    return float(np.mean(values)) if len(values) > 0 else float("nan")


def __default_recipe(spec: RandomTimeSpec, when: str) -> str:
    if (spec.kind == KIND_EMERY):
        return RECIPE_BUY_AND_HOLD if when == WHEN_BEFORE else RECIPE_EMERY_ENTRY
    if (when == WHEN_AFTER and spec.kind in TWO_JUMP_KINDS):
        return RECIPE_WINDOW
    return RECIPE_THEOREM


def __buy_and_hold_claimed(spec: RandomTimeSpec, model: MarketModel) -> bool:
    # kinds whose supremum at tau makes S_tau - S_0 a pathwise gain
    if (spec.kind == KIND_BROWNIAN_SUP_OVERALL):
        return True
    return spec.kind in [KIND_POISSON_SUP_UNIT, KIND_POISSON_SUP_OVERALL] and model.psi > 0


def __before_path(spec: RandomTimeSpec,
                  model: MarketModel,
                  path: SamplePath,
                  variant: str,
                  recipe: str,
                  tol_c: float,
                  tolerance: Optional[float],
                  bundle_options: Dict) -> Dict:
    realized = realize(spec, path)
    if (realized.finite is False):
        return {"excluded": EXCLUDED_TAU_UNDETECTED}
    bundle = azema_bundle(spec, path, **bundle_options)
    tau = realized.tau
    tol = tolerance_for(bundle, tau, tol_c=tol_c, tolerance=tolerance)

    # run
    if (recipe == RECIPE_BUY_AND_HOLD):
        run = run_strategy(constant_phi(model, 1.0, "buy and hold"), bundle, WHEN_BEFORE, recipe, 0.0, tau,
                           admissibility_bound=model.s0, tolerance=tol)
        target = path.value_at(tau) - model.s0
        m_tau = float("nan")
    else:
        run = run_strategy(phi_of(spec, model, variant), bundle, WHEN_BEFORE, recipe, 0.0, tau, tolerance=tol)
        m_tau = bundle.m_at(tau)
        target = m_tau - 1.0

    # return
    return {
        "v": run.final_wealth,
        "min_wealth": run.min_wealth,
        "nonneg": run.nonneg_at_end(),
        "positive": run.strictly_positive(),
        "admissible": run.admissible(),
        "residual": abs(run.final_wealth - target),
        "exact": model.is_poisson and bundle.form == FORM_ANALYTIC,
        "m_tau": m_tau,
        "tol": tol,
    }


def verify_before_tau(spec: RandomTimeSpec,
                      model: MarketModel,
                      paths: Sequence[SamplePath],
                      variant: Optional[str] = VARIANT_DERIVED,
                      recipe: Optional[str] = None,
                      tolerance: Optional[float] = None,
                      tol_c: Optional[float] = DEFAULT_BROWNIAN_TOL_C,
                      threads: Optional[int] = 1,
                      bundle_options: Optional[Dict[str, Any]] = None,
                      seed: Optional[int] = None,
                      verbose: Optional[bool] = False) -> McReport:
    """
    Verify the arbitrage before tau over an ensemble of paths

    The strategy phi of m = 1 + phi . S is held on ]0, tau] and its wealth
    integrated along every path. Each path is checked for V_tau >= -tol and
    V >= -1 - tol throughout, the ensemble for P(V_tau > tol) > 0 with a 95%
    interval. The residual |1 + V_tau - m_tau| is reported, and asserted for
    exact Poisson closed forms.

    The "buy_and_hold" recipe holds one share to tau instead, V_tau = S_tau - S_0.
    For the Emery time it passes when the mean wealth is within three
    standard errors of 0. The minimum and maximum of scaled jump times do
    not satisfy m_tau >= 1 on every path and get an informational verdict.

    Args:
        spec: the RandomTimeSpec
        model: the MarketModel
        paths: the ensemble of SamplePath objects
        variant: strategy variant, "derived" or "printed"
        recipe: "theorem" or "buy_and_hold", defaults to buy and hold for
            the Emery time and to the theorem strategy otherwise
        tolerance: explicit tolerance, defaults to the tolerance policy
        tol_c: constant c of the Brownian tolerance c sigma sqrt(dt)
        threads: number of worker threads
        bundle_options: keyword arguments of `pyenlarge.azema.azema_bundle`
        seed: base seed of the ensemble, recorded in the report
        verbose: output progress messages, defaults to False

    Returns:
        the McReport of V_tau

    Raises:
        pyenlarge.exceptions.EnlargeContractException: inconsistent spec, model and paths, or unknown recipe
    """
    # init
    __check_ensemble(spec, model, paths)
    if (recipe is None):
        recipe = __default_recipe(spec, WHEN_BEFORE)
    if (recipe not in [RECIPE_THEOREM, RECIPE_BUY_AND_HOLD]):
        raise EnlargeContractException("Recipe '%s' does not apply before tau" % (recipe))
    options = dict(bundle_options or {})

    # per path runs
    results = __run_paths(lambda path: __before_path(spec, model, path, variant, recipe, tol_c, tolerance, options),
                          paths,
                          threads,
                          "before tau verification of %s" % (spec.label),
                          verbose)
    used, exclusions = __split(results)
    n_used = len(used)
    values = [r["v"] for r in used]
    violations = sum([1 for r in used if r["nonneg"] is False])
    inadmissible = sum([1 for r in used if r["admissible"] is False])
    residual_violations = sum([1 for r in used if r["exact"] and r["residual"] > r["tol"]])
    p, lo, hi = proportion_interval(sum([1 for r in used if r["positive"]]), n_used)

    # verdict
    limit = __violation_limit(model, n_used)
    if (n_used == 0):
        verdict = VERDICT_FAIL
    elif (recipe == RECIPE_BUY_AND_HOLD and spec.kind == KIND_EMERY):
        mean = float(np.mean(values))
        se = float(np.std(values, ddof=1) / math.sqrt(n_used)) if n_used > 1 else 0.0
        verdict = VERDICT_PASS if abs(mean) <= ESTIMATED_TOL_SIGMAS * se else VERDICT_FAIL
    elif (recipe == RECIPE_BUY_AND_HOLD and not __buy_and_hold_claimed(spec, model)):
        verdict = VERDICT_INFORMATIONAL
    elif (recipe == RECIPE_THEOREM and spec.kind in [KIND_EMERY, KIND_MIN_SCALED, KIND_MAX_SCALED]):
        verdict = VERDICT_INFORMATIONAL
    elif (violations <= limit and inadmissible <= limit and residual_violations == 0 and lo > 0):
        verdict = VERDICT_PASS
    else:
        verdict = VERDICT_FAIL

    # return
    return McReport.from_values("before_tau_arbitrage",
                                values,
                                verdict,
                                n_paths=len(paths),
                                exclusions=exclusions,
                                kind=spec.kind,
                                seed=seed,
                                details={
                                    "recipe": recipe,
                                    "variant": variant,
                                    "frac_positive": p,
                                    "frac_positive_ci": [lo, hi],
                                    "min_wealth": float(min([r["min_wealth"] for r in used])) if n_used > 0 else float("nan"),
                                    "violations": violations,
                                    "inadmissible": inadmissible,
                                    "residual_violations": residual_violations,
                                    "max_abs_residual": __max_or_nan([r["residual"] for r in used]),
                                    "mean_abs_residual": __mean_or_nan([r["residual"] for r in used]),
                                    "mean_m_tau": __mean_or_nan([r["m_tau"] for r in used]),
                                    "frac_m_tau_below_one": __mean_or_nan([float(r["m_tau"] < 1.0) for r in used]),
                                    "max_tolerance": __max_or_nan([r["tol"] for r in used]),
                                })


def __theorem_after_path(spec: RandomTimeSpec,
                         model: MarketModel,
                         path: SamplePath,
                         variant: str,
                         tol_c: float,
                         tolerance: Optional[float],
                         bundle_options: Dict) -> Dict:
    realized = realize(spec, path)
    if (realized.finite is False):
        return {"excluded": EXCLUDED_TAU_UNDETECTED}
    bundle = azema_bundle(spec, path, **bundle_options)
    tau = realized.tau
    nu = exit_time_nu(spec, path, realized, bundle)
    if (not math.isfinite(nu)):
        return {"excluded": EXCLUDED_NU_UNDETECTED}
    if (nu_is_ambiguous(spec, path, realized, bundle, nu)):
        return {"excluded": EXCLUDED_AMBIGUOUS_THRESHOLD}
    tol = max(tolerance_for(bundle, tau, tol_c=tol_c, tolerance=tolerance),
              tolerance_for(bundle, nu, tol_c=tol_c, tolerance=tolerance))

    # short phi on ]tau, nu]
    run = run_strategy(phi_of(spec, model, variant), bundle, WHEN_AFTER, RECIPE_THEOREM, tau, nu,
                       direction=-1.0, tolerance=tol)
    m_tau = bundle.m_at(tau)
    m_nu = bundle.m_at(nu)
    jump = bundle.a_opt_at(tau) - bundle.a_opt_left_at(tau)
    result = {
        "v": run.final_wealth,
        "min_wealth": run.min_wealth,
        "nonneg": run.nonneg_at_end(),
        "positive": run.strictly_positive(),
        "admissible": run.admissible(),
        "residual": abs(run.final_wealth - (m_tau - m_nu)),
        "bound_ok": m_nu - m_tau <= (jump - 1.0) / 2.0 + tol,
        "exact": model.is_poisson and bundle.form == FORM_ANALYTIC,
        "tol": tol,
        "duration": nu - tau,
    }
    if (spec.kind == KIND_POISSON_LEVEL):
        result["nu_gap"] = abs(nu - poisson_level_exit_time(spec, path, realized))
    return result


def __window_after_path(spec: RandomTimeSpec, model: MarketModel, path: SamplePath, bundle_options: Dict) -> Dict:
    realized = realize(spec, path)
    if (realized.finite is False):
        return {"excluded": EXCLUDED_TAU_UNDETECTED}
    tau = realized.tau
    t1 = realized.auxiliary["T1"]
    t2 = realized.auxiliary["T2"]

    # window known at tau, in which S moves deterministically
    if (spec.kind == KIND_CONVEX_COMBO):
        end = tau + (t2 - tau) / 2.0
        known = True
    elif (spec.kind == KIND_MIN_SCALED):
        end = (tau + tau / spec.a) / 2.0
        known = t1 <= spec.a * t2
    else:
        end = (tau + tau / spec.a) / 2.0
        known = t1 < spec.a * t2
    if (known is False or end > path.horizon or path.n_at(end) != path.n_at(tau)):
        return {"excluded": EXCLUDED_WINDOW_NOT_REALIZED}

    # short when S decreases between jumps, long when it increases
    direction = -1.0 if model.psi > 0 else 1.0
    bundle = azema_bundle(spec, path, **bundle_options)
    run = run_strategy(constant_phi(model, 1.0, "one share"), bundle, WHEN_AFTER, RECIPE_WINDOW, tau, end,
                       direction=direction, admissibility_bound=model.s0, tolerance=DEFAULT_TOLERANCE)
    exact = direction * (path.value_at(end) - path.value_at(tau))
    return {
        "v": run.final_wealth,
        "min_wealth": run.min_wealth,
        "nonneg": run.nonneg_at_end(),
        "positive": run.strictly_positive(),
        "admissible": run.admissible(),
        "residual": abs(run.final_wealth - exact),
        "exact": True,
        "tol": DEFAULT_TOLERANCE,
        "duration": end - tau,
    }


def __emery_entry_path(spec: RandomTimeSpec,
                       model: MarketModel,
                       path: SamplePath,
                       tol_c: float,
                       tolerance: Optional[float],
                       bundle_options: Dict) -> Dict:
    realized = realize(spec, path)
    tau = realized.tau
    if (tau >= 1.0):
        return {"excluded": EXCLUDED_WINDOW_NOT_REALIZED}
    bundle = azema_bundle(spec, path, **bundle_options)
    tol = tolerance_for(bundle, tol_c=tol_c, tolerance=tolerance)

    # bought at S_1/2, the price at tau, and held to 1
    entry = float(path.s[path.index_of(1.0)]) / 2.0
    run = run_strategy(constant_phi(model, 1.0, "one share"), bundle, WHEN_AFTER, RECIPE_EMERY_ENTRY, tau, 1.0,
                       admissibility_bound=None, tolerance=tol)
    gains = (path.value_at(tau) - entry) + run.wealth[1:]
    return {
        "v": float(gains[-1]),
        "min_wealth": float(np.min(gains)),
        "nonneg": bool(np.min(gains) >= -tol),
        "positive": bool(np.min(gains) > 0),
        "admissible": True,
        "residual": 0.0,
        "exact": False,
        "tol": tol,
        "duration": 1.0 - tau,
    }


def __short_after_path(spec: RandomTimeSpec,
                       model: MarketModel,
                       path: SamplePath,
                       tol_c: float,
                       tolerance: Optional[float],
                       bundle_options: Dict) -> Dict:
    realized = realize(spec, path)
    if (realized.finite is False):
        return {"excluded": EXCLUDED_TAU_UNDETECTED}
    bundle = azema_bundle(spec, path, **bundle_options)
    tol = tolerance_for(bundle, realized.tau, tol_c=tol_c, tolerance=tolerance)

    # short one share from tau to the end of the path, V_t = S_tau - S_t
    run = run_strategy(constant_phi(model, -1.0, "short one share"), bundle, WHEN_AFTER, RECIPE_SHORT_AFTER,
                       realized.tau, path.horizon, admissibility_bound=None, tolerance=tol)
    return {
        "v": run.final_wealth,
        "min_wealth": run.min_wealth,
        "nonneg": run.min_wealth >= -tol,
        "positive": run.strictly_positive(),
        "admissible": True,
        "residual": abs(run.final_wealth - (path.value_at(realized.tau) - path.value_at(path.horizon))),
        "exact": model.is_poisson,
        "tol": tol,
        "duration": path.horizon - realized.tau,
    }


def verify_after_tau(spec: RandomTimeSpec,
                     model: MarketModel,
                     paths: Sequence[SamplePath],
                     variant: Optional[str] = VARIANT_DERIVED,
                     recipe: Optional[str] = None,
                     tolerance: Optional[float] = None,
                     tol_c: Optional[float] = DEFAULT_BROWNIAN_TOL_C,
                     threads: Optional[int] = 1,
                     bundle_options: Optional[Dict[str, Any]] = None,
                     seed: Optional[int] = None,
                     verbose: Optional[bool] = False) -> McReport:
    """
    Verify the arbitrage after tau over an ensemble of paths

    Honest times use the "theorem" recipe: -phi is held on ]tau, nu] with
    nu = inf{t > tau : Z~_t <= (1 - dA°_tau)/2}. Each path is checked for
    V_nu >= -tol, V_nu = m_tau - m_nu and m_nu - m_tau <= (dA°_tau - 1)/2.
    Paths where tau or nu is not found, or where nu sits within one
    standard error of the threshold of an estimated Z~, are excluded.

    The times built on T1 and T2 use the "window" recipe: one share is
    sold short (psi > 0) or bought (psi < 0) at tau and the position is
    closed in a window known at tau to be free of jumps. Paths without
    such a window are excluded. The Emery time uses the "emery_entry"
    recipe, one share bought at S_1/2 at tau and held to 1. The
    "short_after" recipe sells one share short at tau until the end of
    the path.

    Args:
        spec: the RandomTimeSpec
        model: the MarketModel
        paths: the ensemble of SamplePath objects
        variant: strategy variant of the theorem recipe
        recipe: one of the RECIPE_* constants, defaults per kind
        tolerance: explicit tolerance, defaults to the tolerance policy
        tol_c: constant c of the Brownian tolerance c sigma sqrt(dt)
        threads: number of worker threads
        bundle_options: keyword arguments of `pyenlarge.azema.azema_bundle`
        seed: base seed of the ensemble, recorded in the report
        verbose: output progress messages, defaults to False

    Returns:
        the McReport of the final wealth

    Raises:
        pyenlarge.exceptions.EnlargeContractException: recipe not available for the kind
    """
    # init
    __check_ensemble(spec, model, paths)
    if (recipe is None):
        recipe = __default_recipe(spec, WHEN_AFTER)
    options = dict(bundle_options or {})
    if (recipe == RECIPE_THEOREM):
        if (spec.honest is False):
            raise EnlargeContractException("The exit time strategy needs an honest time, got '%s'" % (spec.kind))
        fn = lambda path: __theorem_after_path(spec, model, path, variant, tol_c, tolerance, options)  # noqa: E731
    elif (recipe == RECIPE_WINDOW):
        if (spec.kind not in TWO_JUMP_KINDS):
            raise EnlargeContractException("The window recipe applies to times built on T1 and T2")
        fn = lambda path: __window_after_path(spec, model, path, options)  # noqa: E731
    elif (recipe == RECIPE_EMERY_ENTRY):
        if (spec.kind != KIND_EMERY):
            raise EnlargeContractException("The Emery entry recipe applies to the Emery time only")
        fn = lambda path: __emery_entry_path(spec, model, path, tol_c, tolerance, options)  # noqa: E731
    elif (recipe == RECIPE_SHORT_AFTER):
        fn = lambda path: __short_after_path(spec, model, path, tol_c, tolerance, options)  # noqa: E731
    else:
        raise EnlargeContractException("Recipe '%s' does not apply after tau" % (recipe))

    # per path runs
    results = __run_paths(fn, paths, threads, "after tau verification of %s" % (spec.label), verbose)
    used, exclusions = __split(results)
    n_used = len(used)
    values = [r["v"] for r in used]
    violations = sum([1 for r in used if r["nonneg"] is False])
    inadmissible = sum([1 for r in used if r["admissible"] is False])
    bound_violations = sum([1 for r in used if r.get("bound_ok", True) is False])
    residual_violations = sum([1 for r in used if r["exact"] and r["residual"] > r["tol"]])
    p, lo, hi = proportion_interval(sum([1 for r in used if r["positive"]]), n_used)

    # verdict
    limit = __violation_limit(model, n_used)
    if (n_used == 0):
        verdict = VERDICT_FAIL
    elif (recipe == RECIPE_SHORT_AFTER and not spec.is_sup_time):
        verdict = VERDICT_INFORMATIONAL
    elif (violations <= limit and inadmissible <= limit and bound_violations <= limit and residual_violations == 0
          and lo > 0):
        verdict = VERDICT_PASS
    else:
        verdict = VERDICT_FAIL

    # details
    details = {
        "recipe": recipe,
        "variant": variant,
        "frac_positive": p,
        "frac_positive_ci": [lo, hi],
        "min_wealth": float(min([r["min_wealth"] for r in used])) if n_used > 0 else float("nan"),
        "violations": violations,
        "inadmissible": inadmissible,
        "bound_violations": bound_violations,
        "residual_violations": residual_violations,
        "max_abs_residual": __max_or_nan([r["residual"] for r in used]),
        "mean_abs_residual": __mean_or_nan([r["residual"] for r in used]),
        "mean_duration": __mean_or_nan([r["duration"] for r in used]),
        "max_tolerance": __max_or_nan([r["tol"] for r in used]),
    }
    if (spec.kind == KIND_POISSON_LEVEL and recipe == RECIPE_THEOREM):
        details["max_nu_gap"] = __max_or_nan([r["nu_gap"] for r in used])

    # return
    return McReport.from_values("after_tau_arbitrage",
                                values,
                                verdict,
                                n_paths=len(paths),
                                exclusions=exclusions,
                                kind=spec.kind,
                                seed=seed,
                                details=details)


def __jump_identity_path(spec: RandomTimeSpec, model: MarketModel, path: SamplePath, bundle_options: Dict) -> Dict:
    bundle = azema_bundle(spec, path, **bundle_options)
    worst = {}
    for variant in [VARIANT_DERIVED, VARIANT_PRINTED]:
        phi = phi_of(spec, model, variant)
        gaps = [0.0]
        for t in path.jump_times:
            t = float(t)
            m_right = bundle.m_at(t)
            m_left = bundle.m_left_at(t)
            ds = path.value_at(t) - path.left_value_at(t)
            gap = abs((m_right - m_left) - phi.at(bundle, t) * ds)
            gaps.append(gap / np.spacing(max(abs(m_right), abs(m_left), 1.0)))
        worst[variant] = float(max(gaps))
    return {"worst": worst, "n_jumps": len(path.jump_times)}


def __beta_path(spec: RandomTimeSpec, model: MarketModel, path: SamplePath, bundle_options: Dict) -> Dict:
    bundle = azema_bundle(spec, path, **bundle_options)
    beta = BetaProcess(bundle)
    series = {variant: beta.beta_series(variant) for variant in [VARIANT_DERIVED, VARIANT_PRINTED]}
    v = bundle.v_series()
    k = bundle.maturity_index
    samples = np.unique(np.linspace(0, k - 1, min(k, BETA_FD_SAMPLES)).astype(int)) if k > 0 else []
    worst = {VARIANT_DERIVED: 0.0, VARIANT_PRINTED: 0.0}
    n_checked = 0
    for i in samples:
        # skip the kink of |V| and flat points
        if (abs(v[i]) < 10.0 * BETA_FD_STEP):
            continue
        fd = beta.finite_difference(int(i), h=BETA_FD_STEP)
        if (abs(fd) < 1e-8):
            continue
        n_checked += 1
        for variant in worst.keys():
            worst[variant] = max(worst[variant], abs(series[variant][i] - fd) / abs(fd))
    return {"worst": worst, "n_jumps": n_checked}


def verify_jump_identity(spec: RandomTimeSpec,
                         model: MarketModel,
                         paths: Sequence[SamplePath],
                         threads: Optional[int] = 1,
                         bundle_options: Optional[Dict[str, Any]] = None,
                         seed: Optional[int] = None,
                         verbose: Optional[bool] = False) -> McReport:
    """
    Verify dm = phi dS at every jump of every Poisson path, for both the
    derived and the printed strategy

    A jump passes when |dm - phi dS| is at most JUMP_IDENTITY_ULPS units in
    the last place of max(|m_T|, |m_T-|, 1). The report lists the
    variants that pass on every jump and passes when the derived one does.

    For the last passage before maturity, which has no jumps, beta is
    compared instead with a central finite difference of Z in W, within
    a relative BETA_FD_TOLERANCE.

    Args:
        spec: the RandomTimeSpec
        model: the MarketModel
        paths: the ensemble of SamplePath objects
        threads: number of worker threads
        bundle_options: keyword arguments of `pyenlarge.azema.azema_bundle`
        seed: base seed of the ensemble, recorded in the report
        verbose: output progress messages, defaults to False

    Returns:
        the McReport of the per path pass indicator of the derived variant

    Raises:
        pyenlarge.exceptions.EnlargeContractException: Brownian kind other than the last passage before maturity
    """
    # init
    __check_ensemble(spec, model, paths)
    options = dict(bundle_options or {})
    if (model.is_brownian):
        if (spec.kind != KIND_BROWNIAN_MATURITY):
            raise EnlargeContractException("No jump identity for the Brownian kind '%s'" % (spec.kind))
        limit = BETA_FD_TOLERANCE
        fn = lambda path: __beta_path(spec, model, path, options)  # noqa: E731
        unit = "relative_error"
    else:
        limit = float(JUMP_IDENTITY_ULPS)
        fn = lambda path: __jump_identity_path(spec, model, path, options)  # noqa: E731
        unit = "ulps"

    # per path checks
    results = __run_paths(fn, paths, threads, "jump identity check of %s" % (spec.label), verbose)
    worst = {}
    for variant in [VARIANT_DERIVED, VARIANT_PRINTED]:
        worst[variant] = __max_or_nan([r["worst"][variant] for r in results])
    satisfying = [variant for variant in [VARIANT_DERIVED, VARIANT_PRINTED] if worst[variant] <= limit]
    values = [float(r["worst"][VARIANT_DERIVED] <= limit) for r in results]
    verdict = VERDICT_PASS if VARIANT_DERIVED in satisfying else VERDICT_FAIL

    # return
    return McReport.from_values("jump_identity",
                                values,
                                verdict,
                                n_paths=len(paths),
                                kind=spec.kind,
                                seed=seed,
                                details={
                                    "unit": unit,
                                    "limit": limit,
                                    "worst_derived": worst[VARIANT_DERIVED],
                                    "worst_printed": worst[VARIANT_PRINTED],
                                    "satisfying_variants": satisfying,
                                    "n_checked": int(sum([r["n_jumps"] for r in results])),
                                })


def __honest_path(spec: RandomTimeSpec,
                  path: SamplePath,
                  tol_c: float,
                  tolerance: Optional[float],
                  bundle_options: Dict) -> Dict:
    realized = realize(spec, path)
    if (realized.finite is False):
        return {"excluded": EXCLUDED_TAU_UNDETECTED}
    bundle = azema_bundle(spec, path, **bundle_options)
    tau = realized.tau
    z_tilde = bundle.z_tilde_at(tau)
    tol = tolerance_for(bundle, tau, tol_c=tol_c, tolerance=tolerance)
    return {"v": z_tilde, "ok": abs(z_tilde - 1.0) <= tol, "tol": tol}


def __non_honest_path(spec: RandomTimeSpec, path: SamplePath, bundle_options: Dict) -> Dict:
    realized = realize(spec, path)
    if (realized.finite is False):
        return {"excluded": EXCLUDED_TAU_UNDETECTED}
    bundle = azema_bundle(spec, path, **bundle_options)
    tau = realized.tau
    z_tilde = bundle.z_tilde_at(tau)
    matches = abs(z_tilde - bundle.closed_form_z_tilde_tau()) <= DEFAULT_TOLERANCE
    result = {"v": z_tilde, "tol": DEFAULT_TOLERANCE, "first_branch": bundle.t1 <= spec.a * bundle.t2
              if spec.kind != KIND_CONVEX_COMBO else True}
    if (spec.kind == KIND_MAX_SCALED):
        # Z_tau < 1 on every path, Z~_tau = 1 on {T1 >= a T2}
        z = bundle.z_at(tau)
        matches = matches and abs(z - bundle.closed_form_z_tau()) <= DEFAULT_TOLERANCE
        result["ok"] = matches and z < 1.0
        result["z_tau"] = z
    else:
        result["ok"] = matches and z_tilde < 1.0
    return result


def __emery_path(spec: RandomTimeSpec, path: SamplePath, bundle_options: Dict) -> Dict:
    realized = realize(spec, path)
    bundle = azema_bundle(spec, path, **bundle_options)
    samples = [min(int(round(t / path.dt)), path.n_points - 1) for t in EMERY_CHECK_TIMES]
    return {
        "v": float(realized.empty_set),
        "alive": [float(realized.tau > path.grid[i]) for i in samples],
        "ratio": [float(path.s[i] / path.s_star[i]) for i in samples],
        "z": [float(bundle.z_series()[i]) for i in samples],
        "z_se": [float(bundle.grid_se()[i]) for i in samples],
        "z_tilde_tau": bundle.z_tilde_at(realized.tau),
        "phi_one": bundle.table.evaluate(1.0)[0],
    }


def conditional_frequencies(indicators: Sequence[float],
                            covariate: Sequence[float],
                            expected: float,
                            expected_se: Optional[float] = 0.0,
                            n_bins: Optional[int] = EMERY_BINS) -> List[Dict[str, float]]:
    """
    Frequency of an event within bins of a covariate, against a probability
    that should not depend on the covariate

    The paths are sorted by the covariate and split into `n_bins` bins of
    equal size. In every bin the frequency of the event is compared to
    `expected`, with the binomial standard error under that probability
    combined with the standard error of `expected` itself.

    Args:
        indicators: 0/1 indicator of the event on every path
        covariate: the conditioning quantity on every path
        expected: the probability of the event in every bin
        expected_se: standard error of `expected`
        n_bins: number of bins

    Returns:
        one dict per bin with keys n, frequency, se and sigmas

    Raises:
        pyenlarge.exceptions.EnlargeParameterException: mismatched lengths or fewer paths than bins
    """
    indicators = np.asarray(indicators, dtype=float)
    covariate = np.asarray(covariate, dtype=float)
    if (len(indicators) != len(covariate)):
        raise EnlargeParameterException("Got %d indicators for %d covariate values" % (len(indicators), len(covariate)))
    if (n_bins < 1 or len(indicators) < n_bins):
        raise EnlargeParameterException("Cannot split %d paths into %d bins" % (len(indicators), n_bins))
    bins = []
    for idx in np.array_split(np.argsort(covariate, kind="stable"), n_bins):
        n = len(idx)
        frequency = float(np.mean(indicators[idx]))
        se = math.sqrt(expected * (1.0 - expected) / n + expected_se**2)
        if (se > 0):
            sigmas = abs(frequency - expected) / se
        else:
            sigmas = 0.0 if frequency == expected else float("inf")
        bins.append({"n": n, "frequency": frequency, "se": se, "sigmas": sigmas})
    return bins


def verify_honest(spec: RandomTimeSpec,
                  model: MarketModel,
                  paths: Sequence[SamplePath],
                  tolerance: Optional[float] = None,
                  tol_c: Optional[float] = DEFAULT_BROWNIAN_TOL_C,
                  threads: Optional[int] = 1,
                  bundle_options: Optional[Dict[str, Any]] = None,
                  seed: Optional[int] = None,
                  verbose: Optional[bool] = False) -> McReport:
    """
    Verify the honesty certificate Z~_tau = 1, or its failure

    Honest times pass when |Z~_tau - 1| <= tol on every Poisson path, or
    on all but 1% of the Brownian paths. The times built on T1 and T2
    pass when Z~_tau equals its closed form on every path, with Z~_tau < 1
    (Z_tau < 1 for the maximum, whose Z~_tau is 1 on {T1 >= a T2}). The
    Emery time passes when P(tau > t | F_t) does not depend on the path:
    at every check time the paths are binned by S_t/S*_t and the frequency
    of {tau > t} in every bin must be within three standard errors of
    Z_t = 1 - Phi(1 - t). The rate of the empty set is reported against
    Phi(1).

    Args:
        spec: the RandomTimeSpec
        model: the MarketModel
        paths: the ensemble of SamplePath objects
        tolerance: explicit tolerance, defaults to the tolerance policy
        tol_c: constant c of the Brownian tolerance c sigma sqrt(dt)
        threads: number of worker threads
        bundle_options: keyword arguments of `pyenlarge.azema.azema_bundle`
        seed: base seed of the ensemble, recorded in the report
        verbose: output progress messages, defaults to False

    Returns:
        the McReport of Z~_tau (of the empty set indicator for the Emery time)

    Raises:
        pyenlarge.exceptions.EnlargeContractException: inconsistent spec, model and paths
        pyenlarge.exceptions.EnlargeParameterException: no paths for the Emery time
    """
    # init
    __check_ensemble(spec, model, paths)
    options = dict(bundle_options or {})
    label = "honesty check of %s" % (spec.label)

    # pseudo-stopping time
    if (spec.kind == KIND_EMERY):
        if (len(paths) == 0):
            raise EnlargeParameterException("The pseudo-stopping check needs at least one path")
        results = __run_paths(lambda path: __emery_path(spec, path, options), paths, threads, label, verbose)
        bins = []
        for j in range(0, len(EMERY_CHECK_TIMES)):
            bins.append(conditional_frequencies([r["alive"][j] for r in results],
                                                [r["ratio"][j] for r in results],
                                                results[0]["z"][j],
                                                expected_se=results[0]["z_se"][j],
                                                n_bins=min(EMERY_BINS, len(results))))
        worst = max([b["sigmas"] for at_time in bins for b in at_time])
        ok = worst <= ESTIMATED_TOL_SIGMAS
        return McReport.from_values("pseudo_stopping_z",
                                    [r["v"] for r in results],
                                    VERDICT_PASS if ok else VERDICT_FAIL,
                                    n_paths=len(paths),
                                    kind=spec.kind,
                                    seed=seed,
                                    details={
                                        "check_times": EMERY_CHECK_TIMES,
                                        "z": results[0]["z"],
                                        "z_se": results[0]["z_se"],
                                        "bins": bins,
                                        "worst_sigmas": worst,
                                        "empty_set_rate": __mean_or_nan([r["v"] for r in results]),
                                        "phi_one": results[0]["phi_one"] if len(results) > 0 else float("nan"),
                                        "mean_z_tilde_tau": __mean_or_nan([r["z_tilde_tau"] for r in results]),
                                    })

    # honest and non-honest times
    if (spec.honest):
        fn = lambda path: __honest_path(spec, path, tol_c, tolerance, options)  # noqa: E731
        name = "honest_z_tilde"
    else:
        fn = lambda path: __non_honest_path(spec, path, options)  # noqa: E731
        name = "non_honest_z_tilde"
    results = __run_paths(fn, paths, threads, label, verbose)
    used, exclusions = __split(results)
    n_used = len(used)
    violations = sum([1 for r in used if r["ok"] is False])
    if (spec.honest):
        limit = __violation_limit(model, n_used)
    else:
        limit = 0.0
    verdict = VERDICT_PASS if (n_used > 0 and violations <= limit) else VERDICT_FAIL

    # details
    details = {
        "violations": violations,
        "max_abs_deviation": __max_or_nan([abs(r["v"] - 1.0) for r in used]),
        "max_tolerance": __max_or_nan([r["tol"] for r in used]),
    }
    if (spec.honest is False):
        details["frac_z_tilde_below_one"] = __mean_or_nan([float(r["v"] < 1.0) for r in used])
        details["frac_first_branch"] = __mean_or_nan([float(r["first_branch"]) for r in used])
    if (spec.kind == KIND_MAX_SCALED):
        details["max_z_tau"] = __max_or_nan([r["z_tau"] for r in used])

    # return
    return McReport.from_values(name,
                                [r["v"] for r in used],
                                verdict,
                                n_paths=len(paths),
                                exclusions=exclusions,
                                kind=spec.kind,
                                seed=seed,
                                details=details)


def residual_slope(dts: Sequence[float], residuals: Sequence[float]) -> float:
    """
    Least squares slope of log(residual) against log(dt)

    Args:
        dts: grid steps
        residuals: mean absolute residuals at those steps

    Returns:
        the slope, 0.5 for a residual of order sqrt(dt)

    Raises:
        pyenlarge.exceptions.EnlargeParameterException: fewer than two points or non-positive values
    """
    x = np.asarray(dts, dtype=float)
    y = np.asarray(residuals, dtype=float)
    if (len(x) < 2 or len(x) != len(y)):
        raise EnlargeParameterException("The slope needs at least two (dt, residual) pairs")
    if (np.any(x <= 0) or np.any(y <= 0)):
        raise EnlargeParameterException("Grid steps and residuals must be positive")
    return float(np.polyfit(np.log(x), np.log(y), 1)[0])
