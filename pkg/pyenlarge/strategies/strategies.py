"""
Functions for building strategies and integrating their wealth along paths
"""

import math
import warnings
import numpy as np
from scipy import integrate
from typing import Callable, Dict, List, Optional, Tuple
from . import (VARIANT_DERIVED,
               VARIANT_PRINTED,
               DEFAULT_TOLERANCE,
               DEFAULT_BROWNIAN_TOL_C,
               ESTIMATED_TOL_SIGMAS,
               QUAD_TOLERANCE)
from .classes.phi_evaluator import PhiEvaluator
from .classes.beta_process import BetaProcess
from .classes.strategy_run import StrategyRun
from ..azema import FORM_ESTIMATED
from ..azema.classes.azema_bundle import AzemaBundle
from ..market.classes.market_model import MarketModel
from ..random_times import (KIND_BROWNIAN_LEVEL,
                            KIND_BROWNIAN_MATURITY,
                            KIND_BROWNIAN_SUP_OVERALL,
                            KIND_POISSON_LEVEL,
                            KIND_POISSON_SUP_UNIT,
                            KIND_POISSON_SUP_OVERALL,
                            KIND_EMERY,
                            KIND_CONVEX_COMBO,
                            KIND_MIN_SCALED,
                            KIND_MAX_SCALED)
from ..random_times.classes.random_time_spec import RandomTimeSpec
from ..special_functions import overall_sup_survival
from ..exceptions import EnlargeContractException, EnlargeNumericalException, EnlargeParameterException

# pdoc init
__pdoc__: Dict = {}

# quadrature error above which the drift integral is rejected
QUAD_FAILURE = 1e-6

# largest number of subintervals of the drift quadrature
QUAD_LIMIT = 200

# relative distance to the ends of a segment below which a breakpoint is dropped
SEGMENT_POINT_GAP = 1e-12


def __jump_size(bundle: AzemaBundle, t: float) -> float:
    # S_t - S_{t-} had N jumped at t, i.e. psi S_{t-} up to rounding
    s_left, s_right, _ = bundle.left_state(t)
    return s_right - s_left


def __derived_jump(bundle: AzemaBundle, t: float) -> float:
    return bundle.nu_hat_at(t) / __jump_size(bundle, t)


def __derived_grid(bundle: AzemaBundle) -> np.ndarray:
    return bundle.eta_series() / (bundle.model.sigma * bundle.path.s)


def __printed_poisson_level(bundle: AzemaBundle, t: float) -> float:
    y = bundle.path.y_left_at(t)
    a = bundle.level_a
    value = 0.0
    if (y >= a + 1.0):
        value += float(bundle.ruin(y - a - 1.0))
    if (y >= a):
        value -= float(bundle.ruin(y - a))
    if (y < a + 1.0):
        value += 1.0
    if (y < a):
        value -= 1.0
    return value / __jump_size(bundle, t)


def __printed_sup_unit(bundle: AzemaBundle, t: float) -> float:
    psi = bundle.model.psi
    s0 = bundle.model.s0
    s_left, s_right, star_left = bundle.left_state(t)
    if (t > 1.0):
        return 0.0
    if (t == 1.0):
        if (psi < 0):
            return 0.0
        # maturity term, events at t = 1
        return float(max(star_left, s_right) == s0) - float(max(star_left, s_left) == s0)
    remaining = 1.0 - t
    after = bundle.survival.evaluate(x=max(star_left / s_right, 1.0), t=remaining)[0]
    before = bundle.survival.evaluate(x=max(star_left / s_left, 1.0), t=remaining)[0]
    if (psi > 0):
        # displayed without the division by psi S_-
        record = bundle.at_most_one.evaluate(t=remaining)[0] if star_left < s_right else 0.0
        return after - before + record
    atom = 0.0
    if (s_left >= star_left):
        atom = psi * bundle.strict.evaluate(x=1.0 / (1.0 + psi), t=remaining)[0]
    return (atom + after - before) / __jump_size(bundle, t)


def __printed_sup_overall(bundle: AzemaBundle, t: float) -> float:
    model = bundle.model
    if (model.psi > 0):
        return __derived_jump(bundle, t)
    s_left, s_right, star_left = bundle.left_state(t)
    atom = model.psi * bundle.record_atom if s_left >= star_left else 0.0
    after = float(overall_sup_survival(model, max(star_left / s_right, 1.0)))
    before = float(overall_sup_survival(model, max(star_left / s_left, 1.0)))
    return (atom + after - before) / __jump_size(bundle, t)


def __printed_convex_combo(bundle: AzemaBundle, t: float) -> float:
    if (bundle.path.n_before(t) != 1):
        return 0.0
    spec = bundle.spec
    return -math.exp(-bundle.model.lam * (spec.k2 / spec.k1) * (t - bundle.t1)) / __jump_size(bundle, t)


def __printed_min_scaled(bundle: AzemaBundle, t: float) -> float:
    if (bundle.path.n_before(t) != 0):
        return 0.0
    return -bundle.g(t) / __jump_size(bundle, t)


def __printed_max_scaled(bundle: AzemaBundle, t: float) -> float:
    if (bundle.path.n_before(t) != 0):
        return 0.0
    return -bundle.k(t) / __jump_size(bundle, t)


def __printed_brownian_level(bundle: AzemaBundle) -> np.ndarray:
    return np.where(bundle.path.s < bundle.level, 1.0 / bundle.level, 0.0)


def __printed_brownian_maturity(bundle: AzemaBundle) -> np.ndarray:
    return BetaProcess(bundle).beta_series(VARIANT_PRINTED) / (bundle.model.sigma * bundle.path.s)


def __printed_brownian_sup(bundle: AzemaBundle) -> np.ndarray:
    return 1.0 / bundle.path.s_star_refined


def __zero_grid(bundle: AzemaBundle) -> np.ndarray:
    return np.zeros(bundle.path.n_points)


# displayed formulas, per kind
__PRINTED_JUMP = {
    KIND_POISSON_LEVEL: (__printed_poisson_level, "[Psi(Y- - a - 1) - Psi(Y- - a) + ...]/(psi S-)"),
    KIND_POISSON_SUP_UNIT: (__printed_sup_unit, "displayed supremum on [0, 1] strategy"),
    KIND_POISSON_SUP_OVERALL: (__printed_sup_overall, "displayed overall supremum strategy"),
    KIND_CONVEX_COMBO: (__printed_convex_combo, "-exp(-lam (k2/k1)(t - T1)) 1{N- = 1}/(psi S-)"),
    KIND_MIN_SCALED: (__printed_min_scaled, "-exp(-beta t)(beta t + 1) 1{N- = 0}/(psi S-)"),
    KIND_MAX_SCALED: (__printed_max_scaled, "-K(t) 1{N- = 0}/(psi S-)"),
}
__PRINTED_GRID = {
    KIND_BROWNIAN_LEVEL: (__printed_brownian_level, "1{S < a}/a"),
    KIND_BROWNIAN_MATURITY: (__printed_brownian_maturity, "beta/(sigma S)"),
    KIND_BROWNIAN_SUP_OVERALL: (__printed_brownian_sup, "1/S*"),
    KIND_EMERY: (__zero_grid, "0"),
}


def phi_of(spec: RandomTimeSpec, model: MarketModel, variant: Optional[str] = VARIANT_DERIVED) -> PhiEvaluator:
    """
    Strategy phi with m = 1 + phi . S for a random time

    The "derived" variant reads phi from the martingale itself: on Poisson
    paths phi_t = nu^_t/(psi S_{t-}), the jump of m divided by the jump
    of S had N jumped at t; on Brownian paths phi = eta/(sigma S) with
    eta the diffusion coefficient of m. The "printed" variant evaluates
    the displayed closed formula of the strategy, which differs from the
    derived one for the convex combination (exponent k2/k1), the
    supremum on [0, 1] with psi > 0 (no division by psi S_-) and the last
    passage before maturity (sign of the H_y term).

    Args:
        spec: the RandomTimeSpec
        model: the MarketModel
        variant: "derived" (default) or "printed"

    Returns:
        the PhiEvaluator, to be held on ]0, tau]

    Raises:
        pyenlarge.exceptions.EnlargeContractException: incompatible spec and model, or unknown variant
    """
    spec.check_model(model)
    if (variant not in [VARIANT_DERIVED, VARIANT_PRINTED]):
        raise EnlargeContractException("Unknown strategy variant '%s'" % (variant))

    # Brownian kinds are evaluated on the grid
    if (model.is_brownian):
        if (variant == VARIANT_DERIVED):
            return PhiEvaluator(spec, model, variant, "eta/(sigma S)", on_grid=__derived_grid)
        fn, description = __PRINTED_GRID[spec.kind]
        return PhiEvaluator(spec, model, variant, description, on_grid=fn)

    # Poisson kinds are evaluated pointwise from left limits
    if (variant == VARIANT_DERIVED):
        return PhiEvaluator(spec, model, variant, "nu^/(psi S-)", at=__derived_jump)
    fn, description = __PRINTED_JUMP[spec.kind]
    return PhiEvaluator(spec, model, variant, description, at=fn)


def constant_phi(model: MarketModel, value: Optional[float] = 1.0, description: Optional[str] = None) -> PhiEvaluator:
    """
    Constant position in the risky asset, as used by buy-and-hold and
    short selling recipes

    Args:
        model: the MarketModel
        value: number of shares held
        description: short description, defaults to "constant <value>"

    Returns:
        the PhiEvaluator
    """
    if (description is None):
        description = "constant %s" % (value)
    if (model.is_brownian):
        return PhiEvaluator(None, model, VARIANT_DERIVED, description,
                            on_grid=lambda bundle: np.full(bundle.path.n_points, float(value)))
    return PhiEvaluator(None, model, VARIANT_DERIVED, description, at=lambda bundle, t: float(value))


def tolerance_for(bundle: AzemaBundle,
                  t: Optional[float] = None,
                  tol_c: Optional[float] = DEFAULT_BROWNIAN_TOL_C,
                  tolerance: Optional[float] = None) -> float:
    """
    Numerical tolerance of the pathwise checks

    Analytic Poisson closed forms use DEFAULT_TOLERANCE. Estimated Poisson
    closed forms use three propagated standard errors of Z and A° at t.
    Brownian kinds use c sigma sqrt(dt), plus three standard errors of Z
    for estimated ones.

    Args:
        bundle: the AzemaBundle of the path
        t: time the tolerance applies at
        tol_c: constant c of the Brownian tolerance
        tolerance: explicit tolerance, returned as is when given

    Returns:
        the tolerance
    """
    if (tolerance is not None):
        return float(tolerance)
    estimated = bundle.form == FORM_ESTIMATED and t is not None and math.isfinite(t)
    if (bundle.model.is_brownian):
        tol = tol_c * bundle.model.sigma * math.sqrt(bundle.path.dt)
        if (estimated):
            tol += ESTIMATED_TOL_SIGMAS * bundle.z_se_at(t)
        return tol
    if (estimated):
        se = math.sqrt(bundle.z_se_at(t)**2 + bundle.a_opt_se_at(t)**2)
        return max(DEFAULT_TOLERANCE, ESTIMATED_TOL_SIGMAS * se)
    return DEFAULT_TOLERANCE


def segment_points(bundle: AzemaBundle, a: float, b: float) -> List[float]:
    """
    Times in ]a, b[ at which the closed forms of a Poisson bundle are not smooth:
    the maturity, the crossings of an integer by Y - a for the level kind, and
    the time a rising price (psi < 0) catches up with its running supremum for
    the supremum kinds
    """
    points = []
    maturity = bundle.spec.maturity
    if (maturity is not None):
        points.append(maturity)
    model = bundle.model
    path = bundle.path
    if (bundle.kind == KIND_POISSON_LEVEL):
        # Y - a crosses an integer
        y_start = path.y_at(a)
        k = math.floor(y_start - bundle.level_a) + 1
        while (True):
            s = a + (bundle.level_a + k - y_start) / model.mu
            if (s >= b):
                break
            points.append(s)
            k += 1
    elif (bundle.kind in [KIND_POISSON_SUP_UNIT, KIND_POISSON_SUP_OVERALL] and model.psi < 0):
        # S_s = S_a exp(-lam psi (s - a)) reaches S*_a
        s_start = path.value_at(a)
        s_star = path.sup_at(a)
        if (s_start < s_star):
            points.append(a + math.log(s_star / s_start) / (-model.lam * model.psi))

    # breakpoints on the ends only split off empty subintervals
    gap = SEGMENT_POINT_GAP * max(1.0, abs(a), abs(b))
    return sorted([s for s in points if a + gap < s < b - gap])


def segment_quad(fn: Callable[[float], float], bundle: AzemaBundle, a: float, b: float) -> float:
    """
    Integral of fn over a segment ]a, b[ of a Poisson path without jumps

    Args:
        fn: the integrand, smooth between the `segment_points`
        bundle: the AzemaBundle of the path
        a: left end of the segment
        b: right end of the segment

    Returns:
        the integral

    Raises:
        pyenlarge.exceptions.EnlargeNumericalException: the quadrature did not converge
    """
    path = bundle.path
    points = segment_points(bundle, a, b)
    result = integrate.quad(fn,
                            a,
                            b,
                            epsabs=QUAD_TOLERANCE,
                            epsrel=1e-12,
                            limit=QUAD_LIMIT,
                            points=points if len(points) > 0 else None,
                            full_output=1)
    value, error = (result[0], result[1])
    if (not math.isfinite(value) or error > QUAD_FAILURE):
        raise EnlargeNumericalException("Quadrature did not converge on ]%s, %s]" % (a, b),
                                        diagnostics={
                                            "segment": (a, b),
                                            "error": error,
                                            "message": result[3] if len(result) > 3 else None,
                                            "path_index": path.index,
                                        })
    if (error > QUAD_TOLERANCE):
        warnings.warn("Quadrature error %.3g above %.3g on ]%s, %s] of path %d" % (error, QUAD_TOLERANCE, a, b, path.index),
                      stacklevel=2)
    return value


def __drift_integral(phi: PhiEvaluator, bundle: AzemaBundle, a: float, b: float, direction: float) -> float:
    # int_a^b phi_s dS_s over a segment without jumps, with dS = -lam psi S ds
    model = bundle.model
    path = bundle.path
    value = segment_quad(lambda s: phi.at(bundle, s) * path.left_value_at(s), bundle, a, b)
    return -direction * model.lam * model.psi * value


def integrate_wealth(phi: PhiEvaluator,
                     bundle: AzemaBundle,
                     start: float,
                     end: float,
                     direction: Optional[float] = 1.0) -> Tuple[np.ndarray, np.ndarray]:
    """
    Wealth V = int direction * phi dS over ]start, end] along one path

    On Poisson paths the integral is exact: the drift -lam psi phi S between
    jumps is integrated by adaptive quadrature and every jump adds
    phi_T (S_T - S_{T-}). On Brownian paths it is the left-point Riemann
    sum on the grid.

    Args:
        phi: the PhiEvaluator
        bundle: the AzemaBundle of the path
        start: left end of the interval
        end: right end of the interval, at most the path horizon
        direction: 1 to hold phi, -1 to hold -phi

    Returns:
        tuple of (times, wealth) arrays, starting at (start, 0)

    Raises:
        pyenlarge.exceptions.EnlargeParameterException: interval outside the path
        pyenlarge.exceptions.EnlargeNumericalException: quadrature did not converge
    """
    path = bundle.path
    if (not 0.0 <= start <= end or end > path.horizon + 1e-12):
        raise EnlargeParameterException("Interval ]%s, %s] is not within [0, %s]" % (start, end, path.horizon))

    # Brownian paths: Ito sums on the grid
    if (bundle.model.is_brownian):
        i0 = path.index_of(start)
        i1 = path.index_of(end)
        positions = direction * phi.on_grid(bundle)[i0:i1]
        gains = positions * np.diff(path.s[i0:i1 + 1])
        return (path.grid[i0:i1 + 1], np.concatenate([[0.0], np.cumsum(gains)]))

    # Poisson paths: exact drift between jumps plus the jumps
    times = [start]
    wealth = [0.0]
    v = 0.0
    for (a, b, jump_at_b) in path.segments(start, end):
        if (b > a):
            v += __drift_integral(phi, bundle, a, b, direction)
        if (jump_at_b):
            v += direction * phi.at(bundle, b) * (path.value_at(b) - path.left_value_at(b))
        times.append(b)
        wealth.append(v)
    return (np.asarray(times), np.asarray(wealth))


def run_strategy(phi: PhiEvaluator,
                 bundle: AzemaBundle,
                 when: str,
                 recipe: str,
                 start: float,
                 end: float,
                 direction: Optional[float] = 1.0,
                 admissibility_bound: Optional[float] = 1.0,
                 tolerance: Optional[float] = 0.0) -> StrategyRun:
    """
    Integrate a strategy over an interval and wrap the result

    Args:
        phi: the PhiEvaluator
        bundle: the AzemaBundle of the path
        when: "before" or "after" tau
        recipe: name of the recipe
        start: left end of the interval
        end: right end of the interval
        direction: 1 to hold phi, -1 to hold -phi
        admissibility_bound: the a of V >= -a, None for no constraint
        tolerance: tolerance of the verdicts

    Returns:
        the StrategyRun
    """
    times, wealth = integrate_wealth(phi, bundle, start, end, direction=direction)
    return StrategyRun(phi,
                       bundle.path.index,
                       when,
                       recipe,
                       start,
                       end,
                       times,
                       wealth,
                       admissibility_bound=admissibility_bound,
                       tolerance=tolerance)
