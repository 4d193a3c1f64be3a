"""
Functions for building Azema bundles and evaluating them at single times
"""

import csv
from typing import Dict, List, Optional, Sequence, Tuple, Union
from . import AZEMA_CSV_HEADER
from .classes.azema_bundle import AzemaBundle
from .classes.brownian_level_bundle import BrownianLevelBundle
from .classes.brownian_maturity_bundle import BrownianMaturityBundle
from .classes.brownian_sup_bundle import BrownianSupBundle
from .classes.emery_bundle import EmeryBundle
from .classes.poisson_level_bundle import PoissonLevelBundle
from .classes.poisson_sup_unit_bundle import PoissonSupUnitBundle
from .classes.poisson_sup_overall_bundle import PoissonSupOverallBundle
from .classes.convex_combo_bundle import ConvexComboBundle
from .classes.min_scaled_bundle import MinScaledBundle, min_scaled_g, min_scaled_integral
from .classes.max_scaled_bundle import MaxScaledBundle
from ..market import LOCAL_TIME_DOWNCROSSING
from ..market.classes.market_model import MarketModel
from ..market.classes.sample_path import SamplePath
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
from ..random_times.classes.realized_time import RealizedTime
from ..special_functions import DEFAULT_SAMPLE_SIZE
from ..special_functions.classes.emery_phi_table import EmeryPhiTable
from ..special_functions.classes.sup_law_estimator import SupLawEstimator
from ..exceptions import EnlargeContractException

# pdoc init
__pdoc__: Dict = {}


def azema_bundle(spec: RandomTimeSpec,
                 path: SamplePath,
                 sample_size: Optional[int] = DEFAULT_SAMPLE_SIZE,
                 seed: Optional[int] = 0,
                 estimator: Optional[SupLawEstimator] = None,
                 table: Optional[EmeryPhiTable] = None,
                 local_time_method: Optional[str] = LOCAL_TIME_DOWNCROSSING,
                 local_time_eps: Optional[float] = None) -> AzemaBundle:
    """
    Build the Azema bundle of a random time on a sample path

    Estimated kinds build (or reuse from the in-memory cache) their
    Monte-Carlo table unless one is passed in. Pass the same table to
    every path of an ensemble.

    Args:
        spec: the RandomTimeSpec
        path: a SamplePath from a compatible model
        sample_size: sample size of estimated tables
        seed: seed of estimated tables
        estimator: supremum law table of the supremum on [0, 1] kind
        table: Emery table of the Emery kind
        local_time_method: local time estimator of the Brownian last passage kinds
        local_time_eps: band width of the local time estimator

    Returns:
        the AzemaBundle

    Raises:
        pyenlarge.exceptions.EnlargeContractException: incompatible model
    """
    spec.check_model(path.model)
    kind = spec.kind
    if (kind == KIND_BROWNIAN_LEVEL):
        return BrownianLevelBundle(spec, path, local_time_method=local_time_method, local_time_eps=local_time_eps)
    if (kind == KIND_BROWNIAN_MATURITY):
        return BrownianMaturityBundle(spec, path, local_time_method=local_time_method, local_time_eps=local_time_eps)
    if (kind == KIND_BROWNIAN_SUP_OVERALL):
        return BrownianSupBundle(spec, path)
    if (kind == KIND_EMERY):
        return EmeryBundle(spec, path, table=table, sample_size=sample_size, seed=seed)
    if (kind == KIND_POISSON_LEVEL):
        return PoissonLevelBundle(spec, path)
    if (kind == KIND_POISSON_SUP_UNIT):
        return PoissonSupUnitBundle(spec, path, estimator=estimator, sample_size=sample_size, seed=seed)
    if (kind == KIND_POISSON_SUP_OVERALL):
        return PoissonSupOverallBundle(spec, path)
    if (kind == KIND_CONVEX_COMBO):
        return ConvexComboBundle(spec, path)
    if (kind == KIND_MIN_SCALED):
        return MinScaledBundle(spec, path)
    if (kind == KIND_MAX_SCALED):
        return MaxScaledBundle(spec, path)
    raise EnlargeContractException("No Azema closed form for random time kind '%s'" % (kind))


def __bundle_for(spec: RandomTimeSpec, model: MarketModel, path: SamplePath, options: Dict) -> AzemaBundle:
    if (model != path.model):
        raise EnlargeContractException("The path was generated from %s, not from %s" % (path.model, model))
    return azema_bundle(spec, path, **options)


def eval_z(spec: RandomTimeSpec,
           model: MarketModel,
           path: SamplePath,
           t: float,
           with_se: Optional[bool] = False,
           **options) -> Union[float, Tuple[float, float]]:
    """
    Azema supermartingale Z_t = P(tau > t | F_t)

    Args:
        spec: the RandomTimeSpec
        model: the MarketModel of the path
        path: the SamplePath
        t: evaluation time (a grid time for Brownian paths)
        with_se: also return the standard error of an estimated Z
        **options: keyword arguments of `azema_bundle`

    Returns:
        Z_t, or the tuple (Z_t, standard error) when with_se is True

    Raises:
        pyenlarge.exceptions.EnlargeContractException: inconsistent spec, model and path
    """
    bundle = __bundle_for(spec, model, path, options)
    if (with_se is True):
        return (bundle.z_at(t), bundle.z_se_at(t))
    return bundle.z_at(t)


def eval_z_tilde(spec: RandomTimeSpec, model: MarketModel, path: SamplePath, t: float, **options) -> float:
    """
    Z~_t = P(tau >= t | F_t)

    Args:
        spec: the RandomTimeSpec
        model: the MarketModel of the path
        path: the SamplePath
        t: evaluation time
        **options: keyword arguments of `azema_bundle`

    Returns:
        Z~_t
    """
    return __bundle_for(spec, model, path, options).z_tilde_at(t)


def eval_a_opt(spec: RandomTimeSpec, model: MarketModel, path: SamplePath, t: float, **options) -> float:
    """
    Dual optional projection A°_t of 1{tau <= t}

    Brownian last passage kinds rebuild A° from a local time estimate,
    the kinds built on T1 and T2 reconstruct it as m - Z.

    Args:
        spec: the RandomTimeSpec
        model: the MarketModel of the path
        path: the SamplePath
        t: evaluation time
        **options: keyword arguments of `azema_bundle`

    Returns:
        A°_t
    """
    return __bundle_for(spec, model, path, options).a_opt_at(t)


def eval_m(spec: RandomTimeSpec, model: MarketModel, path: SamplePath, t: float, **options) -> float:
    """
    Martingale m_t = Z_t + A°_t, from its explicit integral form for the
    kinds built on T1 and T2

    Args:
        spec: the RandomTimeSpec
        model: the MarketModel of the path
        path: the SamplePath
        t: evaluation time
        **options: keyword arguments of `azema_bundle`

    Returns:
        m_t
    """
    return __bundle_for(spec, model, path, options).m_at(t)


def eval_nu_hat(spec: RandomTimeSpec, model: MarketModel, path: SamplePath, t: float, **options) -> float:
    """
    Integrand nu^_t of m against the compensated Poisson process (dm = nu^ dM)

    Args:
        spec: a RandomTimeSpec on a Poisson model
        model: the MarketModel of the path
        path: the SamplePath
        t: evaluation time
        **options: keyword arguments of `azema_bundle`

    Returns:
        nu^_t

    Raises:
        pyenlarge.exceptions.EnlargeContractException: Brownian model
    """
    if (model.is_brownian):
        raise EnlargeContractException("nu^ is defined on Poisson models, Brownian bundles expose eta")
    return __bundle_for(spec, model, path, options).nu_hat_at(t)


def min_scaled_m_tau(spec: RandomTimeSpec, model: MarketModel, realized: RealizedTime) -> float:
    """
    m_tau of tau = T1 ^ a T2 from T1 and T2 alone

    On {a T2 < T1}, m_tau = 1 + lam I(a T2). On {T1 <= a T2}, tau = T1 and
    m_tau = 1 + lam I(T1) - g(T1).

    Args:
        spec: a min scaled RandomTimeSpec
        model: the Poisson MarketModel
        realized: tau on a path, with T1 and T2 in its auxiliary values

    Returns:
        m_tau, nan when tau was not detected

    Raises:
        pyenlarge.exceptions.EnlargeContractException: other random time kinds
    """
    if (spec.kind != KIND_MIN_SCALED):
        raise EnlargeContractException("The closed form of m_tau applies to the min scaled kind only")
    spec.check_model(model)
    if (realized.finite is False):
        return float("nan")
    beta = model.lam * (1.0 / spec.a - 1.0)
    t1 = realized.auxiliary["T1"]
    t2 = realized.auxiliary["T2"]
    if (spec.a * t2 < t1):
        return 1.0 + model.lam * min_scaled_integral(beta, spec.a * t2)
    return 1.0 + model.lam * min_scaled_integral(beta, t1) - min_scaled_g(beta, t1)


def write_azema_csv(bundles: List[AzemaBundle], filename: str, times: Optional[Sequence[float]] = None) -> None:
    """
    Write the Z, Z~, A° and m series of several paths to one long format CSV file

    Args:
        bundles: the AzemaBundle objects, one per path
        filename: output filename
        times: evaluation times, defaults to each bundle's own times
    """
    with open(filename, "w", newline="") as fp:
        writer = csv.writer(fp)
        writer.writerow(AZEMA_CSV_HEADER)
        for bundle in bundles:
            writer.writerows(bundle.csv_rows(times))
