"""
Functions for configuring, running and tabulating batch experiments
"""

import csv
import datetime
import json
import os
import pydantic
from typing import Any, Dict, List, Optional, Sequence
from . import (GROUP_CONVERGENCE,
               GROUP_ORDER,
               CHECK_HONEST,
               CHECK_JUMP_IDENTITY,
               CHECK_ARBITRAGE_BEFORE,
               CHECK_ARBITRAGE_AFTER,
               CHECK_DEFLATOR_BEFORE,
               DEFAULT_CONVERGENCE_DTS,
               CONVERGENCE_SLOPE_RANGE,
               VERDICTS_CSV_FILENAME,
               VERDICTS_JSON_FILENAME,
               VERDICT_TABLE_HEADER)
from .claims import claims_for
from .classes.claim import Claim
from .classes.experiment_config import ExperimentConfig
from ..market.market import simulate_ensemble
from ..market.classes.market_model import MarketModel
from ..market.classes.sample_path import SamplePath
from ..random_times import KIND_POISSON_SUP_UNIT, KIND_EMERY
from ..special_functions import SUP_KIND_FINITE_HORIZON, sup_law_estimator, emery_table
from ..strategies import WHEN_BEFORE, WHEN_AFTER
from ..strategies.verify import (verify_before_tau,
                                 verify_after_tau,
                                 verify_jump_identity,
                                 verify_honest,
                                 residual_slope)
from ..deflators.deflators import verify_deflator
from ..report import McReport, VERDICT_PASS, VERDICT_FAIL, VERDICT_INFORMATIONAL
from .._internal.util import dumps_sorted
from ..exceptions import EnlargeConfigException, EnlargeContractException

# pdoc init
__pdoc__: Dict = {}

# configuration keys holding comma separated lists
LIST_FIELDS = ["checks"]


def __parse_value(key: str, value: str) -> Any:
    if (key in LIST_FIELDS):
        return [item.strip() for item in value.split(",") if item.strip() != ""]
    if (value.lower() == "none" and ExperimentConfig.__fields__[key].allow_none):
        return None
    return value


def __format_value(value: Any) -> str:
    if (value is None):
        return "none"
    if (isinstance(value, list)):
        return ",".join([str(v) for v in value])
    if (isinstance(value, float)):
        return repr(value)
    return str(value)


def parse_config(text: str) -> ExperimentConfig:
    """
    Parse the text of an experiment configuration

    The format is one `key = value` pair per line with `config_version`
    as first key. Blank lines and lines starting with `#` are skipped,
    `none` stands for an unset optional value and lists are comma
    separated.

    Args:
        text: configuration text

    Returns:
        the ExperimentConfig

    Raises:
        pyenlarge.exceptions.EnlargeConfigException: syntax or validation error,
            with the line number and field name when known
    """
    values: Dict[str, Any] = {}
    lines: Dict[str, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if (line == "" or line.startswith("#")):
            continue
        if ("=" not in line):
            raise EnlargeConfigException("Expected 'key = value', got '%s'" % (line), line=number)
        key, value = [part.strip() for part in line.split("=", 1)]
        if (key not in ExperimentConfig.__fields__):
            raise EnlargeConfigException("Unknown key '%s'" % (key), line=number, field=key)
        if (key in values):
            raise EnlargeConfigException("Duplicate key '%s'" % (key), line=number, field=key)
        if (len(values) == 0 and key != "config_version"):
            raise EnlargeConfigException("The first key must be config_version", line=number, field=key)
        values[key] = __parse_value(key, value)
        lines[key] = number
    if (len(values) == 0):
        raise EnlargeConfigException("Empty configuration", field="config_version")

    # validate
    try:
        return ExperimentConfig(**values)
    except pydantic.ValidationError as e:
        error = e.errors()[0]
        field = str(error["loc"][0]) if len(error["loc"]) > 0 else None
        if (field == "__root__"):
            field = None
        raise EnlargeConfigException("Invalid configuration: %s" % (error["msg"]),
                                     line=lines.get(field) if field is not None else None,
                                     field=field) from e


def load_config(filename: str) -> ExperimentConfig:
    """
    Read an experiment configuration file

    Args:
        filename: configuration filename

    Returns:
        the ExperimentConfig

    Raises:
        pyenlarge.exceptions.EnlargeConfigException: unreadable file, syntax or validation error
    """
    try:
        with open(filename, "r") as fp:
            text = fp.read()
    except OSError as e:
        raise EnlargeConfigException("Unable to read configuration file %s: %s" % (filename, e)) from e
    return parse_config(text)


def format_config(config: ExperimentConfig) -> str:
    """
    Text of an experiment configuration, read back by `parse_config`

    Args:
        config: the ExperimentConfig

    Returns:
        the configuration text
    """
    lines = ["# pyenlarge experiment configuration", "config_version = %d" % (config.config_version)]
    for key, value in config.dict().items():
        if (key != "config_version"):
            lines.append("%s = %s" % (key, __format_value(value)))
    return "\n".join(lines) + "\n"


def dump_config(config: ExperimentConfig, filename: str) -> None:
    """
    Write an experiment configuration file

    Args:
        config: the ExperimentConfig
        filename: output filename
    """
    with open(filename, "w") as fp:
        fp.write(format_config(config))


def __experiment_bundle_options(config: ExperimentConfig, model: MarketModel, verbose: Optional[bool]) -> Dict[str, Any]:
    # tables are built once, before any worker thread needs them
    options = config.bundle_options()
    if (config.time_kind == KIND_POISSON_SUP_UNIT):
        options["estimator"] = sup_law_estimator(model,
                                                 SUP_KIND_FINITE_HORIZON,
                                                 sample_size=config.sample_size,
                                                 seed=config.table_seed,
                                                 cache_file=config.table_cache,
                                                 verbose=verbose)
    elif (config.time_kind == KIND_EMERY):
        options["table"] = emery_table(sample_size=config.sample_size,
                                       seed=config.table_seed,
                                       sigma=model.sigma,
                                       verbose=verbose)
    return options


def run_claim(claim: Claim,
              config: ExperimentConfig,
              paths: Sequence[SamplePath],
              bundle_options: Optional[Dict[str, Any]] = None,
              verbose: Optional[bool] = False) -> McReport:
    """
    Run the check of one claim over an ensemble

    Args:
        claim: the Claim
        config: the ExperimentConfig the paths were simulated from
        paths: the ensemble of SamplePath objects
        bundle_options: keyword arguments of `pyenlarge.azema.azema_bundle`,
            built from the config when not given
        verbose: output progress messages, defaults to False

    Returns:
        the McReport, named after the claim and stamped with its group
        and the configuration hash

    Raises:
        pyenlarge.exceptions.EnlargeContractException: the claim is about another random time
    """
    # init
    model = config.market_model()
    spec = config.random_time()
    if (claim.kind != spec.kind):
        raise EnlargeContractException("Claim about '%s' cannot run on '%s'" % (claim.kind, spec.kind))
    if (bundle_options is None):
        bundle_options = __experiment_bundle_options(config, model, verbose)
    common = {
        "threads": config.threads,
        "bundle_options": bundle_options,
        "seed": config.seed,
        "verbose": verbose,
    }

    # dispatch
    if (claim.check == CHECK_HONEST):
        report = verify_honest(spec, model, paths, tolerance=config.tolerance, tol_c=config.tol_c, **common)
    elif (claim.check == CHECK_JUMP_IDENTITY):
        report = verify_jump_identity(spec, model, paths, **common)
    elif (claim.check == CHECK_ARBITRAGE_BEFORE):
        report = verify_before_tau(spec, model, paths, variant=config.variant, recipe=claim.recipe,
                                   tolerance=config.tolerance, tol_c=config.tol_c, **common)
    elif (claim.check == CHECK_ARBITRAGE_AFTER):
        report = verify_after_tau(spec, model, paths, variant=config.variant, recipe=claim.recipe,
                                  tolerance=config.tolerance, tol_c=config.tol_c, **common)
    else:
        when = WHEN_BEFORE if claim.check == CHECK_DEFLATOR_BEFORE else WHEN_AFTER
        verdict_on_fail = VERDICT_INFORMATIONAL if claim.informational else VERDICT_FAIL
        report, _ = verify_deflator(spec, model, paths, when=when, tolerance_sigmas=config.tolerance_sigmas,
                                    verdict_on_fail=verdict_on_fail, **common)

    # stamp
    details = dict(report.details)
    details["claim"] = claim.statement
    return report.copy(update={
        "name": claim.name,
        "group": claim.group,
        "config_hash": config.config_hash(),
        "details": details,
    })


def run_experiment(config: ExperimentConfig,
                   paths: Optional[Sequence[SamplePath]] = None,
                   verbose: Optional[bool] = False) -> List[McReport]:
    """
    Simulate the ensemble of an experiment and check every requested claim

    Reports only depend on the configuration: the same config gives the
    same reports whatever the number of threads.

    Args:
        config: the ExperimentConfig
        paths: an already simulated ensemble, simulated from the config when not given
        verbose: output progress messages, defaults to False

    Returns:
        list of McReport objects, in claim registry order

    Raises:
        pyenlarge.exceptions.EnlargeContractException: no claim matches the requested checks
    """
    # init
    model = config.market_model()
    spec = config.random_time()
    claims = [c for c in claims_for(spec.kind, config.checks) if c.applies_to(model)]
    if (len(claims) == 0):
        raise EnlargeContractException("No claim about '%s' matches the checks [%s] on %s" % (
            spec.kind, ", ".join(config.checks), model))
    if (verbose is True):
        print("[%s] Running %d checks of %s" % (datetime.datetime.now(), len(claims), spec.label))

    # simulate
    if (paths is None):
        paths = simulate_ensemble(model,
                                  config.n_paths,
                                  config.resolved_horizon(),
                                  config.seed,
                                  dt=config.grid_step(),
                                  threads=config.threads,
                                  verbose=verbose)

    # check
    options = __experiment_bundle_options(config, model, verbose)
    reports = []
    for claim in claims:
        report = run_claim(claim, config, paths, bundle_options=options, verbose=verbose)
        if (verbose is True):
            print("[%s] %s %s: %s" % (datetime.datetime.now(), spec.kind, report.name, report.verdict))
        reports.append(report)
    return reports


def __row_key(report: McReport) -> tuple:
    group = report.group or ""
    rank = GROUP_ORDER.index(group) if group in GROUP_ORDER else len(GROUP_ORDER)
    return (rank, group, report.kind or "", report.name)


def tabulate(reports: Sequence[McReport], out_dir: Optional[str] = None) -> List[List[Any]]:
    """
    Verdict table of a report set, one row per report sorted by group
    and kind

    Args:
        reports: the McReport objects
        out_dir: directory receiving verdicts.csv and verdicts.json, nothing is written when None

    Returns:
        the table rows, header first
    """
    # build rows
    rows: List[List[Any]] = [list(VERDICT_TABLE_HEADER)]
    for report in sorted(reports, key=__row_key):
        rows.append([
            report.group or "",
            report.kind or "",
            report.name,
            report.verdict,
            report.estimate,
            report.std_error,
            report.ci_low,
            report.ci_high,
            report.n_used,
            report.n_excluded,
            report.details.get("claim", ""),
        ])

    # write
    if (out_dir is not None):
        os.makedirs(out_dir, exist_ok=True)
        with open(os.path.join(out_dir, VERDICTS_CSV_FILENAME), "w", newline="") as fp:
            writer = csv.writer(fp)
            writer.writerows(rows)
        with open(os.path.join(out_dir, VERDICTS_JSON_FILENAME), "w") as fp:
            fp.write(dumps_sorted([dict(zip(rows[0], row)) for row in rows[1:]]))

    # return
    return rows


def convergence_study(config: ExperimentConfig,
                      dts: Optional[Sequence[float]] = None,
                      verbose: Optional[bool] = False) -> McReport:
    """
    Grid convergence of the before tau identity 1 + V_tau = m_tau

    The ensemble is simulated again for every grid step and the mean
    absolute residual regressed on dt in log-log scale. The check passes
    when the slope lies in CONVERGENCE_SLOPE_RANGE, around the 0.5 of
    an error of order sqrt(dt).

    Args:
        config: the ExperimentConfig of a Brownian experiment
        dts: grid steps, defaults to 2^-8, 2^-10 and 2^-12
        verbose: output progress messages, defaults to False

    Returns:
        the McReport of the slope

    Raises:
        pyenlarge.exceptions.EnlargeContractException: the model is not Brownian
    """
    # init
    model = config.market_model()
    spec = config.random_time()
    if (model.is_brownian is False):
        raise EnlargeContractException("The convergence study needs a Brownian model, got %s" % (model))
    dts = list(DEFAULT_CONVERGENCE_DTS if dts is None else dts)
    options = __experiment_bundle_options(config, model, verbose)
    horizon = config.resolved_horizon()

    # one ensemble per grid step
    residuals = []
    n_used = []
    for dt in dts:
        if (verbose is True):
            print("[%s] Convergence study of %s at dt=%s" % (datetime.datetime.now(), spec.label, dt))
        paths = simulate_ensemble(model, config.n_paths, horizon, config.seed, dt=dt, threads=config.threads)
        report = verify_before_tau(spec,
                                   model,
                                   paths,
                                   variant=config.variant,
                                   tolerance=config.tolerance,
                                   tol_c=config.tol_c,
                                   threads=config.threads,
                                   bundle_options=options,
                                   seed=config.seed)
        residuals.append(report.details["mean_abs_residual"])
        n_used.append(report.n_used)

    # slope
    slope = residual_slope(dts, residuals)
    low, high = CONVERGENCE_SLOPE_RANGE
    verdict = VERDICT_PASS if low <= slope <= high else VERDICT_FAIL
    return McReport.from_values("convergence_slope",
                                [slope],
                                verdict,
                                kind=spec.kind,
                                group=GROUP_CONVERGENCE,
                                seed=config.seed,
                                config_hash=config.config_hash(),
                                details={
                                    "dts": dts,
                                    "mean_abs_residuals": residuals,
                                    "n_used": n_used,
                                    "slope_range": [low, high],
                                })


def write_reports(reports: Sequence[McReport], filename: str) -> None:
    """
    Write a report set to a JSON file (sorted keys, fixed indentation)

    Args:
        reports: the McReport objects
        filename: output filename
    """
    with open(filename, "w") as fp:
        fp.write(dumps_sorted([r.to_json_serializable() for r in reports]))


def read_reports(filename: str) -> List[McReport]:
    """
    Read a report set written by `write_reports`

    Args:
        filename: report filename

    Returns:
        list of McReport objects

    Raises:
        pyenlarge.exceptions.EnlargeConfigException: unreadable or malformed file
    """
    try:
        with open(filename, "r") as fp:
            data = json.load(fp)
        return [McReport.parse_obj(d) for d in data]
    except (OSError, ValueError, TypeError) as e:
        raise EnlargeConfigException("Unable to read reports from %s: %s" % (filename, e)) from e
