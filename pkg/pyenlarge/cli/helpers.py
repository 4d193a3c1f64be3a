import os
import click
import humanize
import pydantic
from termcolor import colored
from texttable import Texttable
from typing import List, Optional, Sequence
import pyenlarge
from pyenlarge.experiments import ExperimentConfig, load_config
from pyenlarge.report import McReport, VERDICT_PASS, VERDICT_FAIL, VERDICT_INFORMATIONAL

# verdict colours
VERDICT_COLOURS = {
    VERDICT_PASS: "green",
    VERDICT_FAIL: "red",
    VERDICT_INFORMATIONAL: "yellow",
}


def experiment_options(fn):
    """
    Options shared by every command running an experiment. They override
    the matching keys of the configuration file.
    """
    decorators = [
        click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False), required=True,
                     help="Experiment configuration file"),
        click.option("--seed", type=int, help="Base seed of the ensemble"),
        click.option("--paths", "n_paths", type=click.IntRange(min=1), help="Number of simulated paths"),
        click.option("--dt", type=click.FloatRange(min=0.0, min_open=True), help="Grid step of Brownian paths"),
        click.option("--out", "output_dir", type=str, help="Output directory"),
        click.option("--threads", type=click.IntRange(min=1), help="Number of worker threads"),
    ]
    for decorator in reversed(decorators):
        fn = decorator(fn)
    return fn


def load_experiment_config(config_file: str, **overrides) -> ExperimentConfig:
    """
    Read a configuration file and apply the command line overrides

    Raises:
        pyenlarge.exceptions.EnlargeConfigException: invalid file or override
    """
    config = load_config(config_file)
    try:
        return config.with_overrides(**overrides)
    except pydantic.ValidationError as e:
        error = e.errors()[0]
        field = str(error["loc"][0]) if len(error["loc"]) > 0 else None
        raise pyenlarge.EnlargeConfigException("Invalid command line override: %s" % (error["msg"]), field=field) from e


def colored_verdict(verdict: str) -> str:
    return colored(verdict, VERDICT_COLOURS.get(verdict, "white"))


def __format_number(value: float) -> str:
    return "%.6g" % (value)


def print_verdict_table(reports: Sequence[McReport]) -> None:
    """
    Print a verdict table, rows in the same order as the tabulated files
    """
    rows = pyenlarge.experiments.tabulate(reports)

    # set header values
    table_headers = ["Group", "Kind", "Check", "Verdict", "Estimate", "Std Error", "Used", "Excluded"]

    # output information
    table = Texttable(max_width=400)
    table.set_deco(Texttable.HEADER)
    table.set_cols_dtype(["t"] * len(table_headers))
    table.set_header_align(["l"] * len(table_headers))
    table.set_cols_align(["l"] * len(table_headers))
    table.header(table_headers)
    for row in rows[1:]:
        table.add_row([row[0],
                       row[1],
                       row[2],
                       colored_verdict(row[3]),
                       __format_number(row[4]),
                       __format_number(row[5]),
                       humanize.intcomma(row[8]),
                       humanize.intcomma(row[9])])
    click.echo(table.draw())


def print_files(filenames: List[str]) -> None:
    """
    Print the written files with their sizes
    """
    for filename in filenames:
        click.echo("Wrote %s (%s)" % (filename, humanize.naturalsize(os.path.getsize(filename))))


def all_passed(reports: Sequence[McReport]) -> bool:
    return all([r.verdict != VERDICT_FAIL for r in reports])


def summary_line(reports: Sequence[McReport], filter_verdict: Optional[str] = VERDICT_PASS) -> str:
    n_match = len([r for r in reports if r.verdict == filter_verdict])
    return "%s of %s checks: %s" % (humanize.intcomma(n_match), humanize.intcomma(len(reports)), filter_verdict)
