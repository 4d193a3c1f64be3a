import os
import sys
import click
import datetime
import humanize
import pyenlarge
from ..helpers import (experiment_options,
                       load_experiment_config,
                       print_verdict_table,
                       print_files,
                       all_passed,
                       summary_line,
                       colored_verdict)
from ..templates import CONFIG_TEMPLATE

# sides of tau
WHEN_CHOICES = [pyenlarge.strategies.WHEN_BEFORE, pyenlarge.strategies.WHEN_AFTER]


def __echo_helper(message, show_times=False):
    if (show_times is True):
        click.echo("[%s] %s" % (datetime.datetime.now(), message))
    else:
        click.echo(message)


def __run_and_report(config, experiment, checks, label):
    # run the checks, write the reports and exit 1 unless every verdict passes
    try:
        experiment = experiment.with_overrides(checks=checks)
        reports = pyenlarge.experiments.run_experiment(experiment, verbose=config.verbose)
        os.makedirs(experiment.output_dir, exist_ok=True)
        filename = os.path.join(experiment.output_dir, "%s_%s.json" % (experiment.name, label))
        pyenlarge.experiments.write_reports(reports, filename)
    except pyenlarge.EnlargeException as e:
        click.echo("Error: %s" % (e))
        sys.exit(1)

    # output
    print_verdict_table(reports)
    __echo_helper("", show_times=False)
    __echo_helper(summary_line(reports), show_times=config.verbose)
    print_files([filename])
    if (all_passed(reports) is False):
        sys.exit(1)


@click.command("verify-arbitrage", short_help="Verify the arbitrages before or after tau")
@experiment_options
@click.option("--when", type=click.Choice(WHEN_CHOICES), required=True, help="Side of tau")
@click.pass_obj
def verify_arbitrage(config, config_file, seed, n_paths, dt, output_dir, threads, when):
    """
    Run the arbitrage checks of the configured random time. Before tau the
    exact jump identity of the strategy is checked too.
    """
    try:
        experiment = load_experiment_config(config_file, seed=seed, n_paths=n_paths, dt=dt,
                                            output_dir=output_dir, threads=threads)
    except pyenlarge.EnlargeException as e:
        click.echo("Error: %s" % (e))
        sys.exit(1)
    if (when == pyenlarge.strategies.WHEN_BEFORE):
        checks = [pyenlarge.experiments.CHECK_ARBITRAGE_BEFORE, pyenlarge.experiments.CHECK_JUMP_IDENTITY]
    else:
        checks = [pyenlarge.experiments.CHECK_ARBITRAGE_AFTER]
    __run_and_report(config, experiment, checks, "arbitrage_%s" % (when))


@click.command("verify-deflator", short_help="Verify the deflators before or after tau")
@experiment_options
@click.option("--when", type=click.Choice(WHEN_CHOICES), required=True, help="Side of tau")
@click.pass_obj
def verify_deflator(config, config_file, seed, n_paths, dt, output_dir, threads, when):
    """
    Build the deflator of the configured random time on every path and
    test the deflated price for constant expectation
    """
    try:
        experiment = load_experiment_config(config_file, seed=seed, n_paths=n_paths, dt=dt,
                                            output_dir=output_dir, threads=threads)
    except pyenlarge.EnlargeException as e:
        click.echo("Error: %s" % (e))
        sys.exit(1)
    if (when == pyenlarge.strategies.WHEN_BEFORE):
        checks = [pyenlarge.experiments.CHECK_DEFLATOR_BEFORE]
    else:
        checks = [pyenlarge.experiments.CHECK_DEFLATOR_AFTER]
    __run_and_report(config, experiment, checks, "deflator_%s" % (when))


@click.command("verify-honest", short_help="Verify the honesty certificate Z~_tau = 1")
@experiment_options
@click.pass_obj
def verify_honest(config, config_file, seed, n_paths, dt, output_dir, threads):
    """
    Check Z~_tau = 1 for honest times, its closed form for the non-honest
    ones and the path independence of Z for the Emery time
    """
    try:
        experiment = load_experiment_config(config_file, seed=seed, n_paths=n_paths, dt=dt,
                                            output_dir=output_dir, threads=threads)
    except pyenlarge.EnlargeException as e:
        click.echo("Error: %s" % (e))
        sys.exit(1)
    __run_and_report(config, experiment, [pyenlarge.experiments.CHECK_HONEST], "honest")


@click.command("run", short_help="Run every check configured for the random time")
@experiment_options
@click.pass_obj
def run(config, config_file, seed, n_paths, dt, output_dir, threads):
    """
    Run the checks listed in the configuration, or every claim about the
    random time when the list is empty
    """
    try:
        experiment = load_experiment_config(config_file, seed=seed, n_paths=n_paths, dt=dt,
                                            output_dir=output_dir, threads=threads)
    except pyenlarge.EnlargeException as e:
        click.echo("Error: %s" % (e))
        sys.exit(1)
    __run_and_report(config, experiment, experiment.checks, "reports")


@click.command("convergence", short_help="Grid convergence of the before tau identity")
@experiment_options
@click.option("--dts", type=str, help="Comma separated grid steps (default 2^-8,2^-10,2^-12)")
@click.pass_obj
def convergence(config, config_file, seed, n_paths, dt, output_dir, threads, dts):
    """
    Regress the before tau identity residual of a Brownian random time on
    the grid step and check the O(sqrt(dt)) slope
    """
    try:
        steps = None if dts is None else [float(x) for x in dts.split(",") if x.strip() != ""]
    except ValueError:
        click.echo("Error: --dts must be a comma separated list of numbers")
        sys.exit(1)
    try:
        experiment = load_experiment_config(config_file, seed=seed, n_paths=n_paths, dt=dt,
                                            output_dir=output_dir, threads=threads)
        report = pyenlarge.experiments.convergence_study(experiment, dts=steps, verbose=config.verbose)
        os.makedirs(experiment.output_dir, exist_ok=True)
        filename = os.path.join(experiment.output_dir, "%s_convergence.json" % (experiment.name))
        pyenlarge.experiments.write_reports([report], filename)
    except pyenlarge.EnlargeException as e:
        click.echo("Error: %s" % (e))
        sys.exit(1)

    # output
    for step, residual in zip(report.details["dts"], report.details["mean_abs_residuals"]):
        click.echo("dt=%-12.6g mean |1 + V_tau - m_tau| = %.6g" % (step, residual))
    __echo_helper("slope %.4f: %s" % (report.estimate, colored_verdict(report.verdict)), show_times=config.verbose)
    print_files([filename])
    if (report.verdict == pyenlarge.VERDICT_FAIL):
        sys.exit(1)


@click.command("tabulate", short_help="Merge report files into a verdict table")
@click.argument("infiles", type=click.Path(exists=True, dir_okay=False), nargs=-1, required=True)
@click.option("--out", "output_dir", type=str, default=pyenlarge.experiments.DEFAULT_OUTPUT_DIR,
              show_default=True, help="Directory receiving verdicts.csv and verdicts.json")
@click.pass_obj
def tabulate(config, infiles, output_dir):
    """
    Read JSON report files and write the verdict table sorted by group and
    random time kind
    """
    try:
        reports = []
        for infile in infiles:
            reports.extend(pyenlarge.experiments.read_reports(infile))
        pyenlarge.experiments.tabulate(reports, out_dir=output_dir)
    except pyenlarge.EnlargeException as e:
        click.echo("Error: %s" % (e))
        sys.exit(1)

    # output
    __echo_helper("Read %s reports from %s files" % (humanize.intcomma(len(reports)), humanize.intcomma(len(infiles))),
                  show_times=config.verbose)
    print_verdict_table(reports)
    print_files([os.path.join(output_dir, pyenlarge.experiments.VERDICTS_CSV_FILENAME),
                 os.path.join(output_dir, pyenlarge.experiments.VERDICTS_JSON_FILENAME)])
    if (all_passed(reports) is False):
        sys.exit(1)


@click.command("config-template", short_help="Output a template experiment configuration")
@click.option("--outfile", type=str, help="Output file to save the template to")
@click.pass_obj
def config_template(config, outfile):
    """
    Output a template experiment configuration file
    """
    if (outfile is not None):
        with open(outfile, "w", encoding="utf-8") as fp:
            fp.write(CONFIG_TEMPLATE)
        click.echo("Saved template to %s" % (outfile))
    else:
        click.echo(CONFIG_TEMPLATE, nl=False)
