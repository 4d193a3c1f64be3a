import click
import pyenlarge
from .simulation import commands as simulation_commands
from .verification import commands as verification_commands

# default context settings
CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])


class Config(object):
    def __init__(self, verbose=False):
        self.verbose = verbose


@click.group(invoke_without_command=True, context_settings=CONTEXT_SETTINGS)
@click.version_option(version="0.1.0")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose output")
@click.option("--list-kinds", is_flag=True, help="List the supported random time kinds")
@click.pass_context
def cli(ctx, verbose, list_kinds):
    """
    Welcome to the PyEnlarge CLI program!

    This program runs batch experiments on random times in Brownian and
    Poisson markets. It uses the PyEnlarge library behind the scenes.
    """
    # set config
    ctx.obj = Config(verbose=verbose)

    # evaluate options
    if (ctx.invoked_subcommand is None):
        if (list_kinds is True):
            # evaluate --list-kinds
            for kind in pyenlarge.random_times.classes.random_time_spec.KIND_PARAMETERS.keys():
                parameters = pyenlarge.random_times.kind_parameters(kind)
                click.echo("%-40s %s" % (kind, ", ".join(parameters) if len(parameters) > 0 else "-"))
        else:
            # no options called, output the help
            click.echo("""Welcome to the PyEnlarge CLI program!

This program runs batch experiments on random times in Brownian and
Poisson markets. It uses the PyEnlarge library behind the scenes.

To get started with a configuration file, type:

  $> enlarge-cli config-template --outfile experiment.cfg

To learn more about usage, type:

  $> enlarge-cli --help
""")
    else:
        # subcommand was called, move on to that
        pass


# add sub commands
cli.add_command(simulation_commands.simulate)
cli.add_command(simulation_commands.build_tables)
cli.add_command(verification_commands.verify_arbitrage)
cli.add_command(verification_commands.verify_deflator)
cli.add_command(verification_commands.verify_honest)
cli.add_command(verification_commands.run)
cli.add_command(verification_commands.convergence)
cli.add_command(verification_commands.tabulate)
cli.add_command(verification_commands.config_template)
