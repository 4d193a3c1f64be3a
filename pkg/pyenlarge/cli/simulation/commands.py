import os
import sys
import csv
import click
import datetime
import humanize
import pyenlarge
from ..helpers import experiment_options, load_experiment_config, print_files


def __echo_helper(message, show_times=False):
    if (show_times is True):
        click.echo("[%s] %s" % (datetime.datetime.now(), message))
    else:
        click.echo(message)


@click.command("simulate", short_help="Simulate an ensemble and export it to CSV")
@experiment_options
@click.option("--azema", is_flag=True, help="Also export Z, Z~, A° and m of every path")
@click.pass_obj
def simulate(config, config_file, seed, n_paths, dt, output_dir, threads, azema):
    """
    Simulate the paths of an experiment and write paths.csv and
    realized_times.csv (plus azema.csv with --azema) to the output
    directory
    """
    try:
        # init
        experiment = load_experiment_config(config_file, seed=seed, n_paths=n_paths, dt=dt,
                                            output_dir=output_dir, threads=threads)
        model = experiment.market_model()
        spec = experiment.random_time()
        horizon = experiment.resolved_horizon()
        os.makedirs(experiment.output_dir, exist_ok=True)

        # simulate
        __echo_helper("Simulating %s paths of %s up to T=%.4g" % (humanize.intcomma(experiment.n_paths), model, horizon),
                      show_times=config.verbose)
        paths = pyenlarge.market.simulate_ensemble(model,
                                                   experiment.n_paths,
                                                   horizon,
                                                   experiment.seed,
                                                   dt=experiment.grid_step(),
                                                   threads=experiment.threads,
                                                   verbose=config.verbose)
        realized = pyenlarge.random_times.realize_many(spec, paths)

        # write
        filenames = [os.path.join(experiment.output_dir, "paths.csv"),
                     os.path.join(experiment.output_dir, "realized_times.csv")]
        pyenlarge.market.write_paths_csv(paths, filenames[0])
        pyenlarge.random_times.write_realized_csv(realized, filenames[1])
        if (azema is True):
            options = experiment.bundle_options()
            bundles = [pyenlarge.azema.azema_bundle(spec, path, **options) for path in paths]
            filenames.append(os.path.join(experiment.output_dir, "azema.csv"))
            pyenlarge.azema.write_azema_csv(bundles, filenames[-1])
    except pyenlarge.EnlargeException as e:
        click.echo("Error: %s" % (e))
        sys.exit(1)

    # output
    n_detected = len([r for r in realized if r.finite])
    __echo_helper("tau detected on %s of %s paths" % (humanize.intcomma(n_detected), humanize.intcomma(len(realized))),
                  show_times=config.verbose)
    print_files(filenames)


@click.command("build-tables", short_help="Build the Monte-Carlo tables of a model")
@experiment_options
@click.option("--sample-size", type=click.IntRange(min=1), help="Sample size of the tables")
@click.pass_obj
def build_tables(config, config_file, seed, n_paths, dt, output_dir, threads, sample_size):
    """
    Build the supremum law tables of a Poisson model (written to JSON
    cache files, the finite horizon one to table_cache when set) or the
    Emery table of a Brownian model (written to CSV)
    """
    try:
        # init
        experiment = load_experiment_config(config_file, seed=seed, n_paths=n_paths, dt=dt,
                                            output_dir=output_dir, threads=threads, sample_size=sample_size)
        model = experiment.market_model()
        os.makedirs(experiment.output_dir, exist_ok=True)
        filenames = []
        __echo_helper("Building tables of %s from %s samples" % (model, humanize.intcomma(experiment.sample_size)),
                      show_times=config.verbose)

        if (model.is_poisson):
            # supremum laws, finite and infinite horizon
            for kind in [pyenlarge.special_functions.SUP_KIND_FINITE_HORIZON,
                         pyenlarge.special_functions.SUP_KIND_INFINITE_HORIZON]:
                filename = os.path.join(experiment.output_dir, "sup_law_%s_%s.json" % (kind, model.model_hash()))
                if (kind == pyenlarge.special_functions.SUP_KIND_FINITE_HORIZON and experiment.table_cache is not None):
                    filename = experiment.table_cache
                pyenlarge.special_functions.sup_law_estimator(model,
                                                              kind,
                                                              sample_size=experiment.sample_size,
                                                              seed=experiment.table_seed,
                                                              cache_file=filename,
                                                              verbose=config.verbose)
                filenames.append(filename)
        else:
            # Emery function
            table = pyenlarge.special_functions.emery_table(sample_size=experiment.sample_size,
                                                            seed=experiment.table_seed,
                                                            sigma=model.sigma,
                                                            verbose=config.verbose)
            filename = os.path.join(experiment.output_dir, "emery_table.csv")
            with open(filename, "w", newline="") as fp:
                writer = csv.writer(fp)
                writer.writerow(["u", "phi", "std_error"])
                for i in range(0, len(table.u_grid)):
                    writer.writerow([repr(float(table.u_grid[i])), repr(float(table.values[i])), repr(float(table.std_errors[i]))])
            filenames.append(filename)
            phi, phi_se = table.evaluate(1.0)
            __echo_helper("Phi(1) = %.6f +/- %.6f" % (phi, phi_se), show_times=config.verbose)
    except pyenlarge.EnlargeException as e:
        click.echo("Error: %s" % (e))
        sys.exit(1)

    # output
    print_files(filenames)
