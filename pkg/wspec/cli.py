"""
cli.py
------

The `wspec` command line.

Report commands print a console table (or JSON with --json) on stdout and
can also write the CSV form with --csv PATH. Exit status: 0 when the report
passes, 1 when any row fails or the computation is refused, 2 on usage
errors (bad options, unknown weight function, out-of-range orders).
"""

import functools
import sys

import click

from wspec import __version__
from wspec.exceptions import InvalidParameterError, WeightFunctionError, WspecError
from wspec.logger import configure_logging, logger
from wspec.models.graph_io import read_graph, write_graphs
from wspec.models.matrix import dump_matrix
from wspec.models.trees import describe_tree
from wspec.models.weight_function import (
    catalog,
    resolve_weight_function,
    topological_index,
)
from wspec.services import experiments
from wspec.services.enumeration import count_free_trees, free_trees
from wspec.services.report_writer import (
    to_csv,
    to_json,
    to_property_lines,
    to_text,
)
from wspec.services.spectral_service import (
    build_weighted_adjacency,
    cross_checked_radius,
    eigen_spectrum,
)


def library_errors(command):
    """Turn library errors into click usage errors (2) or failures (1)."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (InvalidParameterError, WeightFunctionError) as e:
            raise click.UsageError(str(e)) from e
        except WspecError as e:
            logger.error(f"{type(e).__name__}: {e}")
            click.echo(f"Error: {e}", err=True)
            sys.exit(1)

    return wrapper


def function_options(command):
    """--f NAME with the optional --alpha / --p parameters."""
    command = click.option(
        "--p", "p", type=float, default=None, help="p_sombor exponent (default 3)."
    )(command)
    command = click.option(
        "--alpha", type=float, default=None,
        help="general_sum_connectivity exponent (default 3).",
    )(command)
    command = click.option(
        "--f", "f_name", required=True,
        help="Catalog name (see `wspec catalog`) or an expression in x and y.",
    )(command)
    return command


def output_options(command):
    command = click.option(
        "--csv", "csv_path", type=click.Path(dir_okay=False, writable=True),
        default=None, help="Also write the report as CSV to PATH.",
    )(command)
    command = click.option(
        "--json", "as_json", is_flag=True, help="Print the report as JSON."
    )(command)
    return command


def emit(report, as_json, csv_path, render=to_text):
    """Print a report, optionally save its CSV, and exit with its verdict."""
    if csv_path:
        with open(csv_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(to_csv(report))
        logger.info(f"Report written to {csv_path}")
    click.echo(to_json(report) if as_json else render(report), nl=False)
    sys.exit(0 if report.passed else 1)


@click.group()
@click.version_option(__version__, prog_name="wspec")
@click.option("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR.")
def cli(log_level):
    """Spectral radius experiments for degree-weighted adjacency matrices."""
    if log_level:
        configure_logging(level=log_level)


@cli.command()
@click.option("--tolerance", type=float, default=None, help="Cell tolerance (default 0.1).")
@output_options
@library_errors
def table1(tolerance, as_json, csv_path):
    """Reference grid of five functions on S_15 and the double stars of order 15."""
    emit(experiments.run_table1(tolerance), as_json, csv_path)


@cli.command()
@function_options
@click.option("--n-lo", type=int, default=4, show_default=True)
@click.option("--n-hi", type=int, default=10, show_default=True)
@click.option(
    "--family", type=click.Choice(["all", "double_star"]), default="all",
    show_default=True,
)
@click.option("--jobs", type=click.IntRange(min=1), default=None)
@output_options
@library_errors
def scan(f_name, alpha, p, n_lo, n_hi, family, jobs, as_json, csv_path):
    """Trees of smallest and largest rho for every order in a range."""
    f = resolve_weight_function(f_name, alpha, p)
    emit(experiments.run_extremal_scan(f, n_lo, n_hi, family, jobs), as_json, csv_path)


@cli.command()
@function_options
@click.option("--n-lo", type=int, default=4, show_default=True)
@click.option("--n-hi", type=int, default=10, show_default=True)
@click.option("--jobs", type=click.IntRange(min=1), default=None)
@output_options
@library_errors
def maxfamily(f_name, alpha, p, n_lo, n_hi, jobs, as_json, csv_path):
    """Check that the tree of largest rho is a star or a double star."""
    f = resolve_weight_function(f_name, alpha, p)
    emit(experiments.run_star_or_double_star(f, n_lo, n_hi, jobs), as_json, csv_path)


@cli.command()
@function_options
@click.option("--n", type=int, required=True)
@click.option("--trials", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@output_options
@library_errors
def kelmans(f_name, alpha, p, n, trials, seed, as_json, csv_path):
    """Sample the Kelmans operation on random graphs and trees."""
    f = resolve_weight_function(f_name, alpha, p)
    emit(experiments.run_kelmans_check(f, n, trials, seed), as_json, csv_path)


@cli.command()
@function_options
@click.option("--n", type=int, required=True)
@click.option("--trials", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@output_options
@library_errors
def collapse(f_name, alpha, p, n, trials, seed, as_json, csv_path):
    """Sample star collapse of pendant trees."""
    f = resolve_weight_function(f_name, alpha, p)
    emit(experiments.run_collapse_check(f, n, trials, seed), as_json, csv_path)


@cli.command()
@function_options
@click.option("--n", type=int, required=True)
@output_options
@library_errors
def chain(f_name, alpha, p, n, as_json, csv_path):
    """rho along the double stars of order n towards the star."""
    f = resolve_weight_function(f_name, alpha, p)
    emit(experiments.run_double_star_chain(f, n), as_json, csv_path)


@cli.command()
@function_options
@click.option("--n-hi", type=int, default=30, show_default=True)
@output_options
@library_errors
def pathbounds(f_name, alpha, p, n_hi, as_json, csv_path):
    """Path upper bound plus the lower bounds against the path."""
    f = resolve_weight_function(f_name, alpha, p)
    emit(experiments.run_path_bounds(f, n_hi), as_json, csv_path)


@cli.command()
@function_options
@click.option("--delta", type=int, default=None, help="Grid bound (default 50).")
@output_options
@library_errors
def props(f_name, alpha, p, delta, as_json, csv_path):
    """Increasing, convex, restricted and property P on the integer grid."""
    f = resolve_weight_function(f_name, alpha, p)
    emit(
        experiments.run_property_report(f, delta), as_json, csv_path,
        render=to_property_lines,
    )


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--emit", "emit_graphs", is_flag=True, help="Write every tree in graph text format.")
@library_errors
def trees(n, emit_graphs):
    """Count (or emit) the trees of order n up to isomorphism."""
    if emit_graphs:
        for chunk in write_graphs(free_trees(n)):
            click.echo(chunk, nl=False)
    else:
        click.echo(count_free_trees(n))


@cli.command(name="catalog")
def catalog_command():
    """List the catalog weight functions and their declared properties."""
    for f in catalog():
        flags = ",".join(sorted(f.declared_flags))
        click.echo(f"{f.label:32} {f.formula:18} {flags}")


@cli.command()
@function_options
@click.argument("graph_file", type=click.File("r"))
@click.option("--spectrum", is_flag=True, help="Also print every eigenvalue.")
@click.option("--dump", is_flag=True, help="Print A_f(G) in the matrix dump format.")
@library_errors
def radius(f_name, alpha, p, graph_file, spectrum, dump):
    """rho(A_f(G)) of a graph in text format (use - for stdin)."""
    f = resolve_weight_function(f_name, alpha, p)
    g = read_graph(graph_file.read())
    m = build_weighted_adjacency(g, f)
    if dump:
        click.echo(dump_matrix(m), nl=False)
    label = describe_tree(g) if g.is_tree() else f"graph(n={g.n}, m={g.size})"
    click.echo(f"{label} f={f.label} rho={cross_checked_radius(m):.12g} "
               f"TI={topological_index(g, f):.12g}")
    if spectrum:
        click.echo(" ".join(f"{v:.12g}" for v in eigen_spectrum(m)))


def main():
    cli(prog_name="wspec")  # pylint: disable=no-value-for-parameter


if __name__ == "__main__":
    main()
