# -*- coding: utf-8 -*-

import logging
import time
import warnings

import click
import numpy as np

try:
    import matplotlib.pyplot as plt
except ImportError:
    _HAS_MPL = False
else:
    _HAS_MPL = True

from . import __version__, plot, read_scc, resolve
from .bench import bench as run_bench
from .errors import SccParseError
from .firep import compute_firep
from .generators import (
    FAMILIES,
    gen_degree_rips,
    gen_modified_wheel,
    gen_random,
    gen_star,
    gen_wheel,
    random_bifunction,
)
from .handlers import SccHandler
from .utils import parse_sizes
from .verify import (
    GRID_CAP,
    as_free,
    check_free_complex,
    check_quasi_iso,
    reports_to_json_lines,
)


logger = logging.getLogger("bifree")
logger.setLevel(logging.INFO)


class ParseFailure(click.ClickException):
    exit_code = 2


class BifreeGroup(click.Group):
    """Group that reports usage errors with exit code 1."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = 1
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = 1
            raise


class Config(object):
    def __init__(self):
        self.config = {}

    def set_config(self, key, value):
        self.config[key] = value


pass_config = click.make_pass_decorator(Config)


def _read(stream, validate=True):
    try:
        return read_scc(stream, validate=validate)
    except SccParseError as e:
        raise ParseFailure(f"{getattr(stream, 'name', '<input>')}: {e}")


@click.group(name="bifree", cls=BifreeGroup)
@click.version_option(version=__version__)
@click.option("-q", "--quiet", is_flag=True, help="Suppress logs and warnings.")
@click.pass_context
def cli(ctx, *args, **kwargs):
    """bifree: free resolutions of k-critical bifiltrations.

    Outputs are free but not minimized; feed them to a minimal
    presentation tool for that.
    """
    ctx.obj = Config()
    for key, value in kwargs.items():
        ctx.obj.set_config(key, value)


@cli.command("resolve")
@click.option(
    "-a",
    "--algorithm",
    default="path",
    type=click.Choice(["path", "logpath"]),
    help="Resolution method.",
)
@click.option(
    "--stats",
    type=click.Path(dir_okay=False, writable=True),
    help="Write run statistics as JSON to this file.",
)
@click.option("--check", is_flag=True, help="Verify every commutation identity.")
@click.argument("input", type=click.File("r"))
@click.argument("output", type=click.File("w"))
@pass_config
def resolve_command(c, *args, **kwargs):
    """Compute a free chain complex equivalent to INPUT."""
    quiet = c.config["quiet"]
    start = time.perf_counter()
    complex = _read(kwargs["input"])
    read_time = time.perf_counter() - start

    out = resolve(
        complex,
        algorithm=kwargs["algorithm"],
        suppress_stdout=quiet,
        check=kwargs["check"],
    )

    start = time.perf_counter()
    SccHandler.write(out, kwargs["output"])
    out.stats.io_time = read_time + time.perf_counter() - start

    if not quiet:
        logger.info(f"Wrote {sum(out.basis_counts)} basis elements, {out.nnz()} nonzeros")
    if kwargs["stats"] is not None:
        out.stats.to_json(kwargs["stats"])
        if not quiet:
            logger.info("\n" + out.stats.summary())


@cli.command("firep")
@click.option("-d", "--dim", type=int, required=True, help="Homology degree.")
@click.argument("input", type=click.File("r"))
@click.argument("output", type=click.File("w"))
@pass_config
def firep_command(c, *args, **kwargs):
    """Compute a free implicit representation of one homology module."""
    complex = _read(kwargs["input"])
    try:
        firep = compute_firep(complex, kwargs["dim"], suppress_stdout=c.config["quiet"])
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--dim")
    SccHandler.write_firep(firep, kwargs["output"])


@cli.group("generate", cls=BifreeGroup)
def generate():
    """Generate an instance and write it as scc2020."""


def _emit(build, output, **params):
    try:
        complex = build(**params)
    except ValueError as e:
        raise click.BadParameter(str(e))
    SccHandler.write(complex, output)


@generate.command("wheel")
@click.option("-l", "--l", "size", default=8, help="Even number of outer vertices.")
@click.argument("output", type=click.File("w"))
def generate_wheel(size, output):
    """Wheel whose center is l-critical."""
    _emit(gen_wheel, output, l=size)


@generate.command("star")
@click.option("-l", "--l", "size", default=8, help="Number of outer vertices.")
@click.argument("output", type=click.File("w"))
def generate_star(size, output):
    """Star with 2-critical edges."""
    _emit(gen_star, output, l=size)


@generate.command("modified-wheel")
@click.option("-l", "--l", "size", default=8, help="Even number of outer vertices.")
@click.argument("output", type=click.File("w"))
def generate_modified_wheel(size, output):
    """Wheel with pairwise incomparable edge and triangle grades."""
    _emit(gen_modified_wheel, output, l=size)


@generate.command("bifunction")
@click.option("-n", "--n", "size", default=20, help="Number of vertices.")
@click.option("-k", "--k", default=4, help="Criticality bound (at least 2).")
@click.option("-d", "--d", default=2, help="Dimension bound.")
@click.option("-s", "--seed", default=0, help="Random seed.")
@click.argument("output", type=click.File("w"))
def generate_bifunction(size, k, d, seed, output):
    """Pair of random monotone functions on a random clique complex."""
    _emit(random_bifunction, output, n_vertices=size, k=k, d=d, seed=seed)


@generate.command("degree-rips")
@click.option("-n", "--n", "size", default=20, help="Number of random points.")
@click.option("-d", "--d", default=2, help="Largest simplex dimension (at most 3).")
@click.option("-s", "--seed", default=0, help="Random seed.")
@click.option(
    "--points",
    type=click.Path(exists=True, dir_okay=False),
    help="Whitespace-separated point coordinates, one point per line.",
)
@click.argument("output", type=click.File("w"))
def generate_degree_rips(size, d, seed, points, output):
    """Degree-Rips bifiltration of a point set.

    The second coordinate is n - 1 - k for degree threshold k, so both
    coordinates grow along the filtration.
    """
    if points is None:
        points = np.random.default_rng(seed).random((size, 2))
    else:
        points = np.loadtxt(points, ndmin=2)
    _emit(gen_degree_rips, output, points=points, max_dim=d)


@generate.command("random")
@click.option("-n", "--n", "size", default=100, help="Number of cells.")
@click.option("-k", "--k", default=4, help="Criticality bound.")
@click.option("-d", "--d", default=2, help="Dimension bound.")
@click.option("-s", "--seed", default=0, help="Random seed.")
@click.option("--grid", default=8, help="Largest grid coordinate.")
@click.argument("output", type=click.File("w"))
def generate_random(size, k, d, seed, grid, output):
    """Random k-critical clique complex."""
    _emit(gen_random, output, n_cells=size, k=k, d=d, seed=seed, grid=grid)


@cli.command("verify")
@click.option(
    "--grid-cap",
    default=GRID_CAP,
    help="Largest number of grid grades to compare before sampling.",
)
@click.option("--json", "as_json", is_flag=True, help="Print JSON lines.")
@click.argument("input", type=click.File("r"))
@click.argument("output", type=click.File("r"))
@click.pass_context
def verify(ctx, grid_cap, as_json, input, output):
    """Check that OUTPUT is a free complex with the pointwise homology
    of INPUT. Exits with code 3 on a mismatch.
    """
    quiet = ctx.find_object(Config).config["quiet"]
    source = _read(input)
    target = _read(output, validate=False)
    if not target.is_free():
        raise ParseFailure(f"{getattr(output, 'name', '<output>')}: not 1-critical")
    target = as_free(target)

    structure = check_free_complex(target)
    with warnings.catch_warnings():
        if quiet:
            warnings.simplefilter("ignore")
        homology = check_quasi_iso(source, target, grid_cap=grid_cap)
    if as_json:
        click.echo(reports_to_json_lines(structure, homology), nl=False)
    else:
        click.echo(structure.to_text())
        click.echo(homology.to_text())
    if not (structure.ok and homology.ok):
        ctx.exit(3)


@cli.command("bench")
@click.option(
    "-f", "--family", type=click.Choice(FAMILIES), required=True, help="Instance family."
)
@click.option("--sizes", required=True, help="Comma-separated sizes. Example: 64,128,256")
@click.option("-k", "--k", default=4, help="Criticality bound.")
@click.option("-d", "--d", default=2, help="Dimension bound.")
@click.option("-s", "--seed", default=0, help="Random seed.")
@click.option("-r", "--repeat", default=3, help="Timed runs per instance.")
@click.option("-o", "--out", default="-", help="Output CSV file path.")
@click.option(
    "-plot", "--plot", "plot_file", help="Save an nnz scaling plot to this file."
)
@pass_config
def bench(c, *args, **kwargs):
    """Time both algorithms on generated instances."""
    if kwargs["plot_file"] is not None and not _HAS_MPL:
        raise ImportError("matplotlib is required for plotting.")
    try:
        sizes = parse_sizes(kwargs["sizes"])
    except ValueError:
        raise click.BadParameter(f"invalid sizes '{kwargs['sizes']}'", param_hint="--sizes")
    try:
        df = run_bench(
            kwargs["family"],
            sizes,
            repeat=kwargs["repeat"],
            k=kwargs["k"],
            d=kwargs["d"],
            seed=kwargs["seed"],
            suppress_stdout=c.config["quiet"],
        )
    except ValueError as e:
        raise click.BadParameter(str(e))

    if kwargs["out"] == "-":
        click.echo(df.to_csv(index=False), nl=False)
    else:
        df.to_csv(kwargs["out"], index=False)
    if kwargs["plot_file"] is not None:
        plot(df, kind="bench", filename=kwargs["plot_file"])
        plt.close("all")
