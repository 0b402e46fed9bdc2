#!/usr/bin/env python3
"""
severi - exact Severi degrees of rational curves on P2, P1xP1 and F_n.

Usage:
    severi count --surface p2 --class 3
    severi table --surface f2 --max-c 3 --max-f 4 --format csv
    severi verify-2c --n 1 --through 100
    severi cache --load n.jsonl --save n.jsonl table --surface q --max-c 4 --max-f 4
"""
import logging
import sys
from fractions import Fraction

import click
from rich.console import Console
from rich.logging import RichHandler

from . import __version__
from .checks_engine import load_checks, run_checks, worst_failure
from .config import get_data_path, load_settings
from .exceptions import MissingDegreeError, SeveriError
from .fn2c import altsum_2c, closed_2c, genfunc_2c, ledger_2c, oracle_2c
from .fngeneral import TangentialDegreeTable, fn2_diagnostic, theorem_fn_rhs
from .lattice import Eligibility, SurfaceKind, eligibility, parse_class, parse_surface
from .recursion import NTable, f2_balance, f2_N, resolve_N
from .reporters import print_check_report, render_balance, render_ledger, render_rows, to_json
from .store import load_table, save_table

logger = logging.getLogger("severi")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_MISSING = 3

FORMATS = click.Choice(["text", "json", "csv"])


def _setup_logging(level_name, verbose):
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, level_name)
    handler = RichHandler(console=Console(stderr=True), show_path=False, markup=False)
    root = logging.getLogger("severi")
    root.handlers[:] = [handler]
    root.setLevel(level)
    root.propagate = False


def _table(ctx):
    return ctx.obj["table"]


def _format(ctx, fmt):
    return fmt or ctx.obj["settings"].output_format


def _load_tangential(ctx, stream):
    """Merge an external N_i table into the working table."""
    table = _table(ctx)
    if stream is not None:
        table.merge(load_table(stream))
    return TangentialDegreeTable(table)


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              help="Settings YAML (defaults to $SEVERI_CONFIG, then the packaged settings)")
@click.option("-v", "--verbose", count=True, help="Log progress to stderr (-vv for debug)")
@click.version_option(__version__, "--version", prog_name="severi-degrees",
                      message="%(prog)s v%(version)s")
@click.pass_context
def cli(ctx, config_path, verbose):
    """Severi degrees of rational curves on P2, P1xP1 and Hirzebruch surfaces.

    Classes are comma-separated coordinates: "3" on p2, "a,b" on q,
    "alpha,beta" for alpha*C + beta*F on f<n>.
    """
    settings = load_settings(config_path)
    _setup_logging(settings.log_level, verbose)
    if sys.getrecursionlimit() < settings.recursion_limit:
        sys.setrecursionlimit(settings.recursion_limit)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings
    ctx.obj.setdefault("table", NTable())


@click.command()
@click.option("--surface", "surface_tag", required=True, help="p2, q or f<n>")
@click.option("--class", "class_text", required=True, help="Class coordinates, e.g. 2,0")
@click.option("--tangency", "i", type=click.IntRange(min=1), default=1, show_default=True,
              help="Tangency index i of N_i(D)")
@click.option("--tangential", type=click.File("rb"), default=None,
              help="Store file with externally supplied N_i values")
@click.pass_context
def count(ctx, surface_tag, class_text, i, tangential):
    """Print N(D), or N_i(D) with --tangency."""
    surface = parse_surface(surface_tag)
    d = parse_class(surface, class_text)
    if i == 1 and tangential is None:
        value = resolve_N(surface, d, _table(ctx))
    else:
        value = _load_tangential(ctx, tangential).lookup(d, i)
    click.echo(str(value))


def _table_classes(surface, max_c, max_f):
    if surface.kind is SurfaceKind.PLANE:
        return [surface.cls(a) for a in range(1, max_c + 1)]
    return [surface.cls(a, b)
            for a in range(max_c + 1) for b in range(max_f + 1) if (a, b) != (0, 0)]


@click.command(name="table")
@click.option("--surface", "surface_tag", default="f2", show_default=True, help="p2, q or f<n>")
@click.option("--max-c", type=click.IntRange(min=0), required=True,
              help="Largest first coordinate (the degree on p2)")
@click.option("--max-f", type=click.IntRange(min=0), default=0, show_default=True,
              help="Largest second coordinate (ignored on p2)")
@click.option("--format", "fmt", type=FORMATS, default=None, help="Output format")
@click.pass_context
def table_cmd(ctx, surface_tag, max_c, max_f, fmt):
    """Print N for every class in a coordinate box, in sorted order."""
    surface = parse_surface(surface_tag)
    table = _table(ctx)
    rows = []
    for d in _table_classes(surface, max_c, max_f):
        kind = eligibility(d)
        if kind is Eligibility.EXCLUDED:
            continue
        try:
            value = resolve_N(surface, d, table)
        except MissingDegreeError as e:
            logger.info("%s", e)
            rows.append([str(d), ",".join(map(str, d.coords)), None, "missing"])
            continue
        entry = table.entry(d)
        source = entry.provenance.value if entry is not None else "zero"
        rows.append([str(d), ",".join(map(str, d.coords)), value, source])
    click.echo(render_rows(["class", "coords", "N", "source"], rows, _format(ctx, fmt),
                           title=f"Severi degrees on {surface.tag}"), nl=False)


@click.command(name="verify-2c")
@click.option("--n", "n_from", type=click.IntRange(min=1), required=True, help="First n")
@click.option("--through", "n_to", type=click.IntRange(min=1), default=None,
              help="Last n (defaults to --n)")
@click.option("--format", "fmt", type=FORMATS, default=None, help="Output format")
@click.pass_context
def verify_2c(ctx, n_from, n_to, fmt):
    """Check that every route to N(2C) on F_n agrees, exit 2 on a mismatch."""
    n_to = n_from if n_to is None else n_to
    if n_to < n_from:
        raise click.BadParameter(f"--through {n_to} is below --n {n_from}", param_hint="--through")
    rows = []
    mismatches = 0
    for n in range(n_from, n_to + 1):
        values = [closed_2c(n), altsum_2c(n), genfunc_2c(n), oracle_2c(n)]
        recursion = None
        if n == 2:
            s = parse_surface("f2")
            recursion = f2_N(2 * s.C, _table(ctx))
            values.append(recursion)
        ok = len(set(values)) == 1
        if not ok:
            mismatches += 1
            logger.warning("routes disagree for 2C on F%d: %s", n, values)
        rows.append([n] + values[:4] + [recursion, "ok" if ok else "MISMATCH"])
    headers = ["n", "closed", "altsum", "genfunc", "ledger", "recursion", "status"]
    click.echo(render_rows(headers, rows, _format(ctx, fmt), title="N(2C) on F_n"), nl=False)
    if mismatches:
        click.echo(f"{mismatches} mismatch(es) between routes", err=True)
        ctx.exit(EXIT_MISMATCH)


@click.command()
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--format", "fmt", type=FORMATS, default=None, help="Output format")
@click.pass_context
def ledger(ctx, n, fmt):
    """Dump the reducible fibres behind N(2C) on F_n, case by case."""
    click.echo(render_ledger(ledger_2c(n), _format(ctx, fmt)), nl=False)


@click.command(name="fn-rhs")
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--class", "class_text", required=True, help="Class coordinates on F_n, e.g. 2,0")
@click.option("--tangential", type=click.File("rb"), default=None,
              help="Store file with externally supplied N_i values")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default=None)
@click.pass_context
def fn_rhs(ctx, n, class_text, tangential, fmt):
    """Evaluate the right-hand side of the general F_n formula."""
    d = parse_class(parse_surface(f"f{n}"), class_text)
    tangential_table = _load_tangential(ctx, tangential)
    rhs = theorem_fn_rhs(d, n, tangential_table)
    doc = {"class": str(d), "n": n, "rhs": rhs}
    if n == 2:
        doc["diagnostic"] = fn2_diagnostic(d, tangential_table).to_dict()
    if _format(ctx, fmt) == "json":
        click.echo(to_json(doc))
        return
    click.echo(f"RHS = {rhs}")
    click.echo(f"RHS/n = {Fraction(rhs, n)}")
    if n == 2:
        diag = doc["diagnostic"]
        verdict = "agrees" if diag["agrees"] else f"differs by {diag['discrepancy']}"
        click.echo(f"F2 recursion N = {diag['recursion']} ({verdict})")


@click.command()
@click.option("--class", "class_text", required=True, help="Class coordinates on F2, e.g. 2,0")
@click.option("--format", "fmt", type=FORMATS, default=None, help="Output format")
@click.pass_context
def balance(ctx, class_text, fmt):
    """Tabulate zeroes and poles of the cross-ratio for a class on F2."""
    d = parse_class(parse_surface("f2"), class_text)
    result = f2_balance(d, _table(ctx))
    click.echo(render_balance(result, _format(ctx, fmt)), nl=False)
    if not result.balanced:
        ctx.exit(EXIT_MISMATCH)


@click.command()
@click.option("--checks", "check_files", multiple=True, type=click.Path(exists=True, dir_okay=False),
              help="Checks YAML (can be repeated; defaults to the packaged known values)")
@click.option("--output", type=click.Choice(["console", "json"]), default="console")
@click.option("--fail-level", type=click.Choice(["info", "warning", "critical"]), default="critical",
              show_default=True, help="Exit 2 if a check with this severity or higher fails")
@click.pass_context
def check(ctx, check_files, output, fail_level):
    """Run known-value checks against the recursions and closed forms."""
    settings = ctx.obj["settings"]
    if not check_files:
        check_files = [settings.checks_file or str(get_data_path("checks/known_values.yaml"))]
    checks = load_checks(list(check_files))
    logger.info("Loaded %d checks", len(checks))
    results = run_checks(checks, _table(ctx))
    print_check_report(results, output)
    if worst_failure(results, fail_level):
        click.echo(f"Checks failed at severity {fail_level} or above", err=True)
        ctx.exit(EXIT_MISMATCH)


@click.group()
@click.option("--load", "load_path", type=click.Path(dir_okay=False), default=None,
              help="Store file to seed the table from (skipped if absent)")
@click.option("--save", "save_path", type=click.Path(dir_okay=False), default=None,
              help="Store file to write the table to afterwards")
@click.pass_context
def cache(ctx, load_path, save_path):
    """Thread a persistent NTable through any command."""
    table = _table(ctx)
    if load_path:
        try:
            with open(load_path, "rb") as f:
                table.merge(load_table(f))
        except FileNotFoundError:
            logger.info("No cache at %s yet; starting empty", load_path)

    if save_path:
        def _save():
            with open(save_path, "wb") as f:
                save_table(table, f)
        ctx.call_on_close(_save)


COMMANDS = (count, table_cmd, verify_2c, ledger, fn_rhs, balance, check)
for _command in COMMANDS:
    cli.add_command(_command)
    cache.add_command(_command)
cli.add_command(cache)


def run(argv=None):
    """Invoke the CLI and map the outcome to an exit status."""
    try:
        rv = cli.main(args=argv, prog_name="severi", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except MissingDegreeError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_MISSING
    except SeveriError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_USAGE
    return rv if isinstance(rv, int) else EXIT_OK


def cli_entry():
    sys.exit(run())


if __name__ == "__main__":
    cli_entry()
