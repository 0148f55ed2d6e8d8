#!/usr/bin/env python
# encoding: utf-8

import sys
from textwrap import dedent

import click
import logbook
import logbook.more

from .__version__ import __version__
from ._config import ConfigKey, app_config_mgr, load_app_configs, resolve_settings
from ._const import MAX_VERBOSITY_LEVEL, PROGRAM_NAME
from ._enum import Context, DecisionMode, GraphFormat, SearchTarget
from ._logger import set_log_level
from .subcommand import (
    AnalyzeCommand,
    ConstructCommand,
    CrosscheckCommand,
    ScanCommand,
    WalkCommand,
)


CONTEXT_SETTINGS = dict(help_option_names=["-h", "--help"], obj={})
QUIET_LOG_LEVEL = logbook.NOTSET
COMMAND_EPILOG = dedent(
    """\
    Exit codes: 0 success, 1 property not found, 2 parse/usage error,
    3 internal invariant violation.
    """
)

_graph_format_option = click.option(
    "-f",
    "--format",
    "format_name",
    type=click.Choice([graph_format.value for graph_format in GraphFormat]),
    default=GraphFormat.AUTO.value,
    show_default=True,
    help="Format of GRAPH when it is a file path.",
)
_encoding_option = click.option(
    "--encoding", metavar="ENCODING", default="utf-8", help="Encoding to read input files."
)
_json_option = click.option(
    "--json", "json_path", metavar="PATH", help="Write the JSON report to PATH."
)


def make_logger(channel_name, log_level):
    import appconfigpy

    logger = logbook.Logger(channel_name)

    if log_level == QUIET_LOG_LEVEL:
        logger.disable()

    logger.level = log_level
    set_log_level(log_level)
    appconfigpy.set_log_level(log_level)

    return logger


def initialize_log_handler(log_level):
    from logbook.more import ColorizedStderrHandler

    debug_format_str = (
        "[{record.level_name}] {record.channel} {record.func_name} "
        "({record.lineno}): {record.message}"
    )
    if log_level == logbook.DEBUG:
        info_format_str = debug_format_str
    else:
        info_format_str = "[{record.level_name}] {record.channel}: {record.message}"

    ColorizedStderrHandler(level=logbook.DEBUG, format_string=debug_format_str).push_application()
    ColorizedStderrHandler(level=logbook.INFO, format_string=info_format_str).push_application()


def setup(ctx, subcommand):
    initialize_log_handler(ctx.obj[Context.LOG_LEVEL])
    logger = make_logger("{:s} {:s}".format(PROGRAM_NAME, subcommand), ctx.obj[Context.LOG_LEVEL])
    settings = resolve_settings(
        logger,
        load_app_configs(logger),
        {
            ConfigKey.GROUP_TOLERANCE: ctx.obj[Context.GROUP_TOLERANCE],
            ConfigKey.VERDICT_TOLERANCE: ctx.obj[Context.VERDICT_TOLERANCE],
            ConfigKey.AUTOMORPHISM_LIMIT: ctx.obj[Context.AUTOMORPHISM_LIMIT],
            ConfigKey.DECOMPOSITION_LIMIT: ctx.obj[Context.DECOMPOSITION_LIMIT],
        },
    )

    return (logger, settings)


def finalize(command, json_path):
    command.write_completion_message()

    if json_path:
        command.write_report(json_path)

    return command.get_return_code()


@click.group(context_settings=CONTEXT_SETTINGS)
@click.version_option(version=__version__, message="%(prog)s %(version)s")
@click.option(
    "--group-tolerance",
    type=float,
    metavar="TOL",
    help="Relative tolerance to merge numeric eigenvalues.",
)
@click.option(
    "--verdict-tolerance",
    type=float,
    metavar="TOL",
    help="Absolute tolerance on idempotent entries for numeric verdicts.",
)
@click.option(
    "--automorphism-limit",
    type=int,
    metavar="N",
    help="Largest graph order for automorphism enumeration.",
)
@click.option(
    "--decomposition-limit",
    type=int,
    metavar="N",
    help="Largest graph order for dense spectral decompositions.",
)
@click.option("-v", "--verbose", "verbosity_level", count=True)
@click.option("--debug", "log_level", flag_value=logbook.DEBUG, help="For debug print.")
@click.option(
    "-q",
    "--quiet",
    "log_level",
    flag_value=QUIET_LOG_LEVEL,
    help="Suppress execution log messages.",
)
@click.pass_context
def cmd(
    ctx,
    group_tolerance,
    verdict_tolerance,
    automorphism_limit,
    decomposition_limit,
    verbosity_level,
    log_level,
):
    ctx.obj[Context.GROUP_TOLERANCE] = group_tolerance
    ctx.obj[Context.VERDICT_TOLERANCE] = verdict_tolerance
    ctx.obj[Context.AUTOMORPHISM_LIMIT] = automorphism_limit
    ctx.obj[Context.DECOMPOSITION_LIMIT] = decomposition_limit
    ctx.obj[Context.VERBOSITY_LEVEL] = min(verbosity_level, MAX_VERBOSITY_LEVEL)
    ctx.obj[Context.LOG_LEVEL] = logbook.INFO if log_level is None else log_level


@cmd.command(epilog=COMMAND_EPILOG)
@click.argument("graph", type=str)
@click.option("--pair", nargs=2, type=int, metavar="A B", help="Analyze the pair (A, B).")
@click.option("--all-pairs", is_flag=True, help="Analyze every unordered pair of vertices.")
@click.option(
    "--exact", "mode", flag_value=DecisionMode.EXACT.value, help="Report exact verdicts only."
)
@click.option(
    "--numeric",
    "mode",
    flag_value=DecisionMode.NUMERIC.value,
    help="Report numeric verdicts only.",
)
@click.option(
    "--both",
    "mode",
    flag_value=DecisionMode.BOTH.value,
    default=True,
    help="Report exact and numeric verdicts (default).",
)
@_graph_format_option
@_encoding_option
@_json_option
@click.pass_context
def analyze(ctx, graph, pair, all_pairs, mode, format_name, encoding, json_path):
    """
    Decide cospectrality, parallelism and strong cospectrality of vertex pairs.

    GRAPH: a graph6/edgelist file path or an inline graph6 string.
    """

    if bool(pair) == all_pairs:
        raise click.UsageError("specify exactly one of '--pair A B' and '--all-pairs'.")

    logger, settings = setup(ctx, "analyze")
    command = AnalyzeCommand(
        logger,
        settings,
        verbosity_level=ctx.obj[Context.VERBOSITY_LEVEL],
        format_name=format_name,
        encoding=encoding,
    )
    command.analyze(graph, [tuple(pair)] if pair else None, mode)

    if not json_path and command.get_success_count() > 0:
        click.echo(command.report.dumps())

    sys.exit(finalize(command, json_path))


@cmd.command(epilog=COMMAND_EPILOG)
@click.argument("file_path", metavar="FILE", type=str)
@click.option(
    "--find",
    "target",
    type=click.Choice([target.value for target in SearchTarget]),
    default=SearchTarget.SC_PAIRS.value,
    show_default=True,
    help="Kind of vertex pairs to search for.",
)
@click.option(
    "-j",
    "--jobs",
    type=click.IntRange(min=1),
    default=1,
    show_default=True,
    help="Number of worker processes.",
)
@click.option(
    "--expect-some", is_flag=True, help="Exit with code 1 when no pair is found in FILE."
)
@_encoding_option
@_json_option
@click.pass_context
def scan(ctx, file_path, target, jobs, expect_some, encoding, json_path):
    """
    Search every graph of a graph6 file (one graph per line) for vertex pairs.
    Prints one line per graph: graph6, pair count and the vertex classes.
    """

    logger, settings = setup(ctx, "scan")
    command = ScanCommand(
        logger,
        settings,
        verbosity_level=ctx.obj[Context.VERBOSITY_LEVEL],
        jobs=jobs,
        expect_some=expect_some,
    )
    command.scan(file_path, target)

    sys.exit(finalize(command, json_path))


@cmd.group(epilog=COMMAND_EPILOG)
def construct():
    """
    Build graphs that contain a strongly cospectral pair by construction.
    """


@construct.command("join-path", epilog=COMMAND_EPILOG)
@click.argument("x", type=str)
@click.argument("u", type=int)
@click.argument("y", type=str)
@click.argument("v", type=int)
@click.argument("path_len", metavar="LEN", type=int)
@click.option("-o", "--out", "out_path", metavar="PATH", help="Write the graph6 line to PATH.")
@_json_option
@click.pass_context
def join_path(ctx, x, u, y, v, path_len, out_path, json_path):
    """
    Join vertex U of X to vertex V of Y by a path with LEN edges.
    """

    logger, settings = setup(ctx, "construct")
    command = ConstructCommand(
        logger, settings, verbosity_level=ctx.obj[Context.VERBOSITY_LEVEL], out_path=out_path
    )
    command.join_path(x, u, y, v, path_len)

    sys.exit(finalize(command, json_path))


@construct.command("rabbit-ear", epilog=COMMAND_EPILOG)
@click.argument("x", type=str)
@click.argument("a", type=int)
@click.option("-o", "--out", "out_path", metavar="PATH", help="Write the graph6 line to PATH.")
@_json_option
@click.pass_context
def rabbit_ear(ctx, x, a, out_path, json_path):
    """
    Attach two pendant vertices to vertex A of X.
    """

    logger, settings = setup(ctx, "construct")
    command = ConstructCommand(
        logger, settings, verbosity_level=ctx.obj[Context.VERBOSITY_LEVEL], out_path=out_path
    )
    command.rabbit_ear(x, a)

    sys.exit(finalize(command, json_path))


@cmd.command(epilog=COMMAND_EPILOG)
@click.argument("graph", type=str)
@click.option("--from", "a", type=int, required=True, metavar="A", help="Start vertex.")
@click.option("--to", "b", type=int, required=True, metavar="B", help="Target vertex.")
@click.option("--tmax", "t_max", type=float, required=True, metavar="T", help="End of the scan.")
@click.option(
    "--steps", type=click.IntRange(min=2), required=True, metavar="N", help="Grid points."
)
@click.option("--csv", "csv_path", metavar="PATH", help="Write the walk trace to PATH.")
@click.option("--certify", is_flag=True, help="Issue closeness certificates at the best scan time.")
@_graph_format_option
@_encoding_option
@_json_option
@click.pass_context
def walk(ctx, graph, a, b, t_max, steps, csv_path, certify, format_name, encoding, json_path):
    """
    Scan |U(t)[A, B]| of the continuous-time quantum walk on GRAPH over [0, T].

    GRAPH: a graph6/edgelist file path or an inline graph6 string.
    """

    logger, settings = setup(ctx, "walk")
    command = WalkCommand(
        logger,
        settings,
        verbosity_level=ctx.obj[Context.VERBOSITY_LEVEL],
        format_name=format_name,
        encoding=encoding,
    )
    command.walk(graph, a, b, t_max, steps, csv_path=csv_path, certify=certify)

    sys.exit(finalize(command, json_path))


@cmd.command(epilog=COMMAND_EPILOG)
@click.option(
    "--max-n",
    type=click.IntRange(1, 7),
    default=6,
    show_default=True,
    help="Largest order of the exhaustive graph corpus.",
)
@click.option("--seed", type=int, default=0, show_default=True, help="Random seed.")
@click.option(
    "--random",
    "random_count",
    type=click.IntRange(min=0),
    default=20,
    show_default=True,
    help="Number of random graphs with 8 to 16 vertices.",
)
@click.option(
    "--jacobi",
    "jacobi_count",
    type=click.IntRange(min=0),
    default=200,
    show_default=True,
    help="Number of random resolvent-minor evaluations.",
)
@_json_option
@click.pass_context
def crosscheck(ctx, max_n, seed, random_count, jacobi_count, json_path):
    """
    Run the exact-versus-numeric agreement suites and report pass/fail counts.
    """

    logger, settings = setup(ctx, "crosscheck")
    command = CrosscheckCommand(logger, settings, verbosity_level=ctx.obj[Context.VERBOSITY_LEVEL])
    command.crosscheck(max_n, seed, random_count, jacobi_count)

    sys.exit(finalize(command, json_path))


@cmd.command()
@click.pass_context
def configure(ctx):
    """
    Configure the following application settings:

    (1) Tolerance to merge numeric eigenvalues.
    (2) Tolerance for numeric verdicts.
    (3) Largest graph order for automorphism enumeration.
    (4) Largest graph order for spectral decompositions.

    Configurations are written to '~/.specwalk'.
    You can remove these settings by deleting '~/.specwalk'.
    """

    logger = make_logger("{:s} configure".format(PROGRAM_NAME), ctx.obj[Context.LOG_LEVEL])

    logger.debug("{} configuration file existence: {}".format(PROGRAM_NAME, app_config_mgr.exists))

    sys.exit(app_config_mgr.configure())


if __name__ == "__main__":
    cmd()
