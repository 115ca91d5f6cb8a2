# -*- coding: utf-8 -*-
"""
Command line interface.

Exit codes: 0 on success, 1 when a consistency verdict fails, 2 for bad
input, 3 when a computation runs out of budget or does not stabilize.
"""

import argparse
import logging
import sys
from typing import List, Optional

from . import corpus
from ._version import __version__
from .config import Settings
from .curve import validate
from .curvefile import parse_curve
from .errors import ComputationError, InputError
from .filtration import FiltrationEngine
from .laurent import canonical_render
from .output import (
    curve_json,
    dumps,
    emit_json,
    equations_json,
    error_json,
    fibers_json,
    render_equations,
    render_fibers,
    render_report,
    render_semigroup,
    render_verdicts,
    terms_json,
    zeta_coeffs,
)
from .pipeline import alexander_via_dimensions, analyze, cross_check, zeta

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT = 2
EXIT_COMPUTATION = 3


def _common() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=["text", "json"], default="text")
    parent.add_argument("--margin", type=int, default=Settings.MARGIN,
                        help="cells added beyond the conductor in the box (default: %(default)s)")
    parent.add_argument("--max-cells", type=int, default=Settings.MAX_CELLS,
                        help="largest matrix or box accepted (default: %(default)s)")
    parent.add_argument("--threads", type=int, default=Settings.THREADS,
                        help="worker threads (default: %(default)s)")
    parent.add_argument("--order", type=int, default=None,
                        help="zeta window order (default: smallest box side)")
    parent.add_argument("--max-resultant-size", type=int, default=Settings.MAX_RESULTANT_SIZE,
                        help="largest deg x + deg y implicitized per branch (default: %(default)s)")
    parent.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv for details, on stderr")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="pyalexander",
        description="Alexander polynomials of plane curve singularities from branch parametrizations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("analyze", "full report"),
        ("alexander", "the Alexander polynomial (the knot polynomial for one branch)"),
        ("zeta", "the monodromy zeta function up to --order"),
        ("semigroup", "branch semigroups, intersections and the semigroup of values"),
        ("fibers", "the fibre table over the box"),
        ("implicitize", "implicit equations of the branches"),
        ("check", "consistency verdicts only; exit 0 iff all pass"),
    ):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument("file", help="curve file, or - for standard input")
    sub = commands.add_parser("example", parents=[common], help="print a built-in curve file")
    sub.add_argument("name", help=f"one of: {', '.join(corpus.names())}")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e.strerror}") from None


def _configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s"
    )


def _settings(args) -> Settings:
    try:
        return Settings(
            margin=args.margin,
            max_cells=args.max_cells,
            threads=args.threads,
            order=args.order,
            max_resultant_size=args.max_resultant_size,
        )
    except ValueError as e:
        raise InputError(str(e)) from None


def _execute(args, out) -> int:
    as_json = args.format == "json"
    if args.command == "example":
        out.write(corpus.load_example(args.name))
        return EXIT_OK

    settings = _settings(args)
    curve = validate(parse_curve(_read(args.file)), settings)

    if args.command == "analyze":
        report = analyze(curve, settings)
        out.write(emit_json(report) if as_json else render_report(report))
        return EXIT_OK if report.verdicts.all_pass() else EXIT_VERDICT

    if args.command == "implicitize":
        out.write(dumps(equations_json(curve)) if as_json else render_equations(curve) + "\n")
        return EXIT_OK

    engine = FiltrationEngine.for_curve(curve, settings)
    if args.command == "alexander":
        result = alexander_via_dimensions(curve, settings, engine)
        if as_json:
            out.write(dumps({"r": curve.r, "alexander": {"terms": terms_json(result.polynomial)}}))
        else:
            out.write(canonical_render(result.polynomial) + "\n")
        return EXIT_OK

    if args.command == "zeta":
        order = min(engine.box.upper) if settings.order is None else settings.order
        z = zeta(curve, order, settings, engine)
        if as_json:
            out.write(dumps({"zeta": {"coeffs": zeta_coeffs(z, order)}}))
        else:
            out.write(canonical_render(z) + "\n")
        return EXIT_OK

    if args.command == "semigroup":
        elements = engine.semigroup_elements()
        if as_json:
            obj = curve_json(curve)
            obj["semigroup"] = [list(v) for v in elements]
            out.write(dumps(obj))
        else:
            out.write(render_semigroup(curve, elements, engine.box.upper) + "\n")
        return EXIT_OK

    if args.command == "fibers":
        fibers = engine.fiber_table()
        out.write(dumps({"fibers": fibers_json(fibers)}) if as_json else render_fibers(fibers) + "\n")
        return EXIT_OK

    # check
    engine.certify_conductor()
    check = cross_check(curve, settings, engine)
    check.raise_resource_errors()
    verdicts = check.verdicts
    out.write(dumps({"checks": verdicts.as_dict()}) if as_json else render_verdicts(verdicts) + "\n")
    return EXIT_OK if verdicts.all_pass() else EXIT_VERDICT


def run_cli(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    """Runs one command and returns its exit code.

    Args:
        argv (list[str], optional): Arguments without the program name.
        out: Stream for results. Defaults to sys.stdout.
        err: Stream for error messages in text mode. Defaults to sys.stderr.
    """
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return _execute(args, out)
    except InputError as e:
        code = EXIT_INPUT
        error = e
    except ComputationError as e:
        code = EXIT_COMPUTATION
        error = e
    logger.debug("Exiting with code %d", code, exc_info=error)
    if args.format == "json":
        out.write(error_json(error, code))
    else:
        err.write(f"error: {error}\n")
    return code


def main():
    sys.exit(run_cli())
