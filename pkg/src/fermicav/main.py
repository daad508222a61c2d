import argparse
import logging
import sys
from typing import List, Optional

from .commands import Figure2, Figure3, Report, Validate
from .config import set_config
from .errors import ConfigError, FermicavError
from .opio import OPIO, dumps
from .scenario import ScenarioConfig, load_scenario_config
from .utils import format_number, parse_grid
from .validate import CHECKS

logger = logging.getLogger(__name__)

IO_ERROR_EXIT = 4

COMMANDS = {
    "figure2": Figure2,
    "figure3": Figure3,
    "report": Report,
}


def add_scenario_arguments(parser, grid=False):
    parser.add_argument(
        "-c",
        "--config",
        type=str,
        default=None,
        help="scenario file (JSON or YAML)",
    )
    parser.add_argument(
        "-o",
        "--out",
        type=str,
        default=None,
        help="output CSV path, a .meta.json sidecar is written next to it",
    )
    parser.add_argument(
        "-w",
        "--window",
        type=int,
        default=None,
        help="truncation window M",
    )
    parser.add_argument(
        "--h",
        type=float,
        default=None,
        help="acceleration parameter of the reported measures",
    )
    if grid:
        parser.add_argument(
            "-g",
            "--grid",
            type=str,
            default=None,
            help="(u, v) grid as NxM",
        )


def main_parser():
    parser = argparse.ArgumentParser(
        description="fermicav: Bogoliubov transformations and entanglement "
        "degradation of Dirac fields in moving cavities",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    subparsers = parser.add_subparsers(
        title="Valid subcommands", dest="command")

    parser_figure2 = subparsers.add_parser(
        "figure2",
        help="Degradation of a single accelerated segment over one period",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    add_scenario_arguments(parser_figure2)

    parser_figure3 = subparsers.add_parser(
        "figure3",
        help="Degradation of a one-way trip over the (u, v) square",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    add_scenario_arguments(parser_figure3, grid=True)

    parser_report = subparsers.add_parser(
        "report",
        help="Evaluate one scenario by closed form and density matrix",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    add_scenario_arguments(parser_report)

    parser_validate = subparsers.add_parser(
        "validate",
        help="Run the invariant suite",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser_validate.add_argument(
        "-o",
        "--out",
        type=str,
        default=None,
        help="output CSV path",
    )
    parser_validate.add_argument(
        "-w",
        "--window",
        type=int,
        default=None,
        help="composition window M",
    )
    parser_validate.add_argument(
        "--check",
        type=str,
        action="append",
        default=None,
        choices=sorted(CHECKS),
        help="run only this check (repeatable)",
    )
    return parser


def parse_args(args: Optional[List[str]] = None):
    """Commandline options argument parsing.

    Parameters
    ----------
    args : List[str]
        list of command line arguments, main purpose is testing default option
        None takes arguments from sys.argv
    """
    parser = main_parser()
    parsed_args = parser.parse_args(args=args)
    if parsed_args.command is None:
        parser.print_help()
    return parsed_args


def scenario_from_args(args) -> ScenarioConfig:
    """Scenario file (or defaults) with the command-line overrides applied"""
    overrides = {"h_numeric": args.h}
    if args.window is not None:
        key = "window" if args.command == "report" else "sum_window"
        overrides[key] = args.window
    if getattr(args, "grid", None) is not None:
        try:
            overrides["grid"] = parse_grid(args.grid)
        except ValueError as e:
            raise ConfigError(str(e))
    if args.config is not None:
        return load_scenario_config(args.config, **overrides)
    return ScenarioConfig().override(**overrides)


def format_print_table(t: List[List[str]]):
    ncol = len(t[0])
    maxlen = [0] * ncol
    for row in t:
        for i, s in enumerate(row):
            if len(str(s)) > maxlen[i]:
                maxlen[i] = len(str(s))
    for row in t:
        for i, s in enumerate(row):
            print(str(s) + " " * (maxlen[i]-len(str(s))+3), end="")
        print()


def run_command(args) -> None:
    if args.command == "validate":
        if args.window is not None:
            set_config(window=args.window)
        op_out = Validate().execute(OPIO({"names": args.check,
                                          "out": args.out}))
        t = [["CHECK", "PASSED", "VALUE", "LIMIT"]]
        for c in op_out["checks"]:
            t.append([c.name, format_number(c.passed),
                      format_number(c.value, 4), format_number(c.limit, 4)])
        format_print_table(t)
        return
    cfg = scenario_from_args(args)
    try:
        op_out = COMMANDS[args.command]().execute(OPIO({"config": cfg,
                                                        "out": args.out}))
    except ValueError as e:
        # the scenario passed validation but leaves the perturbative regime
        raise ConfigError(str(e))
    result = op_out["result"]
    if args.command == "report":
        print(dumps(result.report.to_dict()))
    elif op_out["path"] is None:
        logger.warning("No output path given, %d %s rows were not written" % (
            len(result), args.command))
    else:
        print("Wrote %d rows to %s" % (len(result), op_out["path"]))


def main(argv: Optional[List[str]] = None):
    args = parse_args(argv)
    if args.command is None:
        return
    try:
        run_command(args)
    except FermicavError as e:
        logger.error("%s: %s" % (type(e).__name__, e))
        sys.exit(e.exit_code)
    except OSError as e:
        logger.error("%s" % e)
        sys.exit(IO_ERROR_EXIT)
