# -*- coding: utf-8 -*-
"""
The command-line interface of infoclone, which runs reproducible experiments
and writes machine-readable reports.
"""
__all__ = (
    "cmd_clone",
    "cmd_estimate",
    "cmd_noamp",
    "cmd_oracle_check",
    "cmd_overlap",
    "main",
    "Report",
    "run",
    "RunConfig",
)

import argparse
import sys
from typing import Optional, Sequence

from loguru import logger

from .commands import (
    cmd_clone,
    cmd_estimate,
    cmd_noamp,
    cmd_oracle_check,
    cmd_overlap,
    COMMAND_HANDLERS,
)
from .config import COMMANDS, OUTPUT_FORMATS, RunConfig
from .report import Report
from .. import exceptions as exc
from ..util import Stopwatch
from ..version import __version__

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_HELP = {
    "clone": "apply the cloning map to |alpha>|beta>^N",
    "oracle-check": "validate the cloning map in a truncated Fock space",
    "estimate": "estimate alpha from its clones by Monte Carlo",
    "noamp": "tabulate the overlap discrepancy of universal scaling maps",
    "overlap": "compare squared overlaps before and after cloning",
}


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", help="label of the unknown state (a+bi)")
    common.add_argument("--beta", help="label of each ancilla (a+bi)")
    common.add_argument("--alpha-prime", dest="alpha_prime",
                        help="unknown label of the comparison state")
    common.add_argument("--beta-prime", dest="beta_prime",
                        help="ancilla label of the comparison state")
    common.add_argument("--n", dest="n_clones", help="number of clones")
    common.add_argument("--cutoff", help="Fock cutoff per mode")
    common.add_argument("--trials", dest="n_trials",
                        help="number of Monte Carlo trials")
    common.add_argument("--seed", help="random seed")
    common.add_argument("--tolerance", help="pass/fail tolerance")
    common.add_argument("--workers", help="threads used for trials")
    common.add_argument("--psi", help="comma-separated labels of a state")
    common.add_argument("--psi-prime", dest="psi_prime",
                        help="comma-separated labels of a second state")
    common.add_argument("--sweep", help="comma-separated numbers of copies")
    common.add_argument("--output", dest="output_format",
                        choices=OUTPUT_FORMATS)
    common.add_argument("--out", dest="output_path",
                        help="write the report to this file")
    common.add_argument("--config", dest="config_file",
                        help="YAML file of default settings")
    common.add_argument("--timing", action="store_const", const=True,
                        help="record the wall-clock duration")
    common.add_argument("--verbose", action="store_true")
    common.add_argument("--debug", action="store_true")

    parser = argparse.ArgumentParser(
        prog="infoclone",
        description="Information cloning of harmonic-oscillator coherent "
                    "states.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common], help=_HELP[command])
    return parser


def _configure_logging(verbose: bool, debug: bool) -> None:
    level = "DEBUG" if debug else "INFO" if verbose else "WARNING"
    logger.remove()
    logger.add(sys.stderr, level=level)
    logger.enable("infoclone")


def run(config: RunConfig) -> Report:
    """Runs the command described by a given configuration."""
    stopwatch = Stopwatch()
    stopwatch.start()
    report = COMMAND_HANDLERS[config.command](config)
    stopwatch.stop()
    logger.info(f"ran {config.command} in {stopwatch.duration:.3f} seconds")
    if config.timing:
        report = report.with_duration(stopwatch.duration * 1000.0)
    return report


def _emit(report: Report) -> None:
    text = report.render()
    path = report.config.output_path
    if path:
        with open(path, "w", newline="") as f:
            f.write(text)
        logger.info(f"wrote report to {path}")
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the :code:`infoclone` command."""
    args = _parser().parse_args(argv)
    _configure_logging(args.verbose, args.debug)
    overrides = {
        k: v for k, v in vars(args).items()
        if k not in ("command", "config_file", "verbose", "debug")
    }
    try:
        config = RunConfig.build(args.command, overrides, args.config_file)
        report = run(config)
        _emit(report)
    except exc.ResourceLimitExceeded as err:
        logger.error(str(err))
        return EXIT_RESOURCE
    except exc.InfoCloneException as err:
        logger.error(str(err))
        return EXIT_USAGE
    except (OverflowError, ValueError) as err:
        logger.error(f"numeric range exceeded: {err}")
        return EXIT_USAGE
    except OSError as err:
        logger.error(f"could not write report: {err}")
        return EXIT_USAGE
    return EXIT_FAILED if report.passed is False else EXIT_OK
