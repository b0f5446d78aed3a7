# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""
Main pmmeas application orchestrator.
"""

import argparse
import logging
from typing import Callable, Dict, List, Optional

from .commands import handle_explore, handle_export, handle_verify
from .config import ALL_SUITES, Config
from .errors import ConfigError, PMMeasError, log_error
from .logger import logger, set_console_level
from .models import ExploreMode

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG_ERROR = 2


class PMMeasApp:
    """
    pmmeas command-line application.

    Loads configuration, builds the argument parser and dispatches each
    sub-command to its handler.
    """

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = config_path
        self.config: Optional[Config] = None
        self.parser = self._build_parser()
        self._handlers: Dict[str, Callable] = {}
        self._register_commands()

    def _register_commands(self):
        """Map sub-commands to their handlers."""
        self._handlers["verify"] = handle_verify
        self._handlers["explore"] = handle_explore
        self._handlers["export"] = handle_export

    def _build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="pmmeas",
            description="Verify the algebra of distance distribution functions and "
                        "probabilistic-valued decomposable set functions on finite instances.",
        )
        parser.add_argument("--config", help="YAML or JSON configuration file")
        verbosity = parser.add_mutually_exclusive_group()
        verbosity.add_argument("-q", "--quiet", action="store_true", help="only print warnings and errors")
        verbosity.add_argument("-v", "--verbose", action="store_true", help="print debug output")
        sub = parser.add_subparsers(dest="command", metavar="COMMAND")
        sub.required = True

        verify = sub.add_parser("verify", help="run theorem suites and write a JSON report")
        verify.add_argument("--config", dest="sub_config", help=argparse.SUPPRESS)
        verify.add_argument("--suite", help=f"comma-separated suites (known: {', '.join(ALL_SUITES)})")
        verify.add_argument("--tol", type=float, help="comparison tolerance")
        verify.add_argument("--seed", type=int, help="random seed")
        verify.add_argument("--threads", type=int, help="worker threads")
        verify.add_argument("--out", help="report path ('-' for stdout)")

        explore = sub.add_parser("explore", help="seeded counterexample searches")
        explore.add_argument("--config", dest="sub_config", help=argparse.SUPPRESS)
        explore.add_argument("--mode", required=True, choices=[m.value for m in ExploreMode])
        explore.add_argument("--budget", type=int, help="maximum number of random trials")
        explore.add_argument("--seed", type=int, help="random seed")
        explore.add_argument("--weights", type=float, nargs="+", help="element weights for find-pi-top-violation")
        explore.add_argument("--out", help="report path")

        export = sub.add_parser("export", help="write CSV plot data of a DDF")
        export.add_argument("--config", dest="sub_config", help=argparse.SUPPRESS)
        export.add_argument("--what", required=True, help="eps:<a> | ddf:<file> | lambda:<seed>:<n>:<set>")
        export.add_argument("--out", required=True, help="CSV path")
        export.add_argument("--x-max", dest="x_max", type=float, help="right end of the grid")
        export.add_argument("--step", type=float, help="grid step")
        return parser

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Parse argv, run the sub-command and return the exit code."""
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_OK if e.code == 0 else EXIT_CONFIG_ERROR

        if args.quiet:
            set_console_level(logging.WARNING)
        elif args.verbose:
            set_console_level(logging.DEBUG)

        try:
            self.config = Config(getattr(args, "sub_config", None) or args.config or self.config_path)
            logger.debug(f"Configuration loaded from {self.config.source or 'defaults'}")
            return self._handlers[args.command](args, self.config)
        except ConfigError as e:
            log_error(e, context=args.command)
            return EXIT_CONFIG_ERROR
        except PMMeasError as e:
            log_error(e, context=args.command)
            return EXIT_FAILURE
        except Exception as e:
            logger.error(f"Unexpected error in {args.command}: {e}", exc_info=True)
            return EXIT_FAILURE
