# faht/__main__.py

import argparse
import logging
import os
import sys
from typing import List, Optional

from pydantic import ValidationError

from faht import __version__
from faht.commands import (
    register_compare_command,
    register_ensemble_command,
    register_fetch_command,
    register_run_command,
)
from faht.commands.options import ConfigError
from faht.config import ExperimentDefaults
from faht.core.errors import ChecksumError, DataParseError, SchemaError

logger = logging.getLogger("faht_cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# errors that mean "fix your input", reported without a traceback
USAGE_ERRORS = (ConfigError, ValidationError, SchemaError, DataParseError, ChecksumError, FileNotFoundError)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="faht", description="Fairness-aware Hoeffding tree stream experiments"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        default=ExperimentDefaults.get_log_level(),
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        type=str.upper,
        help="Logging level (default: INFO or FAHT_LOG_LEVEL)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    register_run_command(subparsers)
    register_compare_command(subparsers)
    register_ensemble_command(subparsers)
    register_fetch_command(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the faht command line."""
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    logger.debug(f"Python version: {sys.version.split()[0]}, cwd: {os.getcwd()}")
    overrides = ExperimentDefaults.overrides()
    if overrides:
        logger.info(f"Defaults overridden from environment: {sorted(overrides)}")

    try:
        return args.handler(args)
    except USAGE_ERRORS as e:
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        logger.error("Interrupted")
        return EXIT_FAILURE
    except Exception:
        logger.exception(f"{args.command} failed")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
