import argparse
import logging
import sys
from typing import List, Optional

from commands import check_spec, compare, expand, normalize, preset, proptest, sort
from groups.errors import (
    BiorderError,
    GeneratorIndexError,
    InvalidTowerError,
    RankMismatchError,
    SpecFileError,
    SuiteContextError,
    UnknownSuiteError,
    UnsupportedPresetError,
    WordSyntaxError,
)
from utils.config import load_config
from utils.records import FORMATS

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

COMMANDS = [expand, compare, sort, normalize, check_spec, preset, proptest]

# Bad input rather than a finding about the group
USAGE_ERRORS = (
    WordSyntaxError,
    GeneratorIndexError,
    RankMismatchError,
    SpecFileError,
    SuiteContextError,
    UnknownSuiteError,
    UnsupportedPresetError,
)

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biorder",
        description="Magnus orderings of free groups and almost-direct products of free groups",
    )
    parser.add_argument("--format", choices=FORMATS, default="text", help="output format")
    parser.add_argument("--log-level", help="override LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMANDS:
        sub = subparsers.add_parser(module.NAME, help=module.HELP)
        module.add_arguments(sub)
        sub.set_defaults(handler=module.run)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Command-line entry point

    Returns:
        0 on success, 1 on order or validation findings, 2 on usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_USAGE

    try:
        config = load_config()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    level = (args.log_level or config["LOG_LEVEL"]).upper()
    if not isinstance(logging.getLevelName(level), int):
        print(f"error: unknown log level {level}", file=sys.stderr)
        return EXIT_USAGE
    logging.getLogger().setLevel(level)

    try:
        return args.handler(args, config)
    except USAGE_ERRORS as e:
        logger.error(f"Error in {args.command}: {str(e)}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidTowerError as e:
        print(f"invalid tower: {e.report.summary()}", file=sys.stderr)
        for issue in e.report.issues:
            print(f"  {issue}", file=sys.stderr)
        return EXIT_FINDINGS
    except BiorderError as e:
        logger.error(f"Error in {args.command}: {str(e)}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FINDINGS
    except ValueError as e:
        logger.error(f"Error in {args.command}: {str(e)}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
