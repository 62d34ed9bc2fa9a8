"""
Context flags shared by compare, sort, normalize and proptest.
"""

import argparse
import logging
from typing import Any, Dict

from groups.errors import SuiteContextError
from presets.families import PresetFactory
from proptest.contexts import FreeGroupContext, OrderContext, TowerContext
from tower.spec_file import load_tower_spec

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


def positive_int(text: str) -> int:
    """argparse type for counts that must be at least 1"""
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be a nonnegative integer, got {value}")
    return value


def add_context_arguments(parser: argparse.ArgumentParser, free_rank_alias: bool = False):
    group = parser.add_mutually_exclusive_group()
    names = ["--rank", "--free-rank"] if free_rank_alias else ["--rank"]
    group.add_argument(*names, dest="rank", type=positive_int, help="free group of this rank")
    group.add_argument("--spec", help="tower-spec JSON file")
    group.add_argument("--preset", help="preset as name:args, e.g. upper_mccool:3")
    parser.add_argument("--reduced", action="store_true",
                        help="use the reduced free group with --rank")


def build_context(args: argparse.Namespace, config: Dict[str, Any]) -> OrderContext:
    """
    Order context named by --rank, --spec or --preset

    Raises:
        SuiteContextError: no context flag, or --reduced without --rank
    """
    if args.reduced and args.rank is None:
        raise SuiteContextError("--reduced applies to --rank only")
    if args.rank is not None:
        return FreeGroupContext(args.rank, args.reduced)
    if args.spec:
        return TowerContext(load_tower_spec(args.spec), f"--spec {args.spec}")
    if args.preset:
        bundle = PresetFactory.create_from_text(args.preset, config["PRESET_DATA_DIR"])
        return TowerContext(bundle.tower, f"--preset {args.preset}")
    raise SuiteContextError("one of --rank, --spec or --preset is required")
