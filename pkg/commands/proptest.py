import argparse
import logging
from typing import Any, Dict

from commands.context import add_context_arguments, build_context, nonnegative_int, positive_int
from proptest.suites import PropertySuiteFactory, run_suite
from utils.config import proptest_settings
from utils.records import emit

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

NAME = "proptest"
HELP = "run a property suite against an ordered group"


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("suite", help=", ".join(PropertySuiteFactory.get_available_suites()))
    add_context_arguments(parser, free_rank_alias=True)
    parser.add_argument("--seed", type=nonnegative_int)
    parser.add_argument("--iters", type=positive_int)
    parser.add_argument("--max-len", dest="max_length", type=nonnegative_int)
    exhaustive = parser.add_mutually_exclusive_group()
    exhaustive.add_argument("--exhaustive", dest="exhaustive", action="store_true", default=None,
                            help="check every element up to --max-len")
    exhaustive.add_argument("--random", dest="exhaustive", action="store_false",
                            help="always draw random cases")


def run(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    suite = PropertySuiteFactory.create_suite(args.suite)
    context = build_context(args, config)
    defaults = proptest_settings(config)
    seed = args.seed if args.seed is not None else defaults.seed
    iterations = args.iters if args.iters is not None else defaults.iterations
    max_length = args.max_length if args.max_length is not None else defaults.max_length
    result = run_suite(suite.name, context, seed, iterations, max_length, args.exhaustive)
    emit(args.format, result.lines(), [result.record()])
    return 0 if result.ok else 1
