import argparse
import logging
from functools import cmp_to_key
from typing import Any, Dict

from commands.context import add_context_arguments, build_context
from utils.records import emit

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

NAME = "sort"
HELP = "sort elements ascending, least first"


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("elements", nargs="+")
    add_context_arguments(parser)


def run(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    context = build_context(args, config)
    elements = [context.parse(text) for text in args.elements]
    ordered = sorted(elements, key=cmp_to_key(lambda a, b: context.compare(a, b).as_int()))
    lines = [context.format(x) for x in ordered]
    rows = [{"command": NAME, "position": i, "element": text}
            for i, text in enumerate(lines, start=1)]
    logger.info(f"Sorted {len(lines)} elements of {context.name}")
    emit(args.format, lines, rows)
    return 0
