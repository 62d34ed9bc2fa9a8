import argparse
import logging
from typing import Any, Dict

from commands.context import add_context_arguments, build_context
from groups.ordering import format_monomial
from utils.records import emit

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

NAME = "compare"
HELP = "compare two elements under the (reduced) Magnus or tower order"


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("left")
    parser.add_argument("right")
    add_context_arguments(parser)


def run(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    context = build_context(args, config)
    left, right = context.parse(args.left), context.parse(args.right)
    verdict = context.compare(left, right)
    row = {
        "command": NAME,
        "left": context.format(left),
        "right": context.format(right),
        "verdict": verdict.verdict.value,
        "factor": verdict.factor,
        "degree": verdict.degree,
        "monomial": format_monomial(verdict.monomial) if verdict.monomial else None,
    }
    emit(args.format, [str(verdict)], [row])
    return 0
