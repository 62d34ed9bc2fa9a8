import argparse
import logging
from typing import Any, Dict

from commands.context import add_context_arguments, build_context
from groups.word import exponent_sums
from proptest.contexts import TowerContext
from tower.normal_form import retraction, tower_ab
from utils.records import emit

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

NAME = "normalize"
HELP = "print the normal form, abelianization and retraction of an element"


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("element")
    add_context_arguments(parser)


def run(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    context = build_context(args, config)
    element = context.parse(args.element)
    row: Dict[str, Any] = {"command": NAME, "normal_form": context.format(element)}
    lines = [context.format(element)]
    if isinstance(context, TowerContext):
        spec = context.spec
        ab = tower_ab(element, spec)
        row["components"] = [w.format() for w in element.components]
        row["ab"] = str(ab)
        lines.append(f"ab: {ab}")
        if spec.length >= 2:
            lower = retraction(element, spec)
            row["retraction"] = lower.format()
            row["retraction_ab"] = str(tower_ab(lower, spec.truncated(spec.length - 1)))
            lines.append(f"retraction: {row['retraction']}")
            lines.append(f"retraction ab: {row['retraction_ab']}")
    else:
        row["ab"] = str(exponent_sums(element))
        lines.append(f"ab: {row['ab']}")
    emit(args.format, lines, [row])
    return 0
