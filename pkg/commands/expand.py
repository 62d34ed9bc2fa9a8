import argparse
import logging
from typing import Any, Dict

from groups.magnus import format_series, lower_central_depth, magnus_expand
from groups.reduced_magnus import reduced_expand
from groups.word import Word
from commands.context import nonnegative_int, positive_int
from utils.records import emit

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

NAME = "expand"
HELP = "print the (reduced) Magnus expansion of a word"


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("word", help='word such as "x1 x2 x1^-1 x2^-1"')
    parser.add_argument("--rank", type=positive_int, required=True)
    parser.add_argument("--degree", type=nonnegative_int, default=4, help="truncation degree (free mode)")
    parser.add_argument("--reduced", action="store_true", help="reduced Magnus expansion")
    parser.add_argument("--depth", action="store_true", help="also print the lower central depth")


def run(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    w = Word.parse(args.word, args.rank)
    if args.reduced:
        series = format_series(reduced_expand(w, config["REDUCED_MAX_RANK"]).terms)
        mode, degree = "reduced", None
    else:
        series = format_series(magnus_expand(w, args.degree).terms)
        mode, degree = "free", args.degree
    lines = [series]
    row = {"command": NAME, "word": w.format(), "rank": args.rank, "mode": mode,
           "degree": degree, "series": series}
    if args.depth:
        depth = lower_central_depth(w, args.degree)
        lines.append(f"depth: {depth}" if depth is not None else f"depth: > {args.degree}")
        row["depth"] = depth
    emit(args.format, lines, [row])
    return 0
