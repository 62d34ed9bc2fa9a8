import argparse
import logging
from pathlib import Path
from typing import Any, Dict

from presets.bundle import dump_preset, validate_preset
from presets.families import PresetFactory
from utils.records import emit

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

NAME = "preset"
HELP = "build, certify and optionally export a preset"


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("name", nargs="?", help="preset as name:args, e.g. pure_monomial:2,2")
    parser.add_argument("--export", metavar="FILE", help="write the preset as a tower-spec file")
    parser.add_argument("--list", action="store_true", help="list available presets")


def run(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    data_dir = config["PRESET_DATA_DIR"]
    if args.list or not args.name:
        names = PresetFactory.get_available_presets(data_dir)
        emit(args.format, names, [{"command": NAME, "preset": n} for n in names])
        return 0

    bundle = PresetFactory.create_from_text(args.name, data_dir)
    report = validate_preset(bundle)
    kinds = ", ".join(f.kind.value for f in bundle.tower.factors)
    lines = [
        f"preset: {bundle.name}",
        f"ranks: {', '.join(str(r) for r in bundle.ranks)}",
        f"kinds: {kinds}",
        f"witness: ambient rank {bundle.ambient_rank}" if bundle.witness else "witness: none",
        f"provenance: {bundle.provenance}",
        "report: valid" if report.is_valid else f"report: {len(report.rows)} failure(s)",
    ]
    lines.extend(f"  {r.check} {r.source}" + (f" -> {r.target}" if r.target else "")
                 + f": {r.detail}" for r in report.rows)
    row = {
        "command": NAME,
        "preset": bundle.name,
        "ranks": list(bundle.ranks),
        "kinds": kinds,
        "ambient_rank": bundle.ambient_rank,
        "valid": report.is_valid,
        "failures": [vars(r) for r in report.rows],
    }
    if args.export:
        try:
            Path(args.export).write_text(dump_preset(bundle), encoding="utf-8")
            logger.info(f"Exported preset {bundle.name} to {args.export}")
        except OSError as e:
            logger.error(f"Error exporting preset {bundle.name}: {str(e)}")
            raise
    emit(args.format, lines, [row])
    return 0 if report.is_valid else 1
