"""
Preset bundles: a tower spec plus an optional faithful witness representation.

The witness sends each tower generator to an automorphism of an ambient free
group, with W(uv) = W(u) o W(v). A bundle is certified when every defining
relation x_{i,p}^-1 x_{j,q} x_{i,p} = alpha(x_{i,p})(x_{j,q}) holds between
the witness automorphisms.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import pandas as pd

from groups.automorphism import EndoTable, apply, compose_all, verify_inverse_pair
from groups.errors import BiorderError, SpecFileError
from groups.word import Word
from tower.normal_form import TowerElement
from tower.spec import TowerLetter, TowerSpec, validate_spec, word_letters
from tower.spec_file import dump_tower_spec, parse_table_words, parse_tower_document, table_words
from utils.config import ReportRow

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

GeneratorKey = Tuple[int, int]
Witness = Dict[GeneratorKey, Tuple[EndoTable, EndoTable]]


@dataclass(frozen=True)
class PresetBundle:
    """A named tower with provenance and an optional witness"""
    name: str
    tower: TowerSpec
    witness: Optional[Witness] = field(default=None, hash=False)
    ambient_rank: Optional[int] = None
    provenance: str = ""
    # factor -> word every action on that factor must fix
    invariant_words: Dict[int, Word] = field(default_factory=dict, hash=False)

    @property
    def ranks(self) -> Tuple[int, ...]:
        return self.tower.ranks


@dataclass
class PresetReport:
    """Findings of validate_preset; empty means the bundle is certified"""
    name: str
    rows: List[ReportRow] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.rows

    def add(self, check: str, source: str, target: str, detail: str):
        self.rows.append(ReportRow(check, source, target, detail))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([vars(row) for row in self.rows],
                            columns=["check", "source", "target", "detail"])

    def summary(self) -> str:
        if self.is_valid:
            return "valid"
        return "; ".join(f"{r.check} {r.source} -> {r.target}: {r.detail}" for r in self.rows)


def _letter_table(witness: Witness, letter: TowerLetter) -> EndoTable:
    factor, generator, step = letter
    table, inverse = witness[(factor, generator)]
    return table if step > 0 else inverse


def witness_of_letters(bundle: PresetBundle, letters: List[TowerLetter]) -> EndoTable:
    """W(l_1 l_2 ...) = W(l_1) o W(l_2) o ..."""
    if bundle.witness is None or bundle.ambient_rank is None:
        raise BiorderError(f"Preset {bundle.name} has no witness representation")
    return compose_all([_letter_table(bundle.witness, letter) for letter in letters],
                       bundle.ambient_rank)


def witness_image(bundle: PresetBundle, element: TowerElement) -> EndoTable:
    """Ambient automorphism of a tower element"""
    return witness_of_letters(bundle, element.letters())


def _first_difference(s: EndoTable, t: EndoTable) -> Optional[str]:
    for j, (a, b) in enumerate(zip(s.images, t.images), start=1):
        if a != b:
            return f"x{j}: {a} != {b}"
    return None


def _check_witness(bundle: PresetBundle, report: PresetReport):
    spec = bundle.tower
    witness = bundle.witness
    for i in range(1, spec.length + 1):
        for p in range(1, spec.ranks[i - 1] + 1):
            if (i, p) not in witness:
                report.add("witness-missing", f"g{i}.{p}", "", "no witness table")
                continue
            table, inverse = witness[(i, p)]
            if table.rank != bundle.ambient_rank or inverse.rank != bundle.ambient_rank:
                report.add("witness-rank", f"g{i}.{p}", "",
                           f"witness tables must have ambient rank {bundle.ambient_rank}")
            elif not verify_inverse_pair(table, inverse):
                report.add("witness-inverse", f"g{i}.{p}", "",
                           "witness table and inverse do not compose to the identity")
    if not report.is_valid:
        return

    for j in range(2, spec.length + 1):
        for i in range(1, j):
            for p in range(1, spec.ranks[i - 1] + 1):
                action = spec.action(i, p, j).table
                for q in range(1, spec.ranks[j - 1] + 1):
                    lhs = witness_of_letters(bundle, [(i, p, -1), (j, q, 1), (i, p, 1)])
                    rhs = witness_of_letters(bundle, word_letters(j, action.images[q - 1]))
                    difference = _first_difference(lhs, rhs)
                    if difference:
                        report.add("witness-relation", f"g{i}.{p}", f"g{j}.{q}", difference)


def _check_invariant_words(bundle: PresetBundle, report: PresetReport):
    spec = bundle.tower
    for k, word in sorted(bundle.invariant_words.items()):
        for i in range(1, k):
            for p in range(1, spec.ranks[i - 1] + 1):
                image = apply(spec.action(i, p, k).table, word)
                if image != word:
                    report.add("invariant-word", f"g{i}.{p}", f"factor {k}",
                               f"{word} maps to {image}")


def validate_preset(bundle: PresetBundle) -> PresetReport:
    """
    Certify a preset bundle

    Runs validate_spec, the witness inverse and relation checks, and the
    invariant-word spot checks. Findings are rows, never exceptions.

    Args:
        bundle: The preset to check

    Returns:
        A PresetReport; empty iff every check passes
    """
    report = PresetReport(bundle.name)
    for issue in validate_spec(bundle.tower).issues:
        report.add(issue.check, issue.location, "", issue.detail)
    if bundle.witness is not None:
        _check_witness(bundle, report)
    _check_invariant_words(bundle, report)
    if report.is_valid:
        logger.info(f"Preset {bundle.name} is certified")
    else:
        logger.warning(f"Preset {bundle.name} has {len(report.rows)} finding(s)")
    return report


def witness_document(bundle: PresetBundle) -> Dict[str, Any]:
    return {
        "ambient_rank": bundle.ambient_rank,
        "generators": [
            {
                "factor": factor,
                "generator": generator,
                "table": table_words(table),
                "inverse_table": table_words(inverse),
            }
            for (factor, generator), (table, inverse) in sorted(bundle.witness.items())
        ],
    }


def dump_preset(bundle: PresetBundle) -> str:
    """Tower-spec JSON for the bundle, witness section included when present"""
    extra = {"witness": witness_document(bundle)} if bundle.witness is not None else None
    spec = TowerSpec(bundle.tower.factors, bundle.tower.actions,
                     name=bundle.name, provenance=bundle.provenance)
    return dump_tower_spec(spec, extra)


def _parse_witness(section: Any, source: Optional[str]) -> Tuple[int, Witness]:
    if not isinstance(section, dict):
        raise SpecFileError("expected an object", "witness", source)
    rank = section.get("ambient_rank")
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise SpecFileError(f"ambient_rank must be a positive integer, got {rank!r}",
                            "witness.ambient_rank", source)
    entries = section.get("generators", [])
    if not isinstance(entries, list):
        raise SpecFileError("expected a list", "witness.generators", source)
    witness: Witness = {}
    for index, entry in enumerate(entries):
        path = f"witness.generators[{index}]"
        if not isinstance(entry, dict):
            raise SpecFileError("expected an object", path, source)
        key = (entry.get("factor"), entry.get("generator"))
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in key):
            raise SpecFileError("factor and generator must be integers", path, source)
        if key in witness:
            raise SpecFileError(f"duplicate witness for g{key[0]}.{key[1]}", path, source)
        witness[key] = (
            parse_table_words(entry.get("table"), rank, f"{path}.table", source),
            parse_table_words(entry.get("inverse_table"), rank, f"{path}.inverse_table", source),
        )
    return rank, witness


def load_preset_file(path: Union[str, Path]) -> PresetBundle:
    """Bundle from a tower-spec file, with its optional witness section"""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Error reading preset file {path}: {str(e)}")
        raise SpecFileError(str(e), "file", str(path))
    spec, document = parse_tower_document(text, str(path))
    witness, ambient_rank = None, None
    if "witness" in document:
        ambient_rank, witness = _parse_witness(document["witness"], str(path))
    name = spec.name or path.stem
    logger.info(f"Loaded preset {name} from {path}")
    return PresetBundle(name, spec, witness, ambient_rank, spec.provenance)
