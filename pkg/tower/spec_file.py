"""
Tower-spec files: JSON documents with ``factors`` and ``actions``.

    {
      "name": "optional",
      "provenance": "optional",
      "factors": [{"rank": 1, "kind": "Free"}, {"rank": 2, "kind": "ReducedFree"}],
      "actions": [
        {"source_factor": 1, "source_generator": 1, "target_factor": 2,
         "table": ["x2^-1 x1 x2", "x2"], "inverse_table": ["x2 x1 x2^-1", "x2"]}
      ],
      "witness": {...}
    }

Image words use the ``x<j>`` syntax of the target factor. The full schema is
``data/towers/tower_spec.schema.json``. Errors name their position either as
``line L, column C`` (JSON syntax) or as a JSON path such as ``actions[0].table[1]``.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from groups.automorphism import EndoTable
from groups.errors import BiorderError, SpecFileError, WordSyntaxError
from groups.word import Word
from tower.spec import ActionKey, ActionPair, Factor, FactorKind, TowerSpec

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

ACTION_KEYS = ("source_factor", "source_generator", "target_factor", "table", "inverse_table")


def _require(obj: Dict[str, Any], key: str, path: str, kind: type, source: Optional[str]):
    if key not in obj:
        raise SpecFileError(f"missing key {key!r}", path or "document", source)
    value = obj[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise SpecFileError(f"expected an integer, got {value!r}", f"{path}.{key}".lstrip("."), source)
    if kind is not int and not isinstance(value, kind):
        raise SpecFileError(f"expected {kind.__name__}, got {type(value).__name__}",
                            f"{path}.{key}".lstrip("."), source)
    return value


def parse_table_words(words: Any, rank: int, path: str, source: Optional[str] = None) -> EndoTable:
    """List of image words for x1..x_rank"""
    if not isinstance(words, list):
        raise SpecFileError("expected a list of image words", path, source)
    if len(words) != rank:
        raise SpecFileError(f"expected {rank} image words, got {len(words)}", path, source)
    images = []
    for index, text in enumerate(words):
        where = f"{path}[{index}]"
        if not isinstance(text, str):
            raise SpecFileError(f"expected a word string, got {text!r}", where, source)
        try:
            images.append(Word.parse(text, rank))
        except WordSyntaxError as e:
            raise SpecFileError(str(e), f"{where}, column {e.column}", source)
        except BiorderError as e:
            raise SpecFileError(str(e), where, source)
    return EndoTable(rank, tuple(images))


def _parse_factors(document: Dict[str, Any], source: Optional[str]) -> List[Factor]:
    raw = _require(document, "factors", "", list, source)
    if not raw:
        raise SpecFileError("a tower needs at least one factor", "factors", source)
    factors = []
    for index, entry in enumerate(raw):
        path = f"factors[{index}]"
        if not isinstance(entry, dict):
            raise SpecFileError("expected an object", path, source)
        rank = _require(entry, "rank", path, int, source)
        if rank < 1:
            raise SpecFileError(f"rank must be positive, got {rank}", f"{path}.rank", source)
        kind_name = entry.get("kind", "Free")
        try:
            kind = FactorKind.parse(str(kind_name))
        except ValueError as e:
            raise SpecFileError(str(e), f"{path}.kind", source)
        factors.append(Factor(rank, kind))
    return factors


def _parse_actions(document: Dict[str, Any],
                   factors: List[Factor],
                   source: Optional[str]) -> Dict[ActionKey, ActionPair]:
    raw = document.get("actions", [])
    if not isinstance(raw, list):
        raise SpecFileError("expected a list", "actions", source)
    actions: Dict[ActionKey, ActionPair] = {}
    for index, entry in enumerate(raw):
        path = f"actions[{index}]"
        if not isinstance(entry, dict):
            raise SpecFileError("expected an object", path, source)
        unknown = sorted(set(entry) - set(ACTION_KEYS))
        if unknown:
            raise SpecFileError(f"unknown key {unknown[0]!r}", path, source)
        i = _require(entry, "source_factor", path, int, source)
        p = _require(entry, "source_generator", path, int, source)
        k = _require(entry, "target_factor", path, int, source)
        if i < 1:
            raise SpecFileError(f"source_factor must be at least 1, got {i}",
                                f"{path}.source_factor", source)
        if p < 1:
            raise SpecFileError(f"source_generator must be at least 1, got {p}",
                                f"{path}.source_generator", source)
        if k < 2:
            raise SpecFileError(f"target_factor must be at least 2, got {k}",
                                f"{path}.target_factor", source)
        if k > len(factors):
            raise SpecFileError(f"no factor {k}", f"{path}.target_factor", source)
        key = (i, p, k)
        if key in actions:
            raise SpecFileError(f"duplicate action for g{i}.{p} on factor {k}", path, source)
        rank = factors[k - 1].rank
        table = parse_table_words(_require(entry, "table", path, list, source), rank,
                                  f"{path}.table", source)
        inverse = parse_table_words(_require(entry, "inverse_table", path, list, source), rank,
                                    f"{path}.inverse_table", source)
        actions[key] = ActionPair(table, inverse)
    return actions


def parse_tower_document(text: str,
                         source: Optional[str] = None) -> Tuple[TowerSpec, Dict[str, Any]]:
    """
    Parse a tower-spec document

    Args:
        text: JSON text
        source: File name used in error messages

    Returns:
        The tower spec and the raw document (for optional sections such as ``witness``)
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecFileError(e.msg, f"line {e.lineno}, column {e.colno}", source)
    if not isinstance(document, dict):
        raise SpecFileError("expected a JSON object at top level", "document", source)
    factors = _parse_factors(document, source)
    actions = _parse_actions(document, factors, source)
    spec = TowerSpec(tuple(factors), actions,
                     name=str(document.get("name", "")),
                     provenance=str(document.get("provenance", "")))
    return spec, document


def parse_tower_spec(text: str, source: Optional[str] = None) -> TowerSpec:
    return parse_tower_document(text, source)[0]


def load_tower_spec(path: Union[str, Path]) -> TowerSpec:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Error reading tower spec {path}: {str(e)}")
        raise SpecFileError(str(e), "file", str(path))
    spec = parse_tower_spec(text, str(path))
    logger.info(f"Loaded tower spec {spec.name or path.name} with ranks {spec.ranks}")
    return spec


def table_words(table: EndoTable) -> List[str]:
    return [image.format() for image in table.images]


def tower_document(spec: TowerSpec) -> Dict[str, Any]:
    document: Dict[str, Any] = {}
    if spec.name:
        document["name"] = spec.name
    if spec.provenance:
        document["provenance"] = spec.provenance
    document["factors"] = [{"rank": f.rank, "kind": f.kind.value} for f in spec.factors]
    document["actions"] = [
        {
            "source_factor": i,
            "source_generator": p,
            "target_factor": k,
            "table": table_words(pair.table),
            "inverse_table": table_words(pair.inverse),
        }
        for (i, p, k), pair in sorted(spec.actions.items())
        if not (pair.table.is_identity() and pair.inverse.is_identity())
    ]
    return document


def dump_tower_spec(spec: TowerSpec, extra: Optional[Dict[str, Any]] = None) -> str:
    """JSON text for spec; extra sections (e.g. ``witness``) are appended"""
    document = tower_document(spec)
    if extra:
        document.update(extra)
    return json.dumps(document, indent=2) + "\n"
