import json

import jsonschema
import pytest

from groups.errors import SpecFileError
from presets.families import upper_mccool
from tower.spec import FactorKind, validate_spec
from tower.spec_file import dump_tower_spec, load_tower_spec, parse_tower_spec

MCCOOL_ACTION = {
    "source_factor": 1,
    "source_generator": 1,
    "target_factor": 2,
    "table": ["x2 x1 x2^-1", "x2"],
    "inverse_table": ["x2^-1 x1 x2", "x2"],
}


def document(**overrides) -> str:
    doc = {"factors": [{"rank": 1}, {"rank": 2, "kind": "Free"}], "actions": [dict(MCCOOL_ACTION)]}
    doc.update(overrides)
    return json.dumps(doc)


def test_parse_minimal_document():
    spec = parse_tower_spec(document(name="demo"))
    assert spec.name == "demo"
    assert spec.ranks == (1, 2)
    assert spec.factor(1).kind is FactorKind.FREE
    assert spec.action(1, 1, 2).table.image(1).format() == "x2 x1 x2^-1"
    assert validate_spec(spec).is_valid


def test_missing_actions_are_identities():
    spec = parse_tower_spec(json.dumps({"factors": [{"rank": 2}, {"rank": 2}]}))
    assert spec.action(1, 2, 2).table.is_identity()


def test_reduced_kind():
    spec = parse_tower_spec(json.dumps({"factors": [{"rank": 2, "kind": "ReducedFree"}]}))
    assert spec.factor(1).kind is FactorKind.REDUCED_FREE


def test_json_syntax_error_position():
    with pytest.raises(SpecFileError) as info:
        parse_tower_spec('{"factors": [\n  {"rank": 1},\n]}', "broken.json")
    assert info.value.position.startswith("line 3")
    assert "broken.json" in str(info.value)


def test_bad_word_position():
    action = dict(MCCOOL_ACTION, table=["x2 x1 x2^-1", "x2 ^"])
    with pytest.raises(SpecFileError) as info:
        parse_tower_spec(document(actions=[action]))
    assert info.value.position == "actions[0].table[1], column 5"


def test_table_length_is_checked():
    action = dict(MCCOOL_ACTION, inverse_table=["x1"])
    with pytest.raises(SpecFileError, match="expected 2 image words"):
        parse_tower_spec(document(actions=[action]))


def test_unknown_and_duplicate_action_keys():
    with pytest.raises(SpecFileError, match="unknown key 'tabel'"):
        parse_tower_spec(document(actions=[dict(MCCOOL_ACTION, tabel=[])]))
    with pytest.raises(SpecFileError, match="duplicate action"):
        parse_tower_spec(document(actions=[MCCOOL_ACTION, MCCOOL_ACTION]))


def test_factor_errors():
    with pytest.raises(SpecFileError) as info:
        parse_tower_spec(json.dumps({"factors": [{"rank": 0}]}))
    assert info.value.position == "factors[0].rank"
    with pytest.raises(SpecFileError) as info:
        parse_tower_spec(json.dumps({"factors": [{"rank": 1, "kind": "Abelian"}]}))
    assert info.value.position == "factors[0].kind"
    with pytest.raises(SpecFileError, match="missing key 'factors'"):
        parse_tower_spec("{}")


def test_missing_file(tmp_path):
    with pytest.raises(SpecFileError) as info:
        load_tower_spec(tmp_path / "absent.json")
    assert info.value.position == "file"


def test_dump_then_parse_keeps_actions(tmp_path):
    spec = upper_mccool(4).tower
    path = tmp_path / "mccool4.json"
    path.write_text(dump_tower_spec(spec), encoding="utf-8")
    loaded = load_tower_spec(path)
    assert loaded.ranks == spec.ranks
    assert loaded.actions == spec.actions


def test_shipped_files_load(data_dir):
    assert load_tower_spec(data_dir / "upper_mccool_3.json").ranks == (1, 2)
    assert load_tower_spec(data_dir / "direct_product.json").ranks == (1, 2)
    assert not validate_spec(load_tower_spec(data_dir / "klein_bottle.json")).is_valid


@pytest.mark.parametrize("key,value,message", [
    ("target_factor", 1, "target_factor must be at least 2"),
    ("target_factor", 3, "no factor 3"),
    ("source_factor", 0, "source_factor must be at least 1"),
    ("source_generator", 0, "source_generator must be at least 1"),
])
def test_action_indices_follow_schema(key, value, message):
    with pytest.raises(SpecFileError, match=message) as info:
        parse_tower_spec(document(actions=[dict(MCCOOL_ACTION, **{key: value})]))
    assert info.value.position == f"actions[0].{key}"


def shipped_documents(data_dir):
    return sorted(path for path in data_dir.rglob("*.json") if path.stem != "tower_spec.schema")


def test_shipped_files_match_schema(data_dir):
    schema = json.loads((data_dir / "tower_spec.schema.json").read_text(encoding="utf-8"))
    paths = shipped_documents(data_dir)
    assert len(paths) == 12
    for path in paths:
        jsonschema.validate(json.loads(path.read_text(encoding="utf-8")), schema)
        load_tower_spec(path)


def test_schema_and_loader_reject_the_same_action(data_dir):
    schema = json.loads((data_dir / "tower_spec.schema.json").read_text(encoding="utf-8"))
    bad = json.loads(document(actions=[dict(MCCOOL_ACTION, target_factor=1)]))
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(bad, schema)
    with pytest.raises(SpecFileError):
        parse_tower_spec(json.dumps(bad))
