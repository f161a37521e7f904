import json
from pathlib import Path

import pytest

from coring_lab import catalog
from coring_lab.algebra import dual_numbers, matrix_algebra
from coring_lab.comodule import regular_comodule
from coring_lab.coring import check_coring, comatrix_coalgebra
from coring_lab.serialize import InputError, dumps, from_json, load, schema, validate

ROOT = Path(__file__).resolve().parents[1]


@pytest.mark.parametrize("e", catalog.entries(), ids=lambda e: e.id)
def test_catalog_objects_round_trip(e):
    obj = e.build()
    data = json.loads(dumps(obj))
    back = from_json(data, e.kind)
    assert back.to_json() == obj.to_json()


@pytest.mark.parametrize("kind,obj", [
    ("algebra", matrix_algebra(2)),
    ("comodule", regular_comodule(comatrix_coalgebra(2), "left")),
])
def test_other_kinds_round_trip(kind, obj):
    assert from_json(json.loads(dumps(obj)), kind).to_json() == obj.to_json()


def test_quotient_comultiplication_form():
    c = catalog.entry("sweedler-dual-numbers").build()
    data = c.to_json()
    data["comult"] = {"codomain": "C⊗_AC", "matrix": c.comult.to_json()}
    back = from_json(data, "coring")
    assert back.comult == c.comult and check_coring(back).ok


def test_rational_strings():
    data = dual_numbers().to_json()
    data["unit"] = ["2/2", 0]
    assert list(from_json(data, "algebra").unit) == [1, 0]


def test_schema_violation_names_the_path():
    data = comatrix_coalgebra(2).to_json()
    data["counit"][0][1] = "one"
    with pytest.raises(InputError, match="counit/0/1"):
        from_json(data, "coring", "x.json")


def test_structural_error_is_input_error():
    data = comatrix_coalgebra(2).to_json()
    data["counit"] = [[1, 0, 0]]
    with pytest.raises(InputError, match="x.json"):
        from_json(data, "coring", "x.json")


def test_json_syntax_error_has_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n  "dim": 1,\n  "mult": [\n}')
    with pytest.raises(InputError, match=r"bad\.json:4:1"):
        load(p, "algebra")


def test_missing_file(tmp_path):
    with pytest.raises(InputError, match="missing.json"):
        load(tmp_path / "missing.json", "coring")


def test_unknown_kind():
    with pytest.raises(ValueError):
        validate({}, "torsor")


def test_dumps_is_deterministic():
    c = catalog.entry("comatrix-2").build()
    assert dumps(c) == dumps(catalog.entry("comatrix-2").build())


def test_docs_schema_is_the_shipped_schema():
    shipped = json.loads((ROOT / "docs" / "schemas" / "coring-lab.schema.json").read_text("utf-8"))
    assert shipped == schema()
