"""JSON ingestion for every structure-constant object, validated against
the bundled schema before any object is built."""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .algebra import Algebra
from .bimodule import Bimodule
from .comodule import Bicomodule, Comodule
from .coring import Coring
from .entwine import Entwining
from .exactlin import GF, QQ, Field, Matrix

KINDS = ("algebra", "bimodule", "coring", "comodule", "bicomodule", "entwining")


class InputError(ValueError):
    """Unreadable or malformed input, with file and position context."""


@lru_cache(maxsize=None)
def schema() -> dict:
    text = resources.files("coring_lab").joinpath("schemas/coring-lab.schema.json").read_text("utf-8")
    return json.loads(text)


def validate(data, kind: str, where: str = "<input>"):
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    full = schema()
    wrapper = {"$schema": full["$schema"], "$defs": full["$defs"], "$ref": f"#/$defs/{kind}"}
    try:
        jsonschema.validate(data, wrapper)
    except jsonschema.ValidationError as err:
        path = "/".join(str(p) for p in err.absolute_path) or "(root)"
        raise InputError(f"{where}: {kind} schema violation at {path}: {err.message}") from None


def _field(char: int) -> Field:
    return QQ if char == 0 else GF(char)


def matrix_from_json(rows, field: Field, ncols: int | None = None) -> Matrix:
    return Matrix.from_rows(rows, field, ncols)


def algebra_from_json(d: dict) -> Algebra:
    field = _field(d.get("char", 0))
    return Algebra.from_table(d.get("name", "algebra"), d["mult"], d["unit"], field)


def bimodule_from_json(d: dict) -> Bimodule:
    left, right = algebra_from_json(d["left_algebra"]), algebra_from_json(d["right_algebra"])
    n, F = d["dim"], left.field
    return Bimodule(left, right, n,
                    [matrix_from_json(m, F, n) for m in d["left_action"]],
                    [matrix_from_json(m, F, n) for m in d["right_action"]],
                    name=d.get("name", ""))


def coring_from_json(d: dict) -> Coring:
    base = algebra_from_json(d["base"])
    carrier = bimodule_from_json(d["carrier"])
    F, n = base.field, carrier.dim
    counit = matrix_from_json(d["counit"], F, n)
    comult = d["comult"]
    name = d.get("name", "coring")
    if "lift" in comult:
        lift = []
        for terms in comult["lift"]:
            col: dict = {}
            for k, l, v in terms:
                col[k * n + l] = col.get(k * n + l, 0) + F(v)
            lift.append(col)
        return Coring(base, carrier, lift, counit, name=name)
    if "matrix" not in comult:
        raise InputError("comultiplication needs a 'lift' or a 'matrix'")
    return Coring.from_quotient_comult(base, carrier, matrix_from_json(comult["matrix"], F, n),
                                       counit, name=name)


def comodule_from_json(d: dict) -> Comodule:
    c = coring_from_json(d["coring"])
    carrier = bimodule_from_json(d["carrier"])
    return Comodule(c, d["side"], carrier, matrix_from_json(d["coaction"], c.field, carrier.dim),
                    name=d.get("name", ""))


def bicomodule_from_json(d: dict) -> Bicomodule:
    left, right = coring_from_json(d["left_coring"]), coring_from_json(d["right_coring"])
    carrier = bimodule_from_json(d["carrier"])
    F, n = carrier.field, carrier.dim
    return Bicomodule(left, right, carrier, matrix_from_json(d["left_coaction"], F, n),
                      matrix_from_json(d["right_coaction"], F, n), name=d.get("name", ""))


def entwining_from_json(d: dict) -> Entwining:
    a = algebra_from_json(d["algebra"])
    c = coring_from_json(d["coalgebra"])
    size = a.dim * c.dim
    return Entwining(a, c, matrix_from_json(d["psi"], a.field, size), name=d.get("name", ""))


_BUILDERS = {"algebra": algebra_from_json, "bimodule": bimodule_from_json,
             "coring": coring_from_json, "comodule": comodule_from_json,
             "bicomodule": bicomodule_from_json, "entwining": entwining_from_json}


def from_json(data, kind: str, where: str = "<input>"):
    """Validate and build an object of the given kind."""
    validate(data, kind, where)
    try:
        return _BUILDERS[kind](data)
    except InputError:
        raise
    except (ValueError, ArithmeticError, KeyError, IndexError) as err:
        raise InputError(f"{where}: invalid {kind}: {err}") from None


def load(path: str | Path, kind: str):
    path = Path(path)
    try:
        text = path.read_text("utf-8")
    except OSError as err:
        raise InputError(f"{path}: {err.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(f"{path}:{err.lineno}:{err.colno}: {err.msg}") from None
    return from_json(data, kind, str(path))


def dumps(obj) -> str:
    """Deterministic JSON text for a report or object."""
    data = obj.to_json() if hasattr(obj, "to_json") else obj
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
