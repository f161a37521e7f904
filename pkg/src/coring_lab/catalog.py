"""Built-in example catalog with frozen expected verdicts.

Every expected verdict records how it was obtained in its ``basis`` field:

* ``by_definition``: immediate from the construction;
* ``known_result``: a standard published fact about the example;
* ``independent_solve``: computed by the standalone sympy oracle in
  ``tools/oracle.py`` (a different formulation of the same question) and
  then frozen here.

The catalog doubles as a regression suite: :func:`run_catalog` recomputes
every verdict and flags any mismatch.
"""
from __future__ import annotations

import fnmatch
import time
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import (dual_numbers, field_extension, group_algebra,
                      matrix_algebra, product_algebra, rationals,
                      separability_idempotent, upper_triangular)
from .comodule import check_bicomodule, regular_bicomodule, round_trip_report, tensor_square_bicomodule
from .coring import (base_change, check_coring, comatrix_coalgebra,
                     dual_coalgebra, grouplike_coalgebra, opposite_coring,
                     sweedler_coring, tensor_coring, trivial_coring)
from .cosep import coseparability
from .duals import is_semisimple_coring
from .entwine import check_entwining, entwined_coring, flip_entwining, group_entwining

BASES = ("by_definition", "known_result", "independent_solve")

ALGEBRAS = {
    "QQ": rationals,
    "M2": lambda: matrix_algebra(2),
    "QxQ": lambda: product_algebra(2),
    "dual-numbers": dual_numbers,
    "T2": lambda: upper_triangular(2),
    "Q(i)": lambda: field_extension([1, 0, 1]),
    "k[Z2]": lambda: group_algebra(2),
}


@dataclass(frozen=True)
class Expected:
    value: bool
    basis: str

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    kind: str                      # coring, entwining or bicomodule
    constructor: str
    params: tuple = ()
    expected: dict = field(default_factory=dict)

    def build(self):
        return _build(self.id)

    def to_json(self):
        return {"id": self.id, "kind": self.kind, "constructor": self.constructor,
                "params": list(self.params),
                "expected": {k: {"value": e.value, "basis": e.basis} for k, e in self.expected.items()}}


def _e(value: bool, basis: str = "independent_solve") -> Expected:
    return Expected(value, basis)


def _coring(id, constructor, params, cosep, semisimple):
    return CatalogEntry(id, "coring", constructor, tuple(params),
                        {"valid": _e(True, "by_definition"), "coseparable": cosep, "semisimple": semisimple})


D, K, I = "by_definition", "known_result", "independent_solve"

CATALOG: tuple[CatalogEntry, ...] = (
    _coring("trivial-QQ", "trivial", ["QQ"], _e(True, D), _e(True, D)),
    _coring("trivial-M2", "trivial", ["M2"], _e(True, D), _e(True)),
    _coring("trivial-QxQ", "trivial", ["QxQ"], _e(True, D), _e(True)),
    _coring("trivial-dual-numbers", "trivial", ["dual-numbers"], _e(True, D), _e(False, K)),
    _coring("trivial-T2", "trivial", ["T2"], _e(True, D), _e(False)),
    _coring("comatrix-2", "comatrix", [2], _e(True, K), _e(True)),
    _coring("comatrix-3", "comatrix", [3], _e(True, K), _e(True)),
    _coring("grouplike-2", "grouplike", [2], _e(True, K), _e(True)),
    _coring("grouplike-3", "grouplike", [3], _e(True, K), _e(True)),
    _coring("dual-dual-numbers", "dual", ["dual-numbers"], _e(False, K), _e(False)),
    _coring("dual-T2", "dual", ["T2"], _e(False, K), _e(False)),
    _coring("opposite-dual-dual-numbers", "opposite", ["dual-dual-numbers"], _e(False), _e(False)),
    _coring("sweedler-M2", "sweedler", ["M2"], _e(True, K), _e(True, K)),
    _coring("sweedler-dual-numbers", "sweedler", ["dual-numbers"], _e(True), _e(True)),
    _coring("sweedler-QxQ", "sweedler", ["QxQ"], _e(True), _e(True)),
    _coring("sweedler-Q(i)", "sweedler", ["Q(i)"], _e(True), _e(True)),
    _coring("basechange-comatrix-2-Q(i)", "base_change", ["comatrix-2", "Q(i)"], _e(True), _e(True)),
    _coring("tensor-trivial-dual-numbers-grouplike-2", "tensor",
            ["trivial-dual-numbers", "grouplike-2"], _e(True), _e(False)),
    _coring("entwined-group-2", "entwined", ["group-2"], _e(True), _e(True)),
    _coring("entwined-flip-dual-numbers-comatrix-2", "entwined", ["flip-dual-numbers-comatrix-2"],
            _e(True), _e(False)),
    CatalogEntry("flip-QQ-grouplike-2", "entwining", "flip", ("QQ", "grouplike-2"),
                 {"valid": _e(True, D)}),
    CatalogEntry("flip-M2-grouplike-2", "entwining", "flip", ("M2", "grouplike-2"),
                 {"valid": _e(True, D)}),
    CatalogEntry("flip-dual-numbers-comatrix-2", "entwining", "flip", ("dual-numbers", "comatrix-2"),
                 {"valid": _e(True, D)}),
    CatalogEntry("group-2", "entwining", "group", (2,), {"valid": _e(True, K)}),
    CatalogEntry("group-3", "entwining", "group", (3,), {"valid": _e(True, K)}),
    CatalogEntry("bicomod-regular-comatrix-2", "bicomodule", "regular", ("comatrix-2",),
                 {"valid": _e(True, D), "round_trip": _e(True, K)}),
    CatalogEntry("bicomod-square-comatrix-2", "bicomodule", "tensor_square", ("comatrix-2",),
                 {"valid": _e(True, D), "round_trip": _e(True, K)}),
    CatalogEntry("bicomod-regular-trivial-M2", "bicomodule", "regular", ("trivial-M2",),
                 {"valid": _e(True, D), "round_trip": _e(True, K)}),
    CatalogEntry("bicomod-regular-grouplike-2", "bicomodule", "regular", ("grouplike-2",),
                 {"valid": _e(True, D), "round_trip": _e(True, K)}),
    CatalogEntry("bicomod-square-trivial-dual-numbers", "bicomodule", "tensor_square",
                 ("trivial-dual-numbers",), {"valid": _e(True, D), "round_trip": _e(True, K)}),
    CatalogEntry("bicomod-regular-sweedler-dual-numbers", "bicomodule", "regular",
                 ("sweedler-dual-numbers",), {"valid": _e(True, D), "round_trip": _e(True, K)}),
)

_BY_ID = {e.id: e for e in CATALOG}


def entry(id: str) -> CatalogEntry:
    return _BY_ID[id]


def entries(kind: str | None = None, pattern: str | None = None) -> list[CatalogEntry]:
    """Entries sorted by id, optionally filtered by kind and a glob pattern."""
    out = [e for e in CATALOG if (kind is None or e.kind == kind)
           and (pattern is None or fnmatch.fnmatchcase(e.id, pattern))]
    return sorted(out, key=lambda e: e.id)


@lru_cache(maxsize=None)
def _build(id: str):
    e = _BY_ID[id]
    c, p = e.constructor, e.params
    if e.kind == "coring":
        if c == "trivial":
            obj = trivial_coring(ALGEBRAS[p[0]]())
        elif c == "comatrix":
            obj = comatrix_coalgebra(p[0])
        elif c == "grouplike":
            obj = grouplike_coalgebra(p[0])
        elif c == "dual":
            obj = dual_coalgebra(ALGEBRAS[p[0]]())
        elif c == "opposite":
            obj = opposite_coring(_build(p[0]))
        elif c == "sweedler":
            a = ALGEBRAS[p[0]]()
            obj = sweedler_coring(a, [list(a.unit)])
        elif c == "base_change":
            obj = base_change(_build(p[0]), ALGEBRAS[p[1]]())
        elif c == "tensor":
            obj = tensor_coring(_build(p[0]), _build(p[1]))
        elif c == "entwined":
            obj = entwined_coring(_build(p[0]))
        else:
            raise KeyError(c)
        obj.name = id
        return obj
    if e.kind == "entwining":
        if c == "flip":
            return flip_entwining(ALGEBRAS[p[0]](), _build(p[1]))
        if c == "group":
            return group_entwining(p[0])
        raise KeyError(c)
    if e.kind == "bicomodule":
        if c == "regular":
            return regular_bicomodule(_build(p[0]))
        if c == "tensor_square":
            return tensor_square_bicomodule(_build(p[0]))
        raise KeyError(c)
    raise KeyError(e.kind)


def evaluate(e: CatalogEntry) -> dict:
    """Recompute every verdict listed for an entry."""
    obj = e.build()
    out = {}
    if e.kind == "coring":
        out["valid"] = check_coring(obj).ok
        out["coseparable"] = coseparability(obj) is not None
        out["semisimple"] = is_semisimple_coring(obj).semisimple
    elif e.kind == "entwining":
        out["valid"] = check_entwining(obj).ok
    else:
        out["valid"] = check_bicomodule(obj).ok
        out["round_trip"] = round_trip_report(obj).ok
    return out


def separable_base(e: CatalogEntry) -> bool:
    return e.kind == "coring" and separability_idempotent(e.build().base) is not None


def run_catalog(pattern: str | None = None, timings: bool = False) -> dict:
    """Evaluate the matching entries; ``ok`` is False iff some verdict mismatches."""
    reports = []
    for e in entries(pattern=pattern):
        t = time.perf_counter()
        got = evaluate(e)
        mismatches = sorted(k for k, exp in e.expected.items() if got.get(k) != exp.value)
        rep = {"id": e.id, "kind": e.kind, "verdicts": got,
               "expected": {k: x.value for k, x in e.expected.items()},
               "mismatches": mismatches}
        if timings:
            rep["seconds"] = round(time.perf_counter() - t, 3)
        reports.append(rep)
    return {"ok": all(not r["mismatches"] for r in reports), "entries": reports}
