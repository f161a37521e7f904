"""Harness evaluating the four equivalent conditions on a coring over a separable algebra."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Algebra, field_extension, rationals, separability_idempotent
from .coring import (Coring, base_change, comatrix_coalgebra,
                     grouplike_coalgebra, opposite_coring, tensor_coring,
                     trivial_coring)
from .cosep import coseparability
from .duals import RIGHT, dual_ring, is_semisimple_coring

DEFAULT_EXTENSIONS = ([1, 0, 1], [1, 0, -2], [1, 0, 0, -2])


def default_extensions() -> list[Algebra]:
    return [field_extension(p) for p in DEFAULT_EXTENSIONS]


def default_test_corings() -> list[Coring]:
    return [trivial_coring(rationals()), comatrix_coalgebra(2), grouplike_coalgebra(2)]


@dataclass
class TheoremReport:
    coring: str
    hypothesis: bool
    hypothesis_note: str
    cosep: bool                                   # (i)
    base_changes: dict = field(default_factory=dict)      # (ii) name -> verdict
    tensors: dict = field(default_factory=dict)           # (iii) name -> verdict
    with_opposite: bool = False                    # (iv)
    dual_separable: bool = False                   # C* separable
    timings: dict = field(default_factory=dict)

    def verdicts(self) -> list[bool]:
        return [self.cosep, *self.base_changes.values(), *self.tensors.values(), self.with_opposite]

    @property
    def all_agree(self) -> bool:
        return len(set(self.verdicts())) == 1

    @property
    def cross_check(self) -> bool:
        return self.dual_separable == self.cosep

    @property
    def consistent(self) -> bool:
        """Agreement is only demanded when the hypothesis holds."""
        return (not self.hypothesis) or (self.all_agree and self.cross_check)

    def to_json(self, timings: bool = False):
        out = {"coring": self.coring,
                "hypothesis": self.hypothesis,
                "hypothesis_note": self.hypothesis_note,
                "i_coseparable": self.cosep,
                "ii_base_change_semisimple": self.base_changes,
                "iii_tensor_semisimple": self.tensors,
                "iv_tensor_opposite_semisimple": self.with_opposite,
                "right_dual_separable": self.dual_separable,
                "all_agree": self.all_agree,
                "cross_check": self.cross_check,
                "consistent": self.consistent}
        if timings:
            out["timings"] = self.timings
        return out


def main_theorem_report(c: Coring, extensions: Sequence[Algebra] | None = None,
                        test_corings: Sequence[Coring] | None = None) -> TheoremReport:
    """Evaluate (i)-(iv) and the C*-separability cross-check.

    When the base algebra is not separable (or the characteristic is not 0)
    the verdicts are still listed but agreement is not demanded.
    """
    extensions = default_extensions() if extensions is None else list(extensions)
    test_corings = default_test_corings() if test_corings is None else list(test_corings)
    timings = {}

    def timed(label, fn):
        t = time.perf_counter()
        out = fn()
        timings[label] = round(time.perf_counter() - t, 4)
        return out

    if c.field.char != 0:
        hyp, note = False, "theorem not applicable: characteristic is not 0"
    elif separability_idempotent(c.base) is None:
        hyp, note = False, "hypothesis fails: A not separable"
    else:
        hyp, note = True, "A separable over a field of characteristic 0"
    rep = TheoremReport(c.name, hyp, note, timed("i", lambda: coseparability(c) is not None))
    for kk in extensions:
        rep.base_changes[kk.name] = timed(f"ii:{kk.name}",
                                          lambda: is_semisimple_coring(base_change(c, kk)).semisimple)
    for d in test_corings:
        rep.tensors[d.name] = timed(f"iii:{d.name}",
                                    lambda: is_semisimple_coring(tensor_coring(c, d)).semisimple)
    rep.with_opposite = timed("iv", lambda: is_semisimple_coring(
        tensor_coring(c, opposite_coring(c))).semisimple)
    rep.dual_separable = timed("dual", lambda: separability_idempotent(dual_ring(c, RIGHT).algebra) is not None)
    rep.timings = timings
    return rep
