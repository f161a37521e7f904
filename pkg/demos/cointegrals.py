"""Coseparability in practice: witnesses, failures and the dual-ring cross-check.

Run with ``python demos/cointegrals.py``.
"""
from coring_lab import catalog
from coring_lab.algebra import separability_idempotent
from coring_lab.cosep import coseparability
from coring_lab.duals import RIGHT, dual_ring

for ident in ("comatrix-2", "grouplike-3", "trivial-T2", "dual-dual-numbers", "sweedler-dual-numbers"):
    c = catalog.entry(ident).build()
    w = coseparability(c)
    dual = dual_ring(c, RIGHT).algebra
    print(f"{ident}: dim {c.dim} over a base of dim {c.base.dim}")
    if w is None:
        print("  no cointegral: both linear systems are inconsistent")
    else:
        nz = sum(1 for x in w.gamma.entries() if x)
        print(f"  cointegral found, {nz} nonzero structure constants out of {len(w.gamma.entries())}")
    base_sep = separability_idempotent(c.base) is not None
    dual_sep = separability_idempotent(dual) is not None
    print(f"  base separable: {base_sep}; dual ring of dim {dual.dim} separable: {dual_sep}")
    if base_sep:
        print(f"  verdicts agree: {dual_sep == (w is not None)}")
