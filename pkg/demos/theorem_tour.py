"""Walk through the four equivalent conditions for a few corings.

Over a separable base all four verdicts coincide.  The trivial coring over
the dual numbers shows what goes wrong without separability: it is
coseparable, yet C ⊗ C^op is not semisimple.
"""
from coring_lab import catalog
from coring_lab.theorem import main_theorem_report


def show(ident):
    rep = main_theorem_report(catalog.entry(ident).build())
    print(f"{ident}  ({rep.hypothesis_note})")
    print(f"  (i)   coseparable                  {rep.cosep}")
    for name, v in rep.base_changes.items():
        print(f"  (ii)  C ⊗ {name:24s} {v}")
    for name, v in rep.tensors.items():
        print(f"  (iii) C ⊗ {name:24s} {v}")
    print(f"  (iv)  C ⊗ C^op semisimple          {rep.with_opposite}")
    print(f"  right dual ring separable         {rep.dual_separable}")
    print(f"  consistent: {rep.consistent}\n")


for ident in ("comatrix-2", "dual-dual-numbers", "trivial-dual-numbers"):
    show(ident)
