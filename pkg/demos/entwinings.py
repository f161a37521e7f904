"""Entwining structures, the corings they induce, and their tensor products."""
from coring_lab import catalog
from coring_lab.coring import check_coring
from coring_lab.duals import is_semisimple_coring
from coring_lab.entwine import check_entwining, entwined_coring, tensor_entwining

group = catalog.entry("group-2").build()
flip = catalog.entry("flip-dual-numbers-comatrix-2").build()

for e in (group, flip):
    c = entwined_coring(e)
    print(f"{e.name}: valid {check_entwining(e).ok}, induced coring of dim {c.dim}, "
          f"axioms {check_coring(c).ok}, semisimple {is_semisimple_coring(c).semisimple}")

t = tensor_entwining(group, catalog.entry("flip-QQ-grouplike-2").build())
print(f"tensor entwining {t.entwining.name}: valid {t.report.ok}")
