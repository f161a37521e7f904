"""Comodules and bicomodules over corings, and the passage between
C-D°-bicomodules and left comodules over the tensor coring C ⊗_k D.

A right C-comodule has a carrier whose right algebra is the base A of C and
a coaction ρ: M -> M ⊗_A C given in the quotient coordinates of that tensor
presentation.  Left comodules mirror this with λ: M -> C ⊗_A M.  The other
side of the carrier may carry a second algebra (relative comodules); the
coaction must then be a bimodule map.
"""
from __future__ import annotations

from functools import cached_property

from .algebra import combine, opposite_algebra, rationals, tensor_algebra
from .bimodule import (AlgebraMismatchError, Bimodule, BimoduleMap,
                       TensorPresentation, TriplePresentation,
                       check_bimodule, check_bimodule_map, induced_map,
                       sparse_add)
from .coring import Coring, opposite_coring, tensor_coring
from .exactlin import DimensionError, Matrix, Subspace
from .report import Report

LEFT, RIGHT = "left", "right"


class Comodule:
    """A left or right comodule over an A-coring."""

    def __init__(self, coring: Coring, side: str, carrier: Bimodule, coaction: Matrix, name: str = ""):
        if side not in (LEFT, RIGHT):
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        base_side = carrier.right_algebra if side == RIGHT else carrier.left_algebra
        if base_side != coring.base:
            raise AlgebraMismatchError(f"carrier is not a {side} module over {coring.base.name}")
        self.coring = coring
        self.side = side
        self.carrier = carrier
        self.coaction = coaction
        self.name = name or f"{side}-comodule"
        if coaction.shape != (self.presentation.dim, carrier.dim):
            raise DimensionError(f"coaction of shape {coaction.shape}, expected "
                                 f"{(self.presentation.dim, carrier.dim)}")

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def field(self):
        return self.carrier.field

    def __repr__(self):
        return f"Comodule({self.name!r}, {self.side}, dim={self.dim}, over {self.coring.name})"

    @cached_property
    def presentation(self) -> TensorPresentation:
        """M ⊗_A C (right) or C ⊗_A M (left)."""
        if self.side == RIGHT:
            return TensorPresentation(self.carrier, self.coring.carrier)
        return TensorPresentation(self.coring.carrier, self.carrier)

    @cached_property
    def terms(self) -> list[list[tuple]]:
        """``terms[x]`` = [(i, k, coef)] over coset representatives.

        For a right comodule ρ(m_x) = Σ coef m_i ⊗ c_k; for a left one
        λ(m_x) = Σ coef c_i ⊗ m_k.
        """
        pres = self.presentation
        return [[(*pres.representative(q), v) for q, v in sorted(col.items())]
                for col in self.coaction.cols_sparse()]

    @property
    def coaction_map(self) -> BimoduleMap:
        return BimoduleMap(self.carrier, self.presentation.quotient, self.coaction)

    @classmethod
    def from_lift(cls, coring: Coring, side: str, carrier: Bimodule, lift, name: str = ""):
        """Build from k-level lifts: sparse vectors of M ⊗_k C (index i*dim C + k)
        for a right comodule, or of C ⊗_k M (index k*dim M + i) for a left one."""
        pres = (TensorPresentation(carrier, coring.carrier) if side == RIGHT
                else TensorPresentation(coring.carrier, carrier))
        coaction = Matrix.from_sparse_cols([pres.project(v) for v in lift], pres.dim, carrier.field)
        out = cls(coring, side, carrier, coaction, name)
        out.__dict__["presentation"] = pres
        return out

    def to_json(self):
        return {"name": self.name, "side": self.side, "coring": self.coring.to_json(),
                "carrier": self.carrier.to_json(), "coaction": self.coaction.to_json()}


def check_comodule(m: Comodule) -> Report:
    """Linearity of the coaction, coassociativity and the counit law."""
    rep = Report()
    rep.extend(check_bimodule(m.carrier), "carrier.")
    if not rep.ok:
        return rep
    rep.extend(check_bimodule_map(m.coaction_map), "coaction_")
    if not rep.ok:
        return rep
    c, n, dm = m.coring, m.coring.dim, m.dim
    F = m.field
    if m.side == RIGHT:
        triple = TriplePresentation(m.carrier, c.carrier, c.carrier, mn=m.presentation)
    else:
        triple = TriplePresentation(c.carrier, c.carrier, m.carrier, mn=c.pres2)
    ecols = c.counit_cols
    for x in range(dm):
        twice: dict = {}
        via_comult: dict = {}
        counit: dict = {}
        for i, k, v in m.terms[x]:
            if m.side == RIGHT:
                # (ρ⊗C)ρ versus (M⊗Δ)ρ in M ⊗ C ⊗ C
                for i2, k2, w in m.terms[i]:
                    sparse_add(twice, {(i2 * n + k2) * n + k: w}, v)
                for k1, l1, w in c.terms[k]:
                    sparse_add(via_comult, {(i * n + k1) * n + l1: w}, v)
                # (M⊗ε)ρ(m) = Σ m_i ε(c_k)
                for b, e in ecols[k].items():
                    sparse_add(counit, m.carrier.right_cols[b][i], v * e)
            else:
                # (C⊗λ)λ versus (Δ⊗M)λ in C ⊗ C ⊗ M
                for i2, k2, w in m.terms[k]:
                    sparse_add(twice, {(i * n + i2) * dm + k2: w}, v)
                for k1, l1, w in c.terms[i]:
                    sparse_add(via_comult, {(k1 * n + l1) * dm + k: w}, v)
                for b, e in ecols[i].items():
                    sparse_add(counit, m.carrier.left_cols[b][k], v * e)
        if triple.project(twice) != triple.project(via_comult):
            rep.add("coassociativity", (x,))
        if counit != {x: F.one}:
            rep.add("counit", (x,))
    return rep


def regular_comodule(c: Coring, side: str = RIGHT) -> Comodule:
    """C over itself with coaction Δ."""
    out = Comodule(c, side, c.carrier, c.comult, name=f"{c.name} ({side} regular)")
    out.__dict__["presentation"] = c.pres2
    return out


def is_comodule_morphism(f: Matrix, m: Comodule, n: Comodule) -> bool:
    """f: M -> N is a comodule map: bimodule-linear and colinear."""
    if m.coring is not n.coring and m.coring.to_json() != n.coring.to_json():
        return False
    if m.side != n.side or f.shape != (n.dim, m.dim):
        return False
    if not check_bimodule_map(BimoduleMap(m.carrier, n.carrier, f)).ok:
        return False
    ident = Matrix.identity(m.coring.dim, m.field)
    if m.side == RIGHT:
        pushed = induced_map(f, ident, m.presentation, n.presentation)
    else:
        pushed = induced_map(ident, f, m.presentation, n.presentation)
    return n.coaction @ f == pushed @ m.coaction


# -- bicomodules ----------------------------------------------------------------

class Bicomodule:
    """A C'-C-bicomodule: left C'-coaction λ and right C-coaction ρ on one carrier."""

    def __init__(self, left_coring: Coring, right_coring: Coring, carrier: Bimodule,
                 left_coaction: Matrix, right_coaction: Matrix, name: str = ""):
        self.left_coring = left_coring
        self.right_coring = right_coring
        self.carrier = carrier
        self.name = name or "bicomodule"
        self.left = Comodule(left_coring, LEFT, carrier, left_coaction, self.name)
        self.right = Comodule(right_coring, RIGHT, carrier, right_coaction, self.name)

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def field(self):
        return self.carrier.field

    @property
    def left_coaction(self) -> Matrix:
        return self.left.coaction

    @property
    def right_coaction(self) -> Matrix:
        return self.right.coaction

    def __repr__(self):
        return (f"Bicomodule({self.name!r}, dim={self.dim}, "
                f"{self.left_coring.name} | {self.right_coring.name})")

    def __eq__(self, other):
        if not isinstance(other, Bicomodule):
            return NotImplemented
        return (self.carrier == other.carrier and self.left_coaction == other.left_coaction
                and self.right_coaction == other.right_coaction)

    __hash__ = object.__hash__

    def to_json(self):
        return {"name": self.name, "left_coring": self.left_coring.to_json(),
                "right_coring": self.right_coring.to_json(), "carrier": self.carrier.to_json(),
                "left_coaction": self.left_coaction.to_json(),
                "right_coaction": self.right_coaction.to_json()}


def check_bicomodule(m: Bicomodule) -> Report:
    """Both comodule structures plus (C'⊗ρ)λ = (λ⊗C)ρ."""
    rep = Report()
    rep.extend(check_comodule(m.left), "left.")
    rep.extend(check_comodule(m.right), "right.")
    if not rep.ok:
        return rep
    cl, cr, dm = m.left_coring, m.right_coring, m.dim
    nr = cr.dim
    triple = TriplePresentation(cl.carrier, m.carrier, cr.carrier, mn=m.left.presentation)
    for x in range(dm):
        lam_then_rho: dict = {}
        for k, i, v in m.left.terms[x]:
            for i2, l, w in m.right.terms[i]:
                sparse_add(lam_then_rho, {(k * dm + i2) * nr + l: w}, v)
        rho_then_lam: dict = {}
        for i, l, v in m.right.terms[x]:
            for k, i2, w in m.left.terms[i]:
                sparse_add(rho_then_lam, {(k * dm + i2) * nr + l: w}, v)
        if triple.project(lam_then_rho) != triple.project(rho_then_lam):
            rep.add("compatibility", (x,))
    return rep


def is_bicomodule_morphism(f: Matrix, m: Bicomodule, n: Bicomodule) -> bool:
    return is_comodule_morphism(f, m.left, n.left) and is_comodule_morphism(f, m.right, n.right)


def regular_bicomodule(c: Coring) -> Bicomodule:
    """C as a C-C-bicomodule with λ = ρ = Δ."""
    out = Bicomodule(c, c, c.carrier, c.comult, c.comult, name=f"{c.name} (regular)")
    out.left.__dict__["presentation"] = c.pres2
    out.right.__dict__["presentation"] = c.pres2
    return out


def tensor_square_bicomodule(c: Coring) -> Bicomodule:
    """C ⊗_A C with λ = Δ⊗C and ρ = C⊗Δ."""
    p2, n = c.pres2, c.dim
    carrier = p2.quotient
    q2 = p2.dim
    left_lift, right_lift = [], []
    for q in range(q2):
        x, y = p2.representative(q)
        lam: dict = {}
        for k, l, v in c.terms[x]:
            for r, w in p2.proj_cols[l * n + y].items():
                sparse_add(lam, {k * q2 + r: w}, v)
        rho: dict = {}
        for k, l, v in c.terms[y]:
            for r, w in p2.proj_cols[x * n + k].items():
                sparse_add(rho, {r * n + l: w}, v)
        left_lift.append(lam)
        right_lift.append(rho)
    left = Comodule.from_lift(c, LEFT, carrier, left_lift)
    right = Comodule.from_lift(c, RIGHT, carrier, right_lift)
    return Bicomodule(c, c, carrier, left.coaction, right.coaction, name=f"{c.name}⊗{c.name}")


def induced_comodule(x: Bimodule, m: Bicomodule | Comodule) -> Comodule:
    """X ⊗_{A'} M as a right C-comodule with coaction X⊗ρ.

    ``m`` is a right C-comodule whose carrier is an (A', A)-bimodule and whose
    coaction is A'-linear (a bicomodule over the trivial A'-coring and C).
    """
    m = m.right if isinstance(m, Bicomodule) else m
    if m.side != RIGHT:
        raise ValueError("induced_comodule needs a right comodule")
    c, dm, nc = m.coring, m.dim, m.coring.dim
    xm = TensorPresentation(x, m.carrier)
    carrier = xm.quotient
    lift = []
    for q in range(xm.dim):
        i, j = xm.representative(q)
        col: dict = {}
        for j2, k, v in m.terms[j]:
            for s, w in xm.proj_cols[i * dm + j2].items():
                sparse_add(col, {s * nc + k: w}, v)
        lift.append(col)
    return Comodule.from_lift(c, RIGHT, carrier, lift, name=f"{x.name}⊗{m.name}")


def cotensor(m: Comodule, n: Comodule) -> Subspace:
    """M □_C N: the kernel of ρ⊗N - M⊗λ inside M ⊗_A N (quotient coordinates)."""
    if m.side != RIGHT or n.side != LEFT:
        raise ValueError("cotensor needs a right and a left comodule")
    c = m.coring
    if n.coring is not c and n.coring.to_json() != c.to_json():
        raise AlgebraMismatchError("comodules over different corings")
    mn = TensorPresentation(m.carrier, n.carrier)
    triple = TriplePresentation(m.carrier, c.carrier, n.carrier, mn=m.presentation)
    nc, dn = c.dim, n.dim
    cols = []
    for q in range(mn.dim):
        i, j = mn.representative(q)
        diff: dict = {}
        for i2, k, v in m.terms[i]:
            sparse_add(diff, {(i2 * nc + k) * dn + j: v})
        for k, j2, v in n.terms[j]:
            sparse_add(diff, {(i * nc + k) * dn + j2: -v})
        cols.append(triple.project(diff))
    return Subspace.kernel(Matrix.from_sparse_cols(cols, triple.dim, m.field))


# -- bicomod(C, D°) <-> lcomod(C ⊗_k D) -------------------------------------------

def _as_left_module_over_tensor(carrier: Bimodule) -> Bimodule:
    """An (A, B°)-bimodule as a left A⊗B-module: (a⊗b)·m = a·m∘b."""
    a, b = carrier.left_algebra, opposite_algebra(carrier.right_algebra)
    k = rationals(carrier.field)
    acts = [la @ rb for la in carrier.left_action for rb in carrier.right_action]
    return Bimodule(tensor_algebra(a, b), k, carrier.dim, acts,
                    [Matrix.identity(carrier.dim, carrier.field)], name=carrier.name)


def _as_bimodule_over_factors(carrier: Bimodule, a, b) -> Bimodule:
    """Inverse of :func:`_as_left_module_over_tensor`."""
    n, F = carrier.dim, carrier.field
    acts = carrier.left_action
    db = b.dim
    left = [combine([acts[i * db + j] for j in range(db)], b.unit, n, F) for i in range(a.dim)]
    right = [combine([acts[i * db + j] for i in range(a.dim)], a.unit, n, F) for j in range(db)]
    return Bimodule(a, opposite_algebra(b), n, left, right, name=carrier.name)


def bicomodule_to_comodule(m: Bicomodule, tensor: Coring | None = None) -> Comodule:
    """A C-D°-bicomodule as a left comodule over C ⊗_k D.

    λ(m) = Σ (c ⊗ d) ⊗ m' where (C⊗ρ)λ(m) = Σ c ⊗ m' ⊗ d.  ``tensor`` may be
    passed to reuse an existing C ⊗_k D (it must be built from the same data).
    """
    c = m.left_coring
    d = opposite_coring(m.right_coring)
    t = tensor if tensor is not None else tensor_coring(c, d)
    carrier = _as_left_module_over_tensor(m.carrier)
    nd, dm = d.dim, m.dim
    lift = []
    for x in range(dm):
        col: dict = {}
        for k, i, v in m.left.terms[x]:
            for i2, l, w in m.right.terms[i]:
                sparse_add(col, {(k * nd + l) * dm + i2: w}, v)
        lift.append(col)
    return Comodule.from_lift(t, LEFT, carrier, lift, name=m.name)


def comodule_to_bicomodule(n: Comodule, c: Coring, d: Coring) -> Bicomodule:
    """A left C ⊗_k D-comodule as a C-D°-bicomodule.

    λ_M = (C⊗M⊗ε_D)∘iso∘λ and ρ_M = (ε_C⊗M⊗D°)∘iso∘λ.
    """
    if n.side != LEFT:
        raise ValueError("comodule_to_bicomodule needs a left comodule")
    carrier = _as_bimodule_over_factors(n.carrier, c.base, d.base)
    d_op = opposite_coring(d)
    nd, dm = d.dim, n.dim
    eps_c, eps_d = c.counit_cols, d.counit_cols
    # right action of B° on the carrier is the left B-action b·m
    b_act = carrier.right_cols
    a_act = carrier.left_cols
    left_lift, right_lift = [], []
    for x in range(dm):
        lam: dict = {}
        rho: dict = {}
        for t, i, v in n.terms[x]:
            k, l = divmod(t, nd)
            for b, e in eps_d[l].items():
                for i2, w in b_act[b][i].items():
                    sparse_add(lam, {k * dm + i2: w * e}, v)
            for a, e in eps_c[k].items():
                for i2, w in a_act[a][i].items():
                    sparse_add(rho, {i2 * nd + l: w * e}, v)
        left_lift.append(lam)
        right_lift.append(rho)
    left = Comodule.from_lift(c, LEFT, carrier, left_lift)
    right = Comodule.from_lift(d_op, RIGHT, carrier, right_lift)
    return Bicomodule(c, d_op, carrier, left.coaction, right.coaction, name=n.name)


def round_trip_report(m: Bicomodule) -> Report:
    """Run bicomodule -> comodule -> bicomodule -> comodule and compare."""
    rep = Report()
    rep.extend(check_bicomodule(m), "input.")
    c, d = m.left_coring, opposite_coring(m.right_coring)
    n = bicomodule_to_comodule(m)
    rep.extend(check_comodule(n), "comodule.")
    back = comodule_to_bicomodule(n, c, d)
    rep.extend(check_bicomodule(back), "bicomodule.")
    if back.carrier != m.carrier:
        rep.add("carrier_round_trip")
    if back.left_coaction != m.left_coaction:
        rep.add("left_coaction_round_trip")
    if back.right_coaction != m.right_coaction:
        rep.add("right_coaction_round_trip")
    again = bicomodule_to_comodule(back, tensor=n.coring)
    if again.carrier != n.carrier or again.coaction != n.coaction:
        rep.add("comodule_round_trip")
    return rep
