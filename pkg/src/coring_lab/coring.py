"""Corings by structure constants: the data type, its axiom checker and constructors.

The comultiplication is stored as a k-level lift: for each carrier basis
vector x a sparse vector of C ⊗_k C (index ``k*dim + l``) whose class in
C ⊗_A C is Δ(x).  Quotient presentations of C ⊗_A C and C ⊗_A C ⊗_A C are
built lazily, so large corings produced by tensoring can be used by the
decision procedures without ever materializing them.
"""
from __future__ import annotations

from functools import cached_property
from typing import Sequence

from .algebra import (Algebra, check_algebra, opposite_algebra, product_algebra,
                      matrix_algebra, rationals, tensor_algebra)
from .bimodule import (Bimodule, BimoduleMap, TensorPresentation,
                       TriplePresentation, check_bimodule, opposite_bimodule,
                       regular_bimodule, sparse_add, tensor_k)
from .exactlin import DimensionError, FieldMismatchError, Matrix, Subspace
from .report import Report


class Coring:
    """An A-coring (C, Δ, ε).

    ``lift[x]`` is a sparse vector of C ⊗_k C representing Δ(e_x);
    ``counit`` is the dim(A) x dim(C) matrix of ε.
    """

    def __init__(self, base: Algebra, carrier: Bimodule, lift: Sequence[dict], counit: Matrix,
                 name: str = ""):
        if carrier.left_algebra != base or carrier.right_algebra != base:
            raise ValueError("carrier must be a bimodule over the base algebra on both sides")
        if len(lift) != carrier.dim:
            raise DimensionError("one comultiplication lift per carrier basis vector")
        if counit.shape != (base.dim, carrier.dim):
            raise DimensionError(f"counit of shape {counit.shape}")
        self.base = base
        self.carrier = carrier
        self.lift = [{k: v for k, v in col.items() if v} for col in lift]
        self.counit = counit
        self.name = name or "coring"
        self._memo = {}

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def field(self):
        return self.base.field

    def __repr__(self):
        return f"Coring({self.name!r}, dim={self.dim}, base={self.base.name})"

    @cached_property
    def terms(self) -> list[list[tuple]]:
        """``terms[x]`` = [(k, l, coefficient)] with Δ(e_x) = Σ c e_k ⊗ e_l."""
        n = self.dim
        return [[(key // n, key % n, v) for key, v in sorted(col.items())] for col in self.lift]

    @cached_property
    def counit_cols(self) -> list[dict]:
        return self.counit.cols_sparse()

    @cached_property
    def pres2(self) -> TensorPresentation:
        return TensorPresentation(self.carrier, self.carrier)

    @cached_property
    def pres3(self) -> TriplePresentation:
        return TriplePresentation(self.carrier, self.carrier, self.carrier, mn=self.pres2)

    @cached_property
    def comult(self) -> Matrix:
        """Δ in quotient coordinates of C ⊗_A C."""
        return Matrix.from_sparse_cols([self.pres2.project(v) for v in self.lift],
                                       self.pres2.dim, self.field)

    @property
    def comult_map(self) -> BimoduleMap:
        return BimoduleMap(self.carrier, self.pres2.quotient, self.comult)

    @property
    def counit_map(self) -> BimoduleMap:
        return BimoduleMap(self.carrier, regular_bimodule(self.base), self.counit)

    @classmethod
    def from_quotient_comult(cls, base, carrier, comult: Matrix, counit: Matrix, name=""):
        """Build from Δ given in the canonical coordinates of C ⊗_A C."""
        pres = TensorPresentation(carrier, carrier)
        if comult.shape != (pres.dim, carrier.dim):
            raise DimensionError(f"comultiplication of shape {comult.shape}, expected {(pres.dim, carrier.dim)}")
        lift = [{pres.free[q]: v for q, v in col.items()} for col in comult.cols_sparse()]
        c = cls(base, carrier, lift, counit, name)
        c.__dict__["pres2"] = pres
        return c

    # -- helpers shared by checks and decision procedures ------------------
    def right_by(self, k: int, alpha: dict) -> dict:
        """e_k · α for α ∈ A given sparsely."""
        out: dict = {}
        rc = self.carrier.right_cols
        for b, v in alpha.items():
            sparse_add(out, rc[b][k], v)
        return out

    def left_by(self, alpha: dict, k: int) -> dict:
        """α · e_k."""
        out: dict = {}
        lc = self.carrier.left_cols
        for b, v in alpha.items():
            sparse_add(out, lc[b][k], v)
        return out

    def to_json(self):
        return {"name": self.name, "base": self.base.to_json(), "carrier": self.carrier.to_json(),
                "comult": {"codomain": "C⊗_kC",
                           "lift": [[[k, l, self.field.to_json(v)] for k, l, v in ts] for ts in self.terms]},
                "counit": self.counit.to_json()}


# -- the axiom checker ---------------------------------------------------------

def check_coring(c: Coring) -> Report:
    """Bimodule-map property of Δ and ε, coassociativity and both counit laws."""
    rep = Report()
    rep.extend(check_algebra(c.base), "base.")
    rep.extend(check_bimodule(c.carrier), "carrier.")
    if not rep.ok:
        return rep
    A, C, F = c.base, c.carrier, c.field
    n = c.dim
    eps = c.counit
    for a in range(A.dim):
        if eps @ C.left_action[a] != A.L[a] @ eps:
            rep.add("counit_left_linearity", (a,))
        if eps @ C.right_action[a] != A.R[a] @ eps:
            rep.add("counit_right_linearity", (a,))
    p2 = c.pres2
    for a in range(A.dim):
        lc, rc = C.left_cols[a], C.right_cols[a]
        for x in range(n):
            moved_l: dict = {}
            for y, v in lc[x].items():
                sparse_add(moved_l, c.lift[y], v)
            acted_l: dict = {}
            for k, l, v in c.terms[x]:
                for k2, w in lc[k].items():
                    sparse_add(acted_l, {k2 * n + l: w}, v)
            if p2.project(moved_l) != p2.project(acted_l):
                rep.add("comult_left_linearity", (a, x))
            moved_r: dict = {}
            for y, v in rc[x].items():
                sparse_add(moved_r, c.lift[y], v)
            acted_r: dict = {}
            for k, l, v in c.terms[x]:
                for l2, w in rc[l].items():
                    sparse_add(acted_r, {k * n + l2: w}, v)
            if p2.project(moved_r) != p2.project(acted_r):
                rep.add("comult_right_linearity", (a, x))
    p3 = c.pres3
    for x in range(n):
        left: dict = {}
        right: dict = {}
        for k, l, v in c.terms[x]:
            for k2, l2, w in c.terms[k]:
                sparse_add(left, {(k2 * n + l2) * n + l: w}, v)
            for k3, l3, w in c.terms[l]:
                sparse_add(right, {(k * n + k3) * n + l3: w}, v)
        if p3.project(left) != p3.project(right):
            rep.add("coassociativity", (x,))
    ecols = c.counit_cols
    for x in range(n):
        right_counit: dict = {}
        left_counit: dict = {}
        for k, l, v in c.terms[x]:
            sparse_add(right_counit, c.right_by(k, ecols[l]), v)
            sparse_add(left_counit, c.left_by(ecols[k], l), v)
        if right_counit != {x: F.one}:
            rep.add("counit_right", (x,), "(C⊗ε)Δ(x) != x")
        if left_counit != {x: F.one}:
            rep.add("counit_left", (x,), "(ε⊗C)Δ(x) != x")
    return rep


# -- constructors ----------------------------------------------------------------

def trivial_coring(a: Algebra) -> Coring:
    """A as an A-coring: Δ(a) = a ⊗ 1, ε = id."""
    d = a.dim
    lift = [{i * d + u: v for u, v in enumerate(a.unit) if v} for i in range(d)]
    return Coring(a, regular_bimodule(a), lift, Matrix.identity(d, a.field), name=f"trivial({a.name})")


def coalgebra(name: str, lift: Sequence[dict], counit: Sequence, field=None) -> Coring:
    """A coalgebra over the base field: a coring over the one-dimensional algebra."""
    k = rationals() if field is None else rationals(field)
    n = len(lift)
    ident = Matrix.identity(n, k.field)
    carrier = Bimodule(k, k, n, [ident], [ident], name=name)
    return Coring(k, carrier, lift, Matrix.from_rows([list(counit)], k.field, n), name=name)


def dual_coalgebra(b: Algebra, name: str | None = None) -> Coring:
    """The coalgebra dual to a finite-dimensional algebra B.

    Δ(φ_k) = Σ_{i,j} c_ij^k φ_i ⊗ φ_j where e_i e_j = Σ_k c_ij^k e_k, and
    ε(φ_k) is the k-th coordinate of 1_B.
    """
    d = b.dim
    lift = [dict() for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for k, v in b.product(i, j).items():
                lift[k][i * d + j] = v
    return coalgebra(name or f"dual({b.name})", lift, b.unit, b.field)


def comatrix_coalgebra(n: int) -> Coring:
    """Basis e_ij (index i*n + j), Δ e_ij = Σ_k e_ik ⊗ e_kj, ε e_ij = δ_ij."""
    return dual_coalgebra(matrix_algebra(n), f"comatrix({n})")


def grouplike_coalgebra(n: int) -> Coring:
    """Δ g_i = g_i ⊗ g_i, ε g_i = 1."""
    return dual_coalgebra(product_algebra(n), f"grouplike({n})")


def tensor_coring(c: Coring, d: Coring) -> Coring:
    """C ⊗_k D over A ⊗_k B, comultiplication through the middle swap."""
    if c.field != d.field:
        raise FieldMismatchError(f"{c.field} vs {d.field}")
    base = tensor_algebra(c.base, d.base)
    carrier = tensor_k(c.carrier, d.carrier)
    nc, nd = c.dim, d.dim
    n = nc * nd
    lift = []
    for x in range(nc):
        for y in range(nd):
            col: dict = {}
            for k, l, v in c.terms[x]:
                for k2, l2, w in d.terms[y]:
                    key = (k * nd + k2) * n + (l * nd + l2)
                    col[key] = col.get(key, 0) + v * w
            lift.append(col)
    counit = c.counit.kron(d.counit)
    return Coring(base, carrier, lift, counit, name=f"{c.name}⊗{d.name}")


def opposite_coring(c: Coring) -> Coring:
    """C° over A°: Δ°(x) = τΔ(x) with τ(x⊗y) = y⊗x, ε° = ε."""
    n = c.dim
    base = opposite_algebra(c.base)
    carrier = opposite_bimodule(c.carrier)
    lift = [{l * n + k: v for k, l, v in ts} for ts in c.terms]
    name = c.name[:-1] if c.name.endswith("°") else c.name + "°"
    return Coring(base, carrier, lift, c.counit, name=name)


def base_change(c: Coring, kk: Algebra) -> Coring:
    """C ⊗_k K as an A ⊗_k K-coring."""
    out = tensor_coring(c, trivial_coring(kk))
    out.name = f"{c.name}⊗{kk.name}"
    return out


class SubalgebraError(ValueError):
    """The supplied subspace is not a unital subalgebra."""


def subalgebra(a: Algebra, b_basis) -> tuple[Algebra, Matrix]:
    """The subalgebra spanned by ``b_basis`` and its inclusion (dim A x dim B)."""
    if isinstance(b_basis, Subspace):
        sub = b_basis
    else:
        sub = Subspace.span(b_basis, a.dim, a.field)
    if not sub.contains(list(a.unit)):
        raise SubalgebraError("the subspace does not contain 1")
    vecs = sub.vectors()
    m = len(vecs)
    table = []
    for i in range(m):
        row = []
        for j in range(m):
            prod = a.multiply(vecs[i], vecs[j])
            try:
                row.append(sub.coordinates(prod))
            except ValueError:
                raise SubalgebraError(f"product of basis vectors {i}, {j} leaves the subspace") from None
        table.append(row)
    b = Algebra.from_table(f"sub({a.name},{m})", table, sub.coordinates(list(a.unit)), a.field)
    return b, Matrix.from_cols(vecs, a.field, a.dim)


def sweedler_coring(a: Algebra, b_basis) -> Coring:
    """Sweedler's canonical coring A ⊗_B A for a unital subalgebra B ⊆ A.

    Δ(a ⊗ a') = (a ⊗ 1) ⊗ (1 ⊗ a') and ε(a ⊗ a') = a a'.
    """
    b, incl = subalgebra(a, b_basis)
    inc_cols = incl.cols_sparse()
    right_b = [a.right_mult([v.get(i, 0) for i in range(a.dim)]) for v in inc_cols]
    left_b = [a.left_mult([v.get(i, 0) for i in range(a.dim)]) for v in inc_cols]
    m_ab = Bimodule(a, b, a.dim, a.L, right_b, name=a.name)
    m_ba = Bimodule(b, a, a.dim, left_b, a.R, name=a.name)
    pres = TensorPresentation(m_ab, m_ba)
    carrier = pres.quotient
    n = pres.dim
    one = {i: v for i, v in enumerate(a.unit) if v}
    lift = []
    counit_cols = []
    for q in range(n):
        i, j = pres.representative(q)
        left = pres.pure({i: a.field.one}, one)
        right = pres.pure(one, {j: a.field.one})
        lift.append({k * n + l: x * y for k, x in left.items() for l, y in right.items()})
        counit_cols.append(a.product(i, j))
    counit = Matrix.from_sparse_cols(counit_cols, a.dim, a.field)
    return Coring(a, carrier, lift, counit, name=f"sweedler({a.name}/{b.dim})")


# -- coring homomorphisms ----------------------------------------------------------

def check_coring_hom(f: Matrix, c: Coring, d: Coring) -> Report:
    """Is f: C -> D a homomorphism of A-corings?"""
    rep = Report()
    if c.base != d.base:
        rep.add("base_mismatch")
        return rep
    if f.shape != (d.dim, c.dim):
        rep.add("shape", (), f"{f.shape}")
        return rep
    for a in range(c.base.dim):
        if f @ c.carrier.left_action[a] != d.carrier.left_action[a] @ f:
            rep.add("left_linearity", (a,))
        if f @ c.carrier.right_action[a] != d.carrier.right_action[a] @ f:
            rep.add("right_linearity", (a,))
    fc = f.cols_sparse()
    nd = d.dim
    for x in range(c.dim):
        img: dict = {}
        for y, v in fc[x].items():
            sparse_add(img, d.lift[y], v)
        pushed: dict = {}
        for k, l, v in c.terms[x]:
            for k2, w in fc[k].items():
                for l2, u in fc[l].items():
                    sparse_add(pushed, {k2 * nd + l2: w * u}, v)
        if d.pres2.project(img) != d.pres2.project(pushed):
            rep.add("comult_compatibility", (x,))
    if d.counit @ f != c.counit:
        bad = [x for x in range(c.dim) if (d.counit @ f).col(x) != c.counit.col(x)]
        rep.add("counit_compatibility", tuple(bad))
    return rep
