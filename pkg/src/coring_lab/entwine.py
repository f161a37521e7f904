"""Entwining structures (A, C, ψ) and their corings A ⊗ C.

ψ: C ⊗ A -> A ⊗ C is a matrix with source index ``k*dim A + a`` (c_k ⊗ a_a)
and target index ``a*dim C + k`` (a_a ⊗ c_k).  Validity is decided by
building A ⊗ C with the right action (a ⊗ c)·a' = a ψ(c ⊗ a') and running
the bimodule and coring checks on it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, group_algebra, rationals, tensor_algebra
from .bimodule import Bimodule, check_bimodule, sparse_add
from .coring import (Coring, check_coring, check_coring_hom,
                     grouplike_coalgebra, tensor_coring)
from .exactlin import DimensionError, FieldMismatchError, Matrix
from .report import Report


class InvalidEntwiningError(ValueError):
    """The data do not form an entwining structure."""


class Entwining:
    def __init__(self, algebra: Algebra, coalgebra: Coring, psi: Matrix, name: str = ""):
        if coalgebra.base.dim != 1 or coalgebra.base != rationals(algebra.field):
            raise ValueError("the coalgebra must be a coring over the base field")
        if algebra.field != coalgebra.field:
            raise FieldMismatchError(f"{algebra.field} vs {coalgebra.field}")
        size = algebra.dim * coalgebra.dim
        if psi.shape != (size, size):
            raise DimensionError(f"psi of shape {psi.shape}, expected {(size, size)}")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.psi = psi
        self.name = name or f"({algebra.name}, {coalgebra.name})"

    def __repr__(self):
        return f"Entwining({self.name!r})"

    @property
    def field(self):
        return self.algebra.field

    def to_json(self):
        return {"name": self.name, "algebra": self.algebra.to_json(),
                "coalgebra": self.coalgebra.to_json(), "psi": self.psi.to_json()}


def flip_entwining(a: Algebra, c: Coring) -> Entwining:
    """ψ(c ⊗ a) = a ⊗ c."""
    da, nc = a.dim, c.dim
    cols = [{b * nc + k: a.field.one} for k in range(nc) for b in range(da)]
    return Entwining(a, c, Matrix.from_sparse_cols(cols, da * nc, a.field), name=f"flip({a.name}, {c.name})")


def group_entwining(n: int) -> Entwining:
    """k[Z/n] entwined with its group coalgebra: ψ(g_i ⊗ h_j) = h_j ⊗ g_{i+j}.

    This is the Doi-Koppinen entwining of the bialgebra k[Z/n] acting on
    itself; it is not the flip.
    """
    a, c = group_algebra(n), grouplike_coalgebra(n)
    cols = [{j * n + (i + j) % n: a.field.one} for i in range(n) for j in range(n)]
    return Entwining(a, c, Matrix.from_sparse_cols(cols, n * n, a.field), name=f"group({n})")


def _candidate(e: Entwining) -> Coring:
    """A ⊗ C with the ψ-induced right action, A ⊗ Δ_C and A·ε_C."""
    A, C, F = e.algebra, e.coalgebra, e.field
    da, nc = A.dim, C.dim
    size = da * nc
    ident_c = Matrix.identity(nc, F)
    left = [m.kron(ident_c) for m in A.L]
    psi_cols = e.psi.cols_sparse()
    right = []
    for b in range(da):
        cols = []
        for a in range(da):
            for k in range(nc):
                col: dict = {}
                for t, v in psi_cols[k * da + b].items():
                    a2, k2 = divmod(t, nc)
                    for a3, w in A.product(a, a2).items():
                        sparse_add(col, {a3 * nc + k2: w}, v)
                cols.append(col)
        right.append(Matrix.from_sparse_cols(cols, size, F))
    carrier = Bimodule(A, A, size, left, right, name=f"{A.name}⊗{C.name}")
    one = {u: v for u, v in enumerate(A.unit) if v}
    lift = []
    counit_cols = []
    for a in range(da):
        for k in range(nc):
            col: dict = {}
            for k1, l1, v in C.terms[k]:
                for u, w in one.items():
                    sparse_add(col, {(a * nc + k1) * size + (u * nc + l1): w}, v)
            lift.append(col)
            counit_cols.append({a: C.counit[0, k]} if C.counit[0, k] else {})
    counit = Matrix.from_sparse_cols(counit_cols, da, F)
    return Coring(A, carrier, lift, counit, name=f"{A.name}⊗{C.name}[{e.name}]")


def check_entwining(e: Entwining) -> Report:
    """Valid iff A ⊗ C is an A-bimodule and (A⊗Δ_C, A·ε_C) make it an A-coring."""
    rep = Report()
    rep.extend(check_coring(e.coalgebra), "coalgebra.")
    if not rep.ok:
        return rep
    cand = _candidate(e)
    rep.extend(check_bimodule(cand.carrier), "bimodule.")
    if not rep.ok:
        return rep
    rep.extend(check_coring(cand), "coring.")
    return rep


def entwined_coring(e: Entwining) -> Coring:
    rep = check_entwining(e)
    if not rep.ok:
        raise InvalidEntwiningError(f"{e.name}: {rep}")
    return _candidate(e)


@dataclass
class TensorEntwining:
    entwining: Entwining
    iso: Matrix        # tensor_coring(A⊗C, B⊗D) -> coring of the tensor entwining
    report: Report

    def to_json(self):
        return {"entwining": self.entwining.to_json(), "iso": self.iso.to_json(),
                "report": self.report.to_json()}


def tensor_entwining(e1: Entwining, e2: Entwining) -> TensorEntwining:
    """(A⊗B, C⊗D, ψ⊗φ) with its reindexing isomorphism of A⊗B-corings.

    ψ⊗φ is c⊗d⊗a⊗b -> c⊗a⊗d⊗b -> (ψ(c⊗a))⊗(φ(d⊗b)) -> a'⊗b'⊗c'⊗d'.
    """
    if e1.field != e2.field:
        raise FieldMismatchError(f"{e1.field} vs {e2.field}")
    F = e1.field
    for e in (e1, e2):
        rep = check_entwining(e)
        if not rep.ok:
            raise InvalidEntwiningError(f"{e.name}: {rep}")
    A, C, B, D = e1.algebra, e1.coalgebra, e2.algebra, e2.coalgebra
    da, nc, db, nd = A.dim, C.dim, B.dim, D.dim
    ab = tensor_algebra(A, B)
    cd = tensor_coring(C, D)
    p1, p2 = e1.psi.cols_sparse(), e2.psi.cols_sparse()
    cols = []
    for k in range(nc):
        for l in range(nd):
            for a in range(da):
                for b in range(db):
                    col: dict = {}
                    for t1, v in p1[k * da + a].items():
                        a2, k2 = divmod(t1, nc)
                        for t2, w in p2[l * db + b].items():
                            b2, l2 = divmod(t2, nd)
                            sparse_add(col, {(a2 * db + b2) * (nc * nd) + (k2 * nd + l2): v * w})
                    cols.append(col)
    size = da * db * nc * nd
    psi = Matrix.from_sparse_cols(cols, size, F)
    out = Entwining(ab, cd, psi, name=f"{e1.name}⊗{e2.name}")
    rep = Report()
    rep.extend(check_entwining(out), "tensor.")
    # (A⊗C)⊗(B⊗D) -> (A⊗B)⊗(C⊗D)
    perm = []
    for a in range(da):
        for k in range(nc):
            for b in range(db):
                for l in range(nd):
                    perm.append({(a * db + b) * (nc * nd) + (k * nd + l): F.one})
    iso = Matrix.from_sparse_cols(perm, size, F)
    if rep.ok:
        src = tensor_coring(entwined_coring(e1), entwined_coring(e2))
        dst = _candidate(out)
        rep.extend(check_coring_hom(iso, src, dst), "iso.")
        inverse = iso.T
        if iso @ inverse != Matrix.identity(size, F):
            rep.add("iso.not_invertible")
        rep.extend(check_coring_hom(inverse, dst, src), "iso_inverse.")
    if not rep.ok:
        raise InvalidEntwiningError(f"tensor entwining failed: {rep}")
    return TensorEntwining(out, iso, rep)
