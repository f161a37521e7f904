"""Dual rings of a coring, their actions on C, semisimplicity and base change.

*C = Hom_A(C, A) (left A-linear maps) multiplies by g f = g ∘ T_f with
T_f(x) = Σ x_(1) f(x_(2)); C* = Hom_A(C, A) (right A-linear maps) by
g f = f ∘ U_g with U_g(x) = Σ g(x_(1)) x_(2).  f ↦ T_f is a faithful
representation of *C on C and g ↦ U_g a faithful anti-representation of C*
(ε ∘ T_f = f and ε ∘ U_g = g), which is how the radicals of large duals are
computed without structure constants.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import (Algebra, LeftModule, UnsupportedCharacteristicError,
                      check_algebra, hom_to_regular, opposite_algebra,
                      projective_section)
from .bimodule import sparse_add
from .coring import Coring, base_change, trivial_coring
from .exactlin import Matrix, Subspace
from .report import Report

LEFT, RIGHT = "left", "right"


class InconsistencyError(AssertionError):
    """Two computations that must agree did not."""


def _side(side: str) -> str:
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return side


def dual_space(c: Coring, side: str) -> Subspace:
    """The one-sided A-linear maps C -> A, as flattened dim(A) x dim(C) matrices."""
    key = ("dual_space", _side(side))
    if key not in c._memo:
        A, C = c.base, c.carrier
        if side == LEFT:
            space = hom_to_regular(LeftModule(A, C.dim, C.left_action), A.L)
        else:
            space = hom_to_regular(LeftModule(opposite_algebra(A), C.dim, C.right_action), A.R)
        c._memo[key] = space
    return c._memo[key]


def dual_basis_matrices(c: Coring, side: str) -> list[Matrix]:
    space = dual_space(c, side)
    a, n = c.base.dim, c.dim
    flat = space.basis.entries()
    size = a * n
    return [Matrix.from_flat(a, n, flat[i * size:(i + 1) * size], c.field)
            for i in range(space.dim)]


def action_matrix(c: Coring, f: Matrix, side: str) -> Matrix:
    """T_f (left dual acting on C) or U_f (right dual acting on C)."""
    n, F = c.dim, c.field
    fcols = f.cols_sparse()
    cols = []
    if _side(side) == LEFT:
        rc = c.carrier.right_cols
        for x in range(n):
            acc: dict = {}
            for k, l, v in c.terms[x]:
                for b, fv in fcols[l].items():
                    sparse_add(acc, rc[b][k], v * fv)
            cols.append(acc)
    else:
        lc = c.carrier.left_cols
        for x in range(n):
            acc = {}
            for k, l, v in c.terms[x]:
                for b, fv in fcols[k].items():
                    sparse_add(acc, lc[b][l], v * fv)
            cols.append(acc)
    return Matrix.from_sparse_cols(cols, n, F)


def dual_product(c: Coring, f: Matrix, g: Matrix, side: str) -> Matrix:
    """The product f g in the chosen dual ring."""
    if _side(side) == LEFT:
        return f @ action_matrix(c, g, LEFT)
    return g @ action_matrix(c, f, RIGHT)


def trace_functional(c: Coring, side: str) -> Matrix:
    """τ with tr(T_h) (or tr(U_h)) = Σ τ[b, x] h[b, x], for any dim(A) x dim(C) matrix h."""
    a, n, F = c.base.dim, c.dim, c.field
    tau = [[F.zero] * n for _ in range(a)]
    if _side(side) == LEFT:
        rc = c.carrier.right_cols
        for x in range(n):
            for k, l, v in c.terms[x]:
                for b in range(a):
                    w = rc[b][k].get(x)
                    if w:
                        tau[b][l] += v * w
    else:
        lc = c.carrier.left_cols
        for x in range(n):
            for k, l, v in c.terms[x]:
                for b in range(a):
                    w = lc[b][l].get(x)
                    if w:
                        tau[b][k] += v * w
    return Matrix.from_rows(tau, F, n)


def dual_radical(c: Coring, side: str) -> Subspace:
    """Radical of the dual ring, in coordinates of the canonical dual basis.

    Uses the trace form of the faithful action on C:
    tr(ρ(f) ρ(g)) = τ(f ∘ ρ(g)), so the Gram matrix is F W^T with W built
    from ρ(g) τ^T.  Requires characteristic 0 or p > dim(C).
    """
    key = ("dual_radical", _side(side))
    if key in c._memo:
        return c._memo[key]
    F = c.field
    if F.char and F.char <= c.dim:
        raise UnsupportedCharacteristicError(f"trace-form radical needs p > {c.dim}, got {F}")
    basis = dual_basis_matrices(c, side)
    N = len(basis)
    if N == 0:
        rad = Subspace.zero(0, F)
    else:
        tau_t = trace_functional(c, side).T
        w_rows = []
        for g in basis:
            w = action_matrix(c, g, side) @ tau_t          # n x a
            w_rows.append(w.T.entries())                   # row-major a x n
        a, n = c.base.dim, c.dim
        fmat = dual_space(c, side).basis
        wmat = Matrix.from_flat(N, a * n, [x for w in w_rows for x in w], F)
        gram = fmat @ wmat.T
        rad = Subspace.kernel(gram)
    c._memo[key] = rad
    return rad


@dataclass
class DualRing:
    """*C or C* with structure constants on the canonical basis of maps."""

    side: str
    coring: Coring
    space: Subspace
    algebra: Algebra
    embedding: Matrix        # column b: coordinates of the image of e_b (A° -> dual)
    report: Report = field(default_factory=Report)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def element(self, i: int) -> Matrix:
        return Matrix.from_flat(self.coring.base.dim, self.coring.dim, self.space.vectors()[i],
                                self.coring.field)

    def coordinates(self, f: Matrix) -> list:
        return self.space.coordinates(f.entries())


def dual_ring(c: Coring, side: str) -> DualRing:
    """The dual ring with multiplication by convolution; ε is the unit.

    The report lists failures of associativity, of the unit, and of the ring
    map A° -> dual (a ↦ ε(-)a on the left, a ↦ aε(-) on the right).
    """
    key = ("dual_ring", _side(side))
    if key in c._memo:
        return c._memo[key]
    space = dual_space(c, side)
    basis = dual_basis_matrices(c, side)
    N = len(basis)
    F = c.field
    acts = [action_matrix(c, f, side) for f in basis]
    cols = []
    for s in range(N):
        for t in range(N):
            prod = basis[s] @ acts[t] if side == LEFT else basis[t] @ acts[s]
            cols.append(space.coordinates(prod.entries()))
    mu = Matrix.from_cols(cols, F, N) if N else Matrix.zeros(0, 0, F)
    unit = space.coordinates(c.counit.entries()) if N else []
    name = ("*" + c.name) if side == LEFT else (c.name + "*")
    alg = Algebra(name, F, N, mu, unit)
    A = c.base
    mats = A.R if side == LEFT else A.L
    emb_cols = [space.coordinates((m @ c.counit).entries()) for m in mats]
    embedding = Matrix.from_cols(emb_cols, F, N)
    rep = check_algebra(alg)
    for i in range(A.dim):
        for j in range(A.dim):
            # in A°, e_i ∘ e_j = e_j e_i
            lhs = embedding @ Matrix.column([A.product(j, i).get(k, 0) for k in range(A.dim)], F)
            rhs = alg.multiply(embedding.col(i), embedding.col(j))
            if lhs.col(0) != rhs:
                rep.add("embedding_multiplicative", (i, j))
    if embedding @ A.unit_vector() != Matrix.column(unit, F):
        rep.add("embedding_unit")
    out = DualRing(side, c, space, alg, embedding, rep)
    c._memo[key] = out
    return out


def dual_actions(c: Coring) -> tuple[list[Matrix], list[Matrix]]:
    """Matrices of the left *C-action and the right C*-action on C, over the dual bases."""
    left = [action_matrix(c, f, LEFT) for f in dual_basis_matrices(c, LEFT)]
    right = [action_matrix(c, g, RIGHT) for g in dual_basis_matrices(c, RIGHT)]
    return left, right


def generated_subbicomodule(c: Coring, seeds: Sequence) -> Subspace:
    """Closure of span(seeds) under both dual actions and both A-actions."""
    left, right = dual_actions(c)
    ops = [m.cols_sparse() for m in left + right + c.carrier.left_action + c.carrier.right_action]
    span = Subspace.span(seeds, c.dim, c.field)
    while True:
        vecs = list(span.rows_sparse())
        for op in ops:
            for v in span.rows_sparse():
                img: dict = {}
                for x, val in v.items():
                    sparse_add(img, op[x], val)
                vecs.append(img)
        new = Subspace.span(vecs, c.dim, c.field)
        if new.dim == span.dim:
            return span
        span = new


def restrict_coring(c: Coring, sub: Subspace) -> Coring | None:
    """The subcoring structure on a subbicomodule S, when Δ(S) lies in S ⊗_A S.

    The restricted comultiplication is found by solving for lifts in S ⊗_k S
    whose image in C ⊗_A C is Δ(s).  Returns None if no such lift exists.
    """
    from .bimodule import Bimodule
    from .exactlin import solve_sparse
    F, n, m = c.field, c.dim, sub.dim
    basis = sub.rows_sparse()

    def coords(v):
        return {i: x for i, x in enumerate(sub.coordinates(v)) if x}

    def restrict(op):
        cols = []
        for v in basis:
            img: dict = {}
            for x, val in v.items():
                sparse_add(img, op[x], val)
            cols.append(coords(img))
        return Matrix.from_sparse_cols(cols, m, F)

    try:
        left = [restrict(a.cols_sparse()) for a in c.carrier.left_action]
        right = [restrict(a.cols_sparse()) for a in c.carrier.right_action]
    except ValueError:
        return None
    carrier = Bimodule(c.base, c.base, m, left, right, name=f"sub({c.name})")
    p2 = c.pres2
    # image in C ⊗_A C of e_s ⊗ e_t for the basis of S
    pair_images = []
    for s in range(m):
        for t in range(m):
            vec: dict = {}
            for x, u in basis[s].items():
                for y, w in basis[t].items():
                    vec[x * n + y] = vec.get(x * n + y, 0) + u * w
            pair_images.append(p2.project(vec))
    rows: list[dict] = [dict() for _ in range(p2.dim)]
    for idx, img in enumerate(pair_images):
        for q, v in img.items():
            rows[q][idx] = v
    lift = []
    for v in basis:
        target: dict = {}
        for x, val in v.items():
            sparse_add(target, c.lift[x], val)
        rhs = p2.project(target)
        sol = solve_sparse(rows, [rhs.get(q, 0) for q in range(p2.dim)], m * m, F, kernel=False)
        if sol is None:
            return None
        lift.append(sol[0].col_sparse(0))
    counit = Matrix.from_sparse_cols([c.counit.apply_sparse(v) for v in basis], c.base.dim, F)
    return Coring(c.base, carrier, lift, counit, name=f"sub({c.name},{m})")


# -- semisimplicity ------------------------------------------------------------------

@dataclass
class SemisimplicityVerdict:
    semisimple: bool
    left_projective: bool
    right_projective: bool
    left_dual_dim: int
    right_dual_dim: int
    left_dual_radical: int
    right_dual_radical: int

    def __bool__(self):
        return self.semisimple

    def to_json(self):
        return dict(self.__dict__)


def is_projective_side(c: Coring, side: str) -> bool:
    key = ("projective", _side(side))
    if key not in c._memo:
        C = c.carrier
        mod = C.left_module() if side == LEFT else C.right_module()
        c._memo[key] = projective_section(mod) is not None
    return c._memo[key]


def is_semisimple_coring(c: Coring) -> SemisimplicityVerdict:
    """Projective on both sides and both dual rings semisimple.

    The two dual-ring verdicts must agree for a coring that is projective on
    both sides; disagreement raises :class:`InconsistencyError`.
    """
    if "semisimple" in c._memo:
        return c._memo["semisimple"]
    lp = is_projective_side(c, LEFT)
    rp = is_projective_side(c, RIGHT)
    lrad = dual_radical(c, LEFT)
    rrad = dual_radical(c, RIGHT)
    lss, rss = lrad.dim == 0, rrad.dim == 0
    if lp and rp and lss != rss:
        raise InconsistencyError(f"{c.name}: *C semisimple={lss} but C* semisimple={rss}")
    verdict = SemisimplicityVerdict(lp and rp and lss and rss, lp, rp,
                                    dual_space(c, LEFT).dim, dual_space(c, RIGHT).dim,
                                    lrad.dim, rrad.dim)
    c._memo["semisimple"] = verdict
    return verdict


# -- coring maps and their duals --------------------------------------------------

def dual_hom(f: Matrix, c: Coring, d: Coring, side: str = RIGHT) -> tuple[Matrix, Report]:
    """Precomposition with f: C -> D as a map of dual rings D* -> C* (or *D -> *C).

    Returns the matrix in the canonical dual bases and a report of failures
    of multiplicativity and unitality.
    """
    dc, dd = dual_ring(c, side), dual_ring(d, side)
    cols = []
    for j in range(dd.dim):
        cols.append(dc.coordinates(dd.element(j) @ f))
    mat = Matrix.from_cols(cols, c.field, dc.dim) if cols else Matrix.zeros(dc.dim, 0, c.field)
    rep = Report()
    for i in range(dd.dim):
        for j in range(dd.dim):
            prod = dd.algebra.multiply([1 if t == i else 0 for t in range(dd.dim)],
                                       [1 if t == j else 0 for t in range(dd.dim)])
            lhs = (mat @ Matrix.column(prod, c.field)).col(0)
            rhs = dc.algebra.multiply(mat.col(i), mat.col(j))
            if lhs != rhs:
                rep.add("multiplicative", (i, j))
    if (mat @ Matrix.column(dd.algebra.unit, c.field)).col(0) != list(dc.algebra.unit):
        rep.add("unital")
    return mat, rep


def counit_as_coring_map(c: Coring) -> tuple[Matrix, Coring]:
    """ε as a coring map C -> A (trivial coring)."""
    return c.counit, trivial_coring(c.base)


# -- base change of the left dual ---------------------------------------------------

@dataclass
class BaseChangeCertificate:
    coring: Coring               # C ⊗_k K
    psi: Matrix                  # *C ⊗ K -> *(C ⊗ K), columns indexed s*dim K + t
    phi: Matrix                  # inverse, from a dual basis
    report: Report

    def to_json(self):
        return {"coring": self.coring.name, "psi": self.psi.to_json(),
                "phi": None if self.phi is None else self.phi.to_json(),
                "report": self.report.to_json()}


def psi(c: Coring, kk: Algebra) -> BaseChangeCertificate:
    """Ψ(f ⊗ α)(x ⊗ β) = f(x) ⊗ αβ, its inverse Φ, and their verification."""
    F = c.field
    bc = base_change(c, kk)
    basis1 = dual_basis_matrices(c, LEFT)
    space2 = dual_space(bc, LEFT)
    dk = kk.dim
    N1, N2 = len(basis1), space2.dim
    a, n = c.base.dim, c.dim
    rep = Report()
    psi_cols = []
    images = []
    for f in basis1:
        for t in range(dk):
            g = f.kron(kk.L[t])
            images.append(g)
            psi_cols.append(space2.coordinates(g.entries()))
    psi_m = Matrix.from_cols(psi_cols, F, N2) if psi_cols else Matrix.zeros(N2, 0, F)
    if psi_m.nrows != psi_m.ncols or psi_m.rank() != psi_m.nrows:
        rep.add("bijective", (), f"shape {psi_m.shape}, rank {psi_m.rank()}")
    # unit: ε ⊗ 1 ↦ ε_{C⊗K}
    eps_coords = dual_space(c, LEFT).coordinates(c.counit.entries())
    eps_vec = [x * u for x in eps_coords for u in kk.unit]
    if (psi_m @ Matrix.column(eps_vec, F)).col(0) != space2.coordinates(bc.counit.entries()):
        rep.add("unital")
    # multiplicativity on basis pairs
    acts1 = [action_matrix(c, f, LEFT) for f in basis1]
    acts2 = [action_matrix(bc, g, LEFT) for g in images]
    space1 = dual_space(c, LEFT)
    for s in range(N1):
        for t in range(dk):
            u = s * dk + t
            for s2 in range(N1):
                prod1 = space1.coordinates((basis1[s] @ acts1[s2]).entries())
                for t2 in range(dk):
                    v = s2 * dk + t2
                    kt = kk.product(t, t2)
                    prod_vec = [F.zero] * (N1 * dk)
                    for i, x in enumerate(prod1):
                        if x:
                            for tt, y in kt.items():
                                prod_vec[i * dk + tt] += x * y
                    lhs = (psi_m @ Matrix.column(prod_vec, F)).col(0)
                    rhs = space2.coordinates((images[u] @ acts2[v]).entries())
                    if lhs != rhs:
                        rep.add("multiplicative", (u, v))
    # Φ from the dual basis (e_m, φ_m) of the projective left module C
    sec = projective_section(LeftModule(c.base, n, c.carrier.left_action))
    phi_m = None
    if sec is None:
        rep.add("dual_basis", (), "C is not projective as a left module")
    else:
        srows = sec.tolist()
        phis = [Matrix.from_rows([srows[i * n + m] for i in range(a)], F, n) for m in range(n)]
        basis2 = [Matrix.from_flat(a * dk, n * dk, row, F) for row in space2.vectors()]
        cols = []
        for g in basis2:
            vec = [F.zero] * (N1 * dk)
            gcols = g.cols_sparse()
            for m in range(n):
                for bt, v in gcols[m * dk].items():
                    b, t = divmod(bt, dk)
                    coords = space1.coordinates((c.base.R[b] @ phis[m]).entries())
                    for i, x in enumerate(coords):
                        if x:
                            vec[i * dk + t] += v * x
            cols.append(vec)
        phi_m = Matrix.from_cols(cols, F, N1 * dk) if cols else Matrix.zeros(N1 * dk, 0, F)
        if phi_m @ psi_m != Matrix.identity(N1 * dk, F):
            rep.add("phi_psi_identity")
        if psi_m @ phi_m != Matrix.identity(N2, F):
            rep.add("psi_phi_identity")
    return BaseChangeCertificate(bc, psi_m, phi_m, rep)
