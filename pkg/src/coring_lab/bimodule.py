"""Bimodules, bimodule maps and balanced tensor products.

Right actions are stored as matrices acting on column vectors, so
``right_action[i] @ right_action[j] == right_action(e_j e_i)``.  A tensor
product over A is presented as a quotient of the k-tensor product by the
balancing relations; coset representatives sit on the non-pivot coordinates
of the relation space's RREF basis.
"""
from __future__ import annotations

from functools import cached_property
from typing import Sequence

from .algebra import (Algebra, LeftModule, combine, opposite_algebra,
                      rationals, tensor_algebra)
from .exactlin import (DimensionError, FieldMismatchError, Matrix, Subspace,
                       sparse_rref)
from .report import Report


class AlgebraMismatchError(ValueError):
    """The algebras over which two objects are tensored do not agree."""


class NotBalancedError(ValueError):
    """A pair of maps does not preserve the balancing relations."""


class Bimodule:
    """A left ``left_algebra``, right ``right_algebra`` bimodule of dimension ``dim``."""

    def __init__(self, left_algebra: Algebra, right_algebra: Algebra, dim: int,
                 left_action: Sequence[Matrix], right_action: Sequence[Matrix], name: str = ""):
        if len(left_action) != left_algebra.dim or len(right_action) != right_algebra.dim:
            raise DimensionError("one action matrix per algebra basis element")
        for m in list(left_action) + list(right_action):
            if m.shape != (dim, dim):
                raise DimensionError(f"action matrix of shape {m.shape} on dim {dim}")
        if left_algebra.field != right_algebra.field:
            raise FieldMismatchError("left and right algebras over different fields")
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.dim = dim
        self.left_action = list(left_action)
        self.right_action = list(right_action)
        self.name = name

    @property
    def field(self):
        return self.left_algebra.field

    def __repr__(self):
        return f"Bimodule({self.left_algebra.name}|{self.name or '?'}|{self.right_algebra.name}, dim={self.dim})"

    def __eq__(self, other):
        if not isinstance(other, Bimodule):
            return NotImplemented
        return (self.dim == other.dim and self.left_algebra == other.left_algebra
                and self.right_algebra == other.right_algebra
                and self.left_action == other.left_action
                and self.right_action == other.right_action)

    __hash__ = object.__hash__

    @cached_property
    def left_cols(self) -> list[list[dict]]:
        """``left_cols[a][x]`` = sparse coordinates of e_a · x_x."""
        return [m.cols_sparse() for m in self.left_action]

    @cached_property
    def right_cols(self) -> list[list[dict]]:
        """``right_cols[a][x]`` = sparse coordinates of x_x · e_a."""
        return [m.cols_sparse() for m in self.right_action]

    def act_left(self, a: Sequence) -> Matrix:
        return combine(self.left_action, a, self.dim, self.field)

    def act_right(self, a: Sequence) -> Matrix:
        return combine(self.right_action, a, self.dim, self.field)

    def left_module(self) -> LeftModule:
        return LeftModule(self.left_algebra, self.dim, self.left_action)

    def right_module(self) -> LeftModule:
        """The right module viewed as a left module over the opposite algebra."""
        return LeftModule(opposite_algebra(self.right_algebra), self.dim, self.right_action)

    def to_json(self):
        return {"left_algebra": self.left_algebra.to_json(),
                "right_algebra": self.right_algebra.to_json(),
                "dim": self.dim,
                "left_action": [m.to_json() for m in self.left_action],
                "right_action": [m.to_json() for m in self.right_action]}


def regular_bimodule(a: Algebra) -> Bimodule:
    """A as an A-bimodule."""
    return Bimodule(a, a, a.dim, a.L, a.R, name=a.name)


def check_bimodule(m: Bimodule) -> Report:
    rep = Report()
    n, F = m.dim, m.field
    ident = Matrix.identity(n, F)
    A, B = m.left_algebra, m.right_algebra
    for i in range(A.dim):
        for j in range(A.dim):
            if m.act_left([A.product(i, j).get(k, 0) for k in range(A.dim)]) != m.left_action[i] @ m.left_action[j]:
                rep.add("left_associativity", (i, j))
    for i in range(B.dim):
        for j in range(B.dim):
            if m.act_right([B.product(j, i).get(k, 0) for k in range(B.dim)]) != m.right_action[i] @ m.right_action[j]:
                rep.add("right_associativity", (i, j))
    if m.act_left(A.unit) != ident:
        rep.add("left_unit")
    if m.act_right(B.unit) != ident:
        rep.add("right_unit")
    for i in range(A.dim):
        for j in range(B.dim):
            if m.left_action[i] @ m.right_action[j] != m.right_action[j] @ m.left_action[i]:
                rep.add("actions_commute", (i, j))
    return rep


class BimoduleMap:
    """A k-linear map between bimodules, meant to commute with both actions."""

    def __init__(self, source: Bimodule, target: Bimodule, matrix: Matrix):
        if matrix.shape != (target.dim, source.dim):
            raise DimensionError(f"map of shape {matrix.shape} from dim {source.dim} to {target.dim}")
        self.source = source
        self.target = target
        self.matrix = matrix

    def __repr__(self):
        return f"BimoduleMap({self.source.dim} -> {self.target.dim})"

    def check(self) -> Report:
        return check_bimodule_map(self)


def check_bimodule_map(f: BimoduleMap) -> Report:
    rep = Report()
    s, t, m = f.source, f.target, f.matrix
    if s.left_algebra != t.left_algebra or s.right_algebra != t.right_algebra:
        rep.add("algebra_mismatch")
        return rep
    for a in range(s.left_algebra.dim):
        if m @ s.left_action[a] != t.left_action[a] @ m:
            rep.add("left_linearity", (a,))
    for a in range(s.right_algebra.dim):
        if m @ s.right_action[a] != t.right_action[a] @ m:
            rep.add("right_linearity", (a,))
    return rep


def is_left_linear(matrix: Matrix, source: Sequence[Matrix], target: Sequence[Matrix]) -> bool:
    return all(matrix @ s == t @ matrix for s, t in zip(source, target))


def tensor_k(m: Bimodule, n: Bimodule) -> Bimodule:
    """M ⊗_k N over (A⊗A', B⊗B'), basis m⊗n at index ``i*dim(N) + j``."""
    la = tensor_algebra(m.left_algebra, n.left_algebra)
    ra = tensor_algebra(m.right_algebra, n.right_algebra)
    left = [x.kron(y) for x in m.left_action for y in n.left_action]
    right = [x.kron(y) for x in m.right_action for y in n.right_action]
    return Bimodule(la, ra, m.dim * n.dim, left, right, name=f"{m.name}⊗{n.name}")


def opposite_bimodule(m: Bimodule) -> Bimodule:
    """M° over (B°, A°): b ∘ x = x b and x ∘ a = a x."""
    return Bimodule(opposite_algebra(m.right_algebra), opposite_algebra(m.left_algebra),
                    m.dim, m.right_action, m.left_action, name=f"{m.name}°")


def sparse_add(acc: dict, vec: dict, scale=1):
    for k, v in vec.items():
        x = acc.get(k, 0) + scale * v
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)
    return acc


class TensorPresentation:
    """M ⊗_A N as a quotient of M ⊗_k N.

    ``relation_space`` is spanned by (m·a)⊗n - m⊗(a·n) over basis elements;
    ``projection`` has kernel exactly that space and ``section`` picks the
    non-pivot unit vectors as coset representatives.
    """

    def __init__(self, left: Bimodule, right: Bimodule):
        if left.right_algebra != right.left_algebra:
            raise AlgebraMismatchError(
                f"cannot tensor over {left.right_algebra.name} and {right.left_algebra.name}")
        self.left = left
        self.right = right
        self.middle = left.right_algebra
        nm, nn = left.dim, right.dim
        self.ambient_dim = nm * nn
        F = left.field
        rows = []
        for b in range(self.middle.dim):
            rc, lc = left.right_cols[b], right.left_cols[b]
            for i in range(nm):
                mi = rc[i]
                for j in range(nn):
                    row = {k * nn + j: v for k, v in mi.items()}
                    for k, v in lc[j].items():
                        idx = i * nn + k
                        x = row.get(idx, 0) - v
                        if x:
                            row[idx] = x
                        else:
                            row.pop(idx, None)
                    if row:
                        rows.append(row)
        red, piv = sparse_rref(rows, self.ambient_dim, F)
        self._rel_rows = red
        self._pivots = piv
        pivset = set(piv)
        self.free = [j for j in range(self.ambient_dim) if j not in pivset]
        self.dim = len(self.free)
        pos = {j: t for t, j in enumerate(self.free)}
        cols: list[dict] = [dict() for _ in range(self.ambient_dim)]
        for j in self.free:
            cols[j] = {pos[j]: F.one}
        for p, row in zip(piv, red):
            cols[p] = {pos[j]: -x for j, x in row.items() if j != p}
        self.proj_cols = cols

    @property
    def field(self):
        return self.left.field

    def __repr__(self):
        return f"TensorPresentation({self.left.dim}⊗{self.right.dim} -> {self.dim})"

    @cached_property
    def relation_space(self) -> Subspace:
        return Subspace.from_rref_rows(self._rel_rows, self._pivots, self.ambient_dim, self.field)

    @cached_property
    def projection(self) -> Matrix:
        return Matrix.from_sparse_cols(self.proj_cols, self.dim, self.field)

    @cached_property
    def section(self) -> Matrix:
        return Matrix.from_sparse_cols([{j: self.field.one} for j in self.free],
                                       self.ambient_dim, self.field)

    def project(self, vec: dict) -> dict:
        """Projection of a sparse vector of M ⊗_k N."""
        out: dict = {}
        for j, v in vec.items():
            for t, x in self.proj_cols[j].items():
                out[t] = out.get(t, 0) + v * x
        return {t: x for t, x in out.items() if x}

    def pure(self, m: Sequence | dict, n: Sequence | dict) -> dict:
        """The class of m ⊗ n."""
        F = self.field
        m = {i: F(x) for i, x in (m.items() if isinstance(m, dict) else enumerate(m)) if x}
        n = {i: F(x) for i, x in (n.items() if isinstance(n, dict) else enumerate(n)) if x}
        nn = self.right.dim
        return self.project({i * nn + j: x * y for i, x in m.items() for j, y in n.items()})

    def representative(self, q: int) -> tuple[int, int]:
        """Basis indices (m, n) of the coset representative of quotient basis vector q."""
        return divmod(self.free[q], self.right.dim)

    @cached_property
    def quotient(self) -> Bimodule:
        F = self.field
        nn = self.right.dim
        reps = [self.representative(q) for q in range(self.dim)]
        left = []
        for a in range(self.left.left_algebra.dim):
            lc = self.left.left_cols[a]
            left.append(Matrix.from_sparse_cols(
                [self.project({k * nn + j: v for k, v in lc[i].items()}) for i, j in reps], self.dim, F))
        right = []
        for a in range(self.right.right_algebra.dim):
            rc = self.right.right_cols[a]
            right.append(Matrix.from_sparse_cols(
                [self.project({i * nn + k: v for k, v in rc[j].items()}) for i, j in reps], self.dim, F))
        return Bimodule(self.left.left_algebra, self.right.right_algebra, self.dim, left, right,
                        name=f"{self.left.name}⊗_{self.middle.name}{self.right.name}")


def tensor_over(m: Bimodule, n: Bimodule) -> TensorPresentation:
    return TensorPresentation(m, n)


def induced_map(f: BimoduleMap | Matrix, g: BimoduleMap | Matrix,
                src: TensorPresentation, dst: TensorPresentation) -> Matrix:
    """f ⊗_A g between two tensor presentations.

    Raises :class:`NotBalancedError` unless f ⊗_k g carries the source
    relation space into the target relation space.
    """
    fm = f.matrix if isinstance(f, BimoduleMap) else f
    gm = g.matrix if isinstance(g, BimoduleMap) else g
    if fm.shape != (dst.left.dim, src.left.dim) or gm.shape != (dst.right.dim, src.right.dim):
        raise DimensionError("maps do not fit the presentations")
    fc, gc = fm.cols_sparse(), gm.cols_sparse()
    nn_src, nn_dst = src.right.dim, dst.right.dim

    def image(vec):
        out: dict = {}
        for idx, v in vec.items():
            i, j = divmod(idx, nn_src)
            for k, x in fc[i].items():
                for l, y in gc[j].items():
                    key = k * nn_dst + l
                    out[key] = out.get(key, 0) + v * x * y
        return dst.project(out)

    for r, row in enumerate(src._rel_rows):
        if image(row):
            raise NotBalancedError(f"relation {r} is not preserved by f ⊗ g")
    cols = [image({src.free[q]: src.field.one}) for q in range(src.dim)]
    return Matrix.from_sparse_cols(cols, dst.dim, src.field)


class TriplePresentation:
    """M ⊗_A N ⊗_A P realized as (M ⊗_A N) ⊗_A P.

    ``project`` sends a sparse vector of M⊗_k N⊗_k P (index
    ``(i*dim N + j)*dim P + l``) to the quotient; its kernel is the sum of
    both families of balancing relations.
    """

    def __init__(self, m: Bimodule, n: Bimodule, p: Bimodule, mn: TensorPresentation | None = None):
        self.m, self.n, self.p = m, n, p
        self.mn = mn if mn is not None else TensorPresentation(m, n)
        self.outer = TensorPresentation(self.mn.quotient, p)
        self.dim = self.outer.dim

    def project(self, vec: dict) -> dict:
        dp = self.p.dim
        inner: dict = {}
        for idx, v in vec.items():
            ij, l = divmod(idx, dp)
            for q, x in self.mn.proj_cols[ij].items():
                key = q * dp + l
                inner[key] = inner.get(key, 0) + v * x
        return self.outer.project(inner)

    def from_right_parenthesization(self, np_pres: TensorPresentation | None = None):
        """Iso M ⊗_A (N ⊗_A P) -> this presentation, with the presentations used.

        Returns ``(iso, np_pres, m_np_pres)``.
        """
        np_pres = np_pres if np_pres is not None else TensorPresentation(self.n, self.p)
        m_np = TensorPresentation(self.m, np_pres.quotient)
        dp = self.p.dim
        cols = []
        for q in range(m_np.dim):
            i, r = m_np.representative(q)
            j, l = np_pres.representative(r)
            cols.append(self.project({(i * self.n.dim + j) * dp + l: self.m.field.one}))
        return Matrix.from_sparse_cols(cols, self.dim, self.m.field), np_pres, m_np


def shuffle_iso(m: Bimodule, n: Bimodule, l: Bimodule, p: Bimodule,
                mn: TensorPresentation | None = None, lp: TensorPresentation | None = None,
                target: TensorPresentation | None = None):
    """(M⊗_A N)⊗_k(L⊗_B P) -> (M⊗_k L)⊗_{A⊗B}(N⊗_k P) induced by the middle swap.

    Returns ``(matrix, source_dims, target_presentation)``; the matrix is
    checked to be invertible.
    """
    mn = mn if mn is not None else TensorPresentation(m, n)
    lp = lp if lp is not None else TensorPresentation(l, p)
    if target is None:
        target = TensorPresentation(tensor_k(m, l), tensor_k(n, p))
    dn, dl, dp = n.dim, l.dim, p.dim
    cols = []
    for q1 in range(mn.dim):
        i, j = mn.representative(q1)
        for q2 in range(lp.dim):
            a, b = lp.representative(q2)
            key = (i * dl + a) * (dn * dp) + (j * dp + b)
            cols.append(target.project({key: m.field.one}))
    mat = Matrix.from_sparse_cols(cols, target.dim, m.field)
    if mat.shape[0] != mat.shape[1] or mat.rank() != mat.nrows:
        raise ArithmeticError(f"shuffle map of shape {mat.shape} has rank {mat.rank()}")
    return mat, (mn, lp), target


def direct_sum(m: Bimodule, n: Bimodule) -> Bimodule:
    """M ⊕ N with the basis of M first."""
    if m.left_algebra != n.left_algebra or m.right_algebra != n.right_algebra:
        raise AlgebraMismatchError("direct summands over different algebras")
    F, dm, dn = m.field, m.dim, n.dim

    def block(x: Matrix, y: Matrix) -> Matrix:
        rows = [r + [F.zero] * dn for r in x.tolist()] + [[F.zero] * dm + r for r in y.tolist()]
        return Matrix.from_rows(rows, F, dm + dn)

    return Bimodule(m.left_algebra, m.right_algebra, dm + dn,
                    [block(x, y) for x, y in zip(m.left_action, n.left_action)],
                    [block(x, y) for x, y in zip(m.right_action, n.right_action)],
                    name=f"{m.name}⊕{n.name}")


def regular_right_module(a: Algebra) -> Bimodule:
    """A as a (k, A)-bimodule."""
    k = rationals(a.field)
    return Bimodule(k, a, a.dim, [Matrix.identity(a.dim, a.field)], a.R, name=a.name)
