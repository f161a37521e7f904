"""Finite-dimensional unital associative algebras given by structure constants.

An algebra of dimension d stores its multiplication as a d x d^2 matrix
``mu`` whose column ``i*d + j`` holds the coordinates of ``e_i e_j``.  Left
and right multiplication operators are derived from it lazily.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Sequence

import flint

from .exactlin import (QQ, DimensionError, Field, FieldMismatchError, Matrix,
                       Subspace, rref, solve_sparse)
from .report import Report


class UnsupportedCharacteristicError(ValueError):
    """The trace-form radical is not reliable in this characteristic."""


class ReduciblePolynomialError(ValueError):
    def __init__(self, poly, factor):
        self.factor = factor
        super().__init__(f"{poly} is reducible over QQ: factor ({factor})")


class Algebra:
    """Unital associative algebra by structure constants.

    ``mu[:, i*dim + j]`` is the coordinate column of ``e_i e_j`` and ``unit``
    the coordinates of ``1``.  Equality is structural; the name is a label.
    """

    def __init__(self, name: str, field: Field, dim: int, mu: Matrix, unit: Sequence):
        if mu.shape != (dim, dim * dim):
            raise DimensionError(f"structure constants of shape {mu.shape} for dim {dim}")
        if len(unit) != dim:
            raise DimensionError("unit has the wrong length")
        if mu.field != field:
            raise FieldMismatchError(f"{mu.field} vs {field}")
        self.name = name
        self.field = field
        self.dim = dim
        self.mu = mu
        self.unit = tuple(field(u) for u in unit)
        self._memo = {}

    @classmethod
    def from_table(cls, name, table, unit, field: Field = QQ):
        """Build from ``table[i][j]`` = coordinates of ``e_i e_j``."""
        d = len(table)
        cols = [table[i][j] for i in range(d) for j in range(d)]
        return cls(name, field, d, Matrix.from_cols(cols, field, d), unit)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.field == other.field and self.dim == other.dim
                and self.unit == other.unit and self.mu == other.mu)

    def __hash__(self):
        return hash((self.field, self.dim, self.unit))

    def __repr__(self):
        return f"Algebra({self.name!r}, dim={self.dim}, {self.field!r})"

    @cached_property
    def _cols(self) -> list[dict]:
        return self.mu.cols_sparse()

    def product(self, i: int, j: int) -> dict:
        """Sparse coordinates of ``e_i e_j``."""
        return self._cols[i * self.dim + j]

    @cached_property
    def L(self) -> list[Matrix]:
        """``L[i]`` is left multiplication by ``e_i``."""
        d = self.dim
        return [Matrix.from_sparse_cols([self.product(i, j) for j in range(d)], d, self.field)
                for i in range(d)]

    @cached_property
    def R(self) -> list[Matrix]:
        """``R[j]`` is right multiplication by ``e_j``."""
        d = self.dim
        return [Matrix.from_sparse_cols([self.product(i, j) for i in range(d)], d, self.field)
                for j in range(d)]

    def unit_vector(self) -> Matrix:
        return Matrix.column(self.unit, self.field)

    def multiply(self, x: Sequence, y: Sequence) -> list:
        F = self.field
        x, y = [F(v) for v in x], [F(v) for v in y]
        out = [F.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                for k, c in self.product(i, j).items():
                    out[k] += xi * yj * c
        return out

    def left_mult(self, x: Sequence) -> Matrix:
        return combine(self.L, x, self.dim, self.field)

    def right_mult(self, x: Sequence) -> Matrix:
        return combine(self.R, x, self.dim, self.field)

    def to_json(self):
        d = self.dim
        cols = self.mu.tolist()
        table = [[[self.field.to_json(cols[k][i * d + j]) for k in range(d)] for j in range(d)]
                 for i in range(d)]
        return {"name": self.name, "char": self.field.char, "dim": d,
                "unit": [self.field.to_json(u) for u in self.unit], "mult": table}


def combine(mats: Sequence[Matrix], coeffs: Sequence, n: int, field: Field) -> Matrix:
    """``sum_i coeffs[i] * mats[i]`` for square matrices of size n."""
    out = Matrix.zeros(n, n, field)
    for m, c in zip(mats, coeffs):
        if c:
            out = out + m.scale(c)
    return out


# -- standard algebras -------------------------------------------------------

def rationals(field: Field = QQ) -> Algebra:
    """The base field as a one-dimensional algebra."""
    return Algebra.from_table("QQ" if field.char == 0 else repr(field), [[[1]]], [1], field)


def matrix_algebra(n: int, field: Field = QQ) -> Algebra:
    """M_n with matrix units ``E_ij`` at index ``i*n + j``."""
    d = n * n
    table = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for l in range(n):
                table[i * n + j][j * n + l][i * n + l] = 1
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return Algebra.from_table(f"M{n}", table, unit, field)


def upper_triangular(n: int, field: Field = QQ) -> Algebra:
    """Upper triangular n x n matrices, basis E_ij (i <= j) in row-major order."""
    units = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {u: t for t, u in enumerate(units)}
    d = len(units)
    table = [[[0] * d for _ in range(d)] for _ in range(d)]
    for s, (i, j) in enumerate(units):
        for t, (k, l) in enumerate(units):
            if j == k:
                table[s][t][pos[(i, l)]] = 1
    unit = [1 if i == j else 0 for i, j in units]
    return Algebra.from_table(f"T{n}", table, unit, field)


def product_algebra(n: int, field: Field = QQ) -> Algebra:
    """k x ... x k with orthogonal idempotents as basis."""
    table = [[[1 if (i == j == k) else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    return Algebra.from_table("x".join(["QQ"] * n), table, [1] * n, field)


def polynomial_quotient(coeffs: Sequence, name: str | None = None, field: Field = QQ) -> Algebra:
    """k[x]/(p) for ``p`` given by coefficients, highest degree first.

    The basis is ``1, x, ..., x^(d-1)``.
    """
    coeffs = [field(c) for c in coeffs]
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
    if len(coeffs) < 2:
        raise ValueError("need a polynomial of degree at least 1")
    lead = coeffs[0]
    low = [c / lead for c in reversed(coeffs[1:])]   # x^d = -sum low[k] x^k
    d = len(low)
    powers = []
    cur = [field.zero] * d
    cur[0] = field.one
    for _ in range(2 * d - 1):
        powers.append(cur)
        top = cur[-1]
        cur = [field.zero] + cur[:-1]
        if top:
            cur = [c - top * l for c, l in zip(cur, low)]
    table = [[powers[i + j] for j in range(d)] for i in range(d)]
    unit = [1] + [0] * (d - 1)
    return Algebra.from_table(name or f"k[x]/deg{d}", table, unit, field)


def group_algebra(n: int, field: Field = QQ) -> Algebra:
    """k[Z/n] = k[x]/(x^n - 1), basis the group elements x^i."""
    return polynomial_quotient([1] + [0] * (n - 1) + [-1], f"k[Z{n}]", field)


def dual_numbers(field: Field = QQ) -> Algebra:
    """k[x]/(x^2)."""
    return polynomial_quotient([1, 0, 0], "dual-numbers", field)


def field_extension(minpoly: Sequence, assume_irreducible: bool = False, name: str | None = None) -> Algebra:
    """K = Q[x]/(minpoly) with basis ``1, x, ..., x^(d-1)``.

    ``minpoly`` lists rational coefficients, highest degree first.
    Irreducibility is checked by exact factorization over Q.  Polynomials of
    degree above four are accepted only when ``assume_irreducible`` is set,
    and are still rejected if a factor turns up.
    """
    fr = [Fraction(str(c)) for c in minpoly]
    while fr and fr[0] == 0:
        fr.pop(0)
    if len(fr) < 2:
        raise ValueError("minimal polynomial must have degree at least 1")
    poly = flint.fmpq_poly([flint.fmpq(c.numerator, c.denominator) for c in reversed(fr)])
    deg = poly.degree()
    if deg > 4 and not assume_irreducible:
        raise ValueError(f"degree {deg} > 4: pass assume_irreducible=True to assert irreducibility")
    _, factors = poly.factor()
    if len(factors) > 1 or factors[0][1] > 1:
        factors = sorted(factors, key=lambda f: (f[0].degree(), str(f[0])))
        raise ReduciblePolynomialError(poly, factors[0][0])
    return polynomial_quotient(fr, name or f"QQ[x]/({poly})", QQ)


# -- checks and constructions -------------------------------------------------

def check_algebra(a: Algebra) -> Report:
    """Every violated associativity or unit identity, by basis indices."""
    rep = Report()
    d, F = a.dim, a.field
    L = a.L
    for i in range(d):
        for j in range(d):
            lhs = combine(L, [a.product(i, j).get(k, 0) for k in range(d)], d, F)
            rhs = L[i] @ L[j]
            if lhs != rhs:
                diff = (lhs - rhs).cols_sparse()
                l = next(t for t, c in enumerate(diff) if c)
                rep.add("associativity", (i, j, l), "(e_i e_j) e_l != e_i (e_j e_l)")
    one = a.unit
    for i in range(d):
        ei = {i: F.one}
        left = {k: v for k, v in enumerate(a.multiply(one, [1 if t == i else 0 for t in range(d)])) if v}
        right = {k: v for k, v in enumerate(a.multiply([1 if t == i else 0 for t in range(d)], one)) if v}
        if left != ei:
            rep.add("left_unit", (i,), "1 e_i != e_i")
        if right != ei:
            rep.add("right_unit", (i,), "e_i 1 != e_i")
    return rep


def opposite_algebra(a: Algebra) -> Algebra:
    """A° with e_i * e_j := e_j e_i."""
    if "op" not in a._memo:
        d = a.dim
        perm = [j * d + i for i in range(d) for j in range(d)]
        name = a.name[:-3] if a.name.endswith("^op") else a.name + "^op"
        op = Algebra(name, a.field, d, a.mu.select_cols(perm), a.unit)
        op._memo["op"] = a
        a._memo["op"] = op
    return a._memo["op"]


def tensor_algebra(a: Algebra, b: Algebra) -> Algebra:
    """A ⊗_k B with basis e_i⊗f_j at index ``i*dim(B) + j``."""
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    da, db = a.dim, b.dim
    d = da * db
    cols = []
    for i in range(da):
        for j in range(db):
            for i2 in range(da):
                pa = a.product(i, i2)
                for j2 in range(db):
                    pb = b.product(j, j2)
                    cols.append({k * db + l: x * y for k, x in pa.items() for l, y in pb.items()})
    mu = Matrix.from_sparse_cols(cols, d, a.field)
    unit = [x * y for x in a.unit for y in b.unit]
    return Algebra(f"{a.name}⊗{b.name}", a.field, d, mu, unit)


def separability_idempotent(a: Algebra) -> Matrix | None:
    """An element e of A⊗_k A with (b⊗1)e = e(1⊗b) for all b and μ(e) = 1.

    Returned as a d x d matrix ``e[i, j]`` = coefficient of e_i⊗e_j (the
    canonical particular solution), or ``None`` when A is not separable.
    """
    if "sep" in a._memo:
        return a._memo["sep"]
    d = a.dim
    rows = []
    rhs = []
    # coefficient of e_k⊗e_l in (e_b⊗1)e - e(1⊗e_b)
    for b in range(d):
        eqs: dict = {}
        for i in range(d):
            for k, c in a.product(b, i).items():
                for l in range(d):
                    eqs.setdefault((k, l), {})
                    row = eqs[(k, l)]
                    row[i * d + l] = row.get(i * d + l, 0) + c
            for j in range(d):
                for l, c in a.product(j, b).items():
                    row = eqs.setdefault((i, l), {})
                    row[i * d + j] = row.get(i * d + j, 0) - c
        for key in sorted(eqs):
            rows.append(eqs[key])
            rhs.append(0)
    for k in range(d):
        row = {}
        for i in range(d):
            for j in range(d):
                c = a.product(i, j).get(k)
                if c:
                    row[i * d + j] = c
        rows.append(row)
        rhs.append(a.unit[k])
    sol = solve_sparse(rows, rhs, d * d, a.field, kernel=False)
    e = None if sol is None else Matrix.from_flat(d, d, sol[0].col(0), a.field)
    a._memo["sep"] = e
    return e


def is_separable(a: Algebra) -> bool:
    return separability_idempotent(a) is not None


def _check_trace_char(field: Field, size: int):
    if field.char and field.char <= size:
        raise UnsupportedCharacteristicError(
            f"trace-form radical needs characteristic 0 or p > {size}, got {field}")


def radical(a: Algebra) -> Subspace:
    """Jacobson radical {x : tr(L_x L_y) = 0 for all y} (Dickson's criterion)."""
    if "rad" in a._memo:
        return a._memo["rad"]
    _check_trace_char(a.field, a.dim)
    d = a.dim
    t = [sum((Lk[i, i] for i in range(d)), a.field.zero) for Lk in a.L]
    # tr(L_i L_j) = tr(L_{e_i e_j}) = sum_k mu[k, ij] tr(L_k)
    gram = Matrix.from_rows([t], a.field) @ a.mu
    g = Matrix.from_flat(d, d, gram.entries(), a.field)
    rad = Subspace.kernel(g)
    a._memo["rad"] = rad
    return rad


def is_semisimple(a: Algebra) -> bool:
    return radical(a).dim == 0


def trace_gram(reps: Sequence[Matrix]) -> Matrix:
    """Gram matrix ``tr(rho_i rho_j)`` of a family of square matrices."""
    if not reps:
        return Matrix.zeros(0, 0)
    field = reps[0].field
    n = reps[0].nrows
    flat = []
    flat_t = []
    for m in reps:
        flat.extend(m.entries())
        flat_t.extend(m.T.entries())
    v = Matrix.from_flat(len(reps), n * n, flat, field)
    w = Matrix.from_flat(len(reps), n * n, flat_t, field)
    return v @ w.T


def radical_of_representation(reps: Sequence[Matrix], ambient: int | None = None) -> Subspace:
    """Radical of an algebra from a faithful (anti-)representation.

    ``reps[i]`` represents the i-th basis element.  For a faithful
    representation in characteristic 0 (or p larger than the matrix size),
    the radical is the kernel of the trace form ``tr(rho(x) rho(y))``.
    """
    if not reps:
        return Subspace.zero(ambient or 0)
    _check_trace_char(reps[0].field, reps[0].nrows)
    return Subspace.kernel(trace_gram(reps))


# -- modules -----------------------------------------------------------------

class LeftModule:
    """A left A-module: ``action[b]`` is the matrix of e_b acting on column vectors."""

    def __init__(self, algebra: Algebra, dim: int, action: Sequence[Matrix]):
        if len(action) != algebra.dim:
            raise DimensionError("one action matrix per algebra basis element")
        for m in action:
            if m.shape != (dim, dim):
                raise DimensionError(f"action matrix of shape {m.shape} on a module of dim {dim}")
        self.algebra = algebra
        self.dim = dim
        self.action = list(action)

    def __repr__(self):
        return f"LeftModule(over {self.algebra.name}, dim={self.dim})"

    @classmethod
    def regular(cls, a: Algebra) -> "LeftModule":
        return cls(a, a.dim, a.L)

    def act(self, x: Sequence) -> Matrix:
        return combine(self.action, x, self.dim, self.algebra.field)


def check_module(m: LeftModule) -> Report:
    rep = Report()
    a = m.algebra
    for i in range(a.dim):
        for j in range(a.dim):
            prod = m.act([a.product(i, j).get(k, 0) for k in range(a.dim)])
            if prod != m.action[i] @ m.action[j]:
                rep.add("module_associativity", (i, j))
    if m.act(a.unit) != Matrix.identity(m.dim, a.field):
        rep.add("module_unit")
    return rep


def projective_section(m: LeftModule) -> Matrix | None:
    """An A-linear section of the canonical surjection A ⊗_k M -> M, or None.

    A ⊗_k M is free on a basis of M; the section is a (d*n) x n matrix in the
    basis e_i⊗m_j (index ``i*n + j``).  When A is separable the section
    s(m) = sum x_i ⊗ y_i m is written down from the separability idempotent;
    otherwise the linear system for the section is solved.
    """
    a, n, F = m.algebra, m.dim, m.algebra.field
    d = a.dim
    e = separability_idempotent(a)
    if e is not None:
        cols: list[dict] = [dict() for _ in range(n)]
        for (i, j), c in _nonzero(e):
            yj = m.action[j]
            for col in range(n):
                for r, v in yj.col_sparse(col).items():
                    key = i * n + r
                    cols[col][key] = cols[col].get(key, 0) + c * v
        return Matrix.from_sparse_cols(cols, d * n, F)
    # unknown s[(i, r), c] at index ((i*n + r) * n + c)
    nvar = d * n * n
    act_cols = [m.action[b].cols_sparse() for b in range(d)]
    act_rows = [m.action[b].rows_sparse() for b in range(d)]
    rows, rhs = [], []
    for b in range(d):
        # (L_b ⊗ I) s - s rho(b) = 0, entry ((k, r), c)
        eqs: dict = {}
        for i in range(d):
            for k, coef in a.product(b, i).items():
                for r in range(n):
                    for c in range(n):
                        row = eqs.setdefault((k, r, c), {})
                        idx = (i * n + r) * n + c
                        row[idx] = row.get(idx, 0) + coef
        for i in range(d):
            for r in range(n):
                for c in range(n):
                    for t, v in act_cols[b][c].items():
                        row = eqs.setdefault((i, r, c), {})
                        idx = (i * n + r) * n + t
                        row[idx] = row.get(idx, 0) - v
        for key in sorted(eqs):
            rows.append(eqs[key])
            rhs.append(0)
    # pi s = I, pi(e_i ⊗ m_r) = rho(e_i) m_r
    for q in range(n):
        for c in range(n):
            row = {}
            for i in range(d):
                for r, v in act_rows[i][q].items():
                    idx = (i * n + r) * n + c
                    row[idx] = row.get(idx, 0) + v
            rows.append(row)
            rhs.append(1 if q == c else 0)
    sol = solve_sparse(rows, rhs, nvar, F, kernel=False)
    if sol is None:
        return None
    return Matrix.from_flat(d * n, n, sol[0].col(0), F)


def _nonzero(m: Matrix):
    for r, row in enumerate(m.rows_sparse()):
        for c, v in row.items():
            yield (r, c), v


def is_projective(m: LeftModule) -> bool:
    return projective_section(m) is not None


def canonical_surjection(m: LeftModule) -> Matrix:
    """A ⊗_k M -> M, e_i⊗m_r ↦ e_i m_r, as an n x (d*n) matrix."""
    return Matrix.hstack(m.action)


def module_generators(m: LeftModule) -> list[dict]:
    """Greedy module generators among the basis vectors of M, as sparse vectors."""
    F = m.algebra.field
    gens = []
    span = Subspace.zero(m.dim, F)
    cols = [act.cols_sparse() for act in m.action]
    for x in range(m.dim):
        if span.contains({x: F.one}):
            continue
        gens.append({x: F.one})
        span = span.sum(Subspace.span([c[x] for c in cols], m.dim, F))
        if span.dim == m.dim:
            break
    return gens


def hom_to_regular(m: LeftModule, regular: Sequence[Matrix] | None = None) -> Subspace:
    """Hom_A(M, A) as a subspace of row-major flattened d x n matrices.

    ``regular`` gives the action of A on itself (default: left multiplication).
    The maps are parametrized by their values alpha_j on module generators
    u_1..u_r; the values must kill every relation among the generators.
    """
    a, n, F = m.algebra, m.dim, m.algebra.field
    d = a.dim
    reg = list(regular) if regular is not None else a.L
    gens = module_generators(m)
    r = len(gens)
    # surjection A^r -> M, column (j, b) = e_b u_j
    pi_cols = []
    act_cols = [act.cols_sparse() for act in m.action]
    for u in gens:
        for b in range(d):
            col: dict = {}
            for x, w in u.items():
                for i, v in act_cols[b][x].items():
                    col[i] = col.get(i, 0) + w * v
            pi_cols.append(col)
    pi = Matrix.from_sparse_cols(pi_cols, n, F)
    relations = Subspace.kernel(pi)
    reg_cols = [mat.cols_sparse() for mat in reg]
    # unknown alpha_j ∈ A at index j*d + t; relation kappa gives
    # sum_{j,b} kappa[j,b] e_b alpha_j = 0
    rows = []
    for kappa in relations.rows_sparse():
        eqs: dict = {}
        for jb, kv in kappa.items():
            j, b = divmod(jb, d)
            for t in range(d):
                for i, v in reg_cols[b][t].items():
                    row = eqs.setdefault(i, {})
                    row[j * d + t] = row.get(j * d + t, 0) + kv * v
        rows.extend(eqs[i] for i in sorted(eqs))
    sol = solve_sparse(rows, [0] * len(rows), r * d, F)
    alphas = sol[1].rows_sparse()
    if not alphas:
        return Subspace.zero(d * n, F)
    # k-linear section sigma of pi through its pivot columns
    piv = rref(pi)[1]
    inv = Matrix(F, pi.select_cols(piv)._m.inv())
    sigma_rows = [{} for _ in range(r * d)]
    for p, row in zip(piv, inv.rows_sparse()):
        sigma_rows[p] = row
    sigma = Matrix.from_sparse_rows(sigma_rows, n, F)
    # f_alpha = V_alpha sigma with V_alpha[i, (j, b)] = (e_b alpha_j)_i; all
    # V_alpha are stacked so one product yields every f_alpha, row-major.
    v_rows = []
    for alpha in alphas:
        block = [{} for _ in range(d)]
        for jt, av in alpha.items():
            j, t = divmod(jt, d)
            for b in range(d):
                for i, w in reg_cols[b][t].items():
                    row = block[i]
                    row[j * d + b] = row.get(j * d + b, 0) + av * w
        v_rows.extend(block)
    stacked = Matrix.from_sparse_rows(v_rows, r * d, F) @ sigma
    return Subspace.row_space(stacked.reshape(len(alphas), d * n))

