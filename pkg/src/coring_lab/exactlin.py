"""Exact scalars, dense matrices and subspaces over Q and GF(p).

Dense storage and the heavy kernels (products, row reduction) are delegated
to python-flint (``fmpq_mat`` / ``nmod_mat``).  Spans of many sparse vectors
go through :func:`sparse_rref`, which keeps the basis fully reduced as it
grows.  Every routine returns canonical reduced-row-echelon data, so equal
subspaces always compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import flint


class FieldMismatchError(ValueError):
    """Values from fields of different characteristic were combined."""


class DimensionError(ValueError):
    """Shapes of matrices or subspaces do not fit together."""


@dataclass(frozen=True)
class Field:
    """The base field: ``Field(0)`` is Q, ``Field(p)`` is GF(p)."""

    char: int = 0

    def __post_init__(self):
        if self.char < 0 or (self.char and not flint.fmpz(self.char).is_prime()):
            raise ValueError(f"characteristic must be 0 or a prime, got {self.char}")

    def __repr__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        """Coerce ``value`` (int, Fraction, "p/q" string, flint scalar) into the field."""
        if self.char == 0 and type(value) is flint.fmpq:
            return value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.char == 0:
            if isinstance(value, flint.fmpq):
                return value
            if isinstance(value, flint.nmod):
                raise FieldMismatchError("GF(p) element used over QQ")
            if isinstance(value, Fraction):
                return flint.fmpq(value.numerator, value.denominator)
            if isinstance(value, (int, flint.fmpz)):
                return flint.fmpq(value)
            raise TypeError(f"cannot coerce {value!r} into QQ")
        p = self.char
        if isinstance(value, flint.nmod):
            if value.modulus() != p:
                raise FieldMismatchError(f"GF({value.modulus()}) element used over GF({p})")
            return value
        if isinstance(value, flint.fmpq):
            value = Fraction(int(value.p), int(value.q))
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({p})")
            return flint.nmod(value.numerator, p) / flint.nmod(value.denominator, p)
        if isinstance(value, (int, flint.fmpz)):
            return flint.nmod(int(value), p)
        raise TypeError(f"cannot coerce {value!r} into GF({p})")

    def to_json(self, x):
        """Serialize a scalar: "p/q" strings over Q, plain residues over GF(p)."""
        if self.char == 0:
            x = self(x)
            return str(x.p) if x.q == 1 else f"{x.p}/{x.q}"
        return int(self(x))

    def _flint(self, nrows, ncols, flat=None):
        if flat is None:
            if self.char == 0:
                return flint.fmpq_mat(nrows, ncols)
            return flint.nmod_mat(nrows, ncols, self.char)
        if self.char == 0:
            return flint.fmpq_mat(nrows, ncols, flat)
        return flint.nmod_mat(nrows, ncols, [int(v) for v in flat], self.char)

    def _flint_sparse(self, nrows, ncols, entries):
        """Matrix from ``(i, j, value)`` triples; values already in the field."""
        m = self._flint(nrows, ncols)
        for i, j, v in entries:
            m[i, j] = v
        return m


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def _field_of_flint(m) -> Field:
    if isinstance(m, flint.fmpq_mat):
        return QQ
    return Field(m.modulus())


class Matrix:
    """Immutable dense matrix over a :class:`Field`.

    Vectors are column matrices.  Arithmetic between matrices over different
    fields raises :class:`FieldMismatchError`.
    """

    __slots__ = ("field", "_m")

    def __init__(self, field: Field, raw):
        self.field = field
        self._m = raw

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ, ncols: int | None = None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        flat = [field(v) for r in rows for v in r]
        return cls(field, field._flint(len(rows), ncols, flat))

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence], field: Field = QQ, nrows: int | None = None):
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        return cls.from_rows(cols, field, nrows).T if cols else cls.zeros(nrows, 0, field)

    @classmethod
    def from_flat(cls, nrows: int, ncols: int, flat: Sequence, field: Field = QQ):
        if len(flat) != nrows * ncols:
            raise DimensionError("flat entry list has the wrong length")
        if field.char == 0:
            try:
                return cls(field, field._flint(nrows, ncols, flat))
            except TypeError:
                pass
        return cls(field, field._flint(nrows, ncols, [field(v) for v in flat]))

    @classmethod
    def from_sparse_rows(cls, rows: Sequence[dict], ncols: int, field: Field = QQ):
        entries = [(i, j, field(v)) for i, r in enumerate(rows) for j, v in r.items() if v]
        return cls(field, field._flint_sparse(len(rows), ncols, entries))

    @classmethod
    def from_sparse_cols(cls, cols: Sequence[dict], nrows: int, field: Field = QQ):
        entries = [(i, j, field(v)) for j, c in enumerate(cols) for i, v in c.items() if v]
        return cls(field, field._flint_sparse(nrows, len(cols), entries))

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field = QQ):
        return cls(field, field._flint(nrows, ncols))

    @classmethod
    def identity(cls, n: int, field: Field = QQ):
        flat = [0] * (n * n)
        for i in range(n):
            flat[i * n + i] = 1
        return cls(field, field._flint(n, n, flat))

    @classmethod
    def column(cls, values: Sequence, field: Field = QQ):
        return cls.from_flat(len(values), 1, list(values), field)

    # -- shape and access -------------------------------------------------
    @property
    def nrows(self) -> int:
        return self._m.nrows()

    @property
    def ncols(self) -> int:
        return self._m.ncols()

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self._m[i, j]

    def entries(self) -> list:
        """Row-major flat list of entries."""
        if self.nrows == 0 or self.ncols == 0:
            return []
        return self._m.entries()

    def tolist(self) -> list[list]:
        flat = self.entries()
        n = self.ncols
        return [flat[i * n:(i + 1) * n] for i in range(self.nrows)]

    def row(self, i: int) -> list:
        return [self._m[i, j] for j in range(self.ncols)]

    def col(self, j: int) -> list:
        return [self._m[i, j] for i in range(self.nrows)]

    def col_sparse(self, j: int) -> dict:
        return {i: v for i in range(self.nrows) if (v := self._m[i, j])}

    def cols_sparse(self) -> list[dict]:
        """All columns as ``{row: value}`` dicts (one pass over the entries)."""
        cols: list[dict] = [{} for _ in range(self.ncols)]
        n = self.ncols
        for k, v in enumerate(self.entries()):
            if v:
                cols[k % n][k // n] = v
        return cols

    def rows_sparse(self) -> list[dict]:
        rows: list[dict] = [{} for _ in range(self.nrows)]
        n = self.ncols
        for k, v in enumerate(self.entries()):
            if v:
                rows[k // n][k % n] = v
        return rows

    def to_json(self) -> list[list]:
        return [[self.field.to_json(v) for v in r] for r in self.tolist()]

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        if self.ncols == 0:
            return Matrix.zeros(self.nrows, other.ncols, self.field)
        return Matrix(self.field, self._m * other._m)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.field, self._m + other._m)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {other.shape} from {self.shape}")
        return Matrix(self.field, self._m - other._m)

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, -self._m)

    def scale(self, s) -> "Matrix":
        s = self.field(s)
        if self.nrows == 0 or self.ncols == 0:
            return self
        return Matrix(self.field, self._m * s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and (
            self.nrows == 0 or self.ncols == 0 or self._m == other._m)

    def __hash__(self):
        return hash((self.field, self.shape, tuple(str(v) for v in self.entries())))

    def __repr__(self):
        return f"Matrix({self.tolist()!r}, {self.field!r})"

    def is_zero(self) -> bool:
        return not any(self.entries())

    @property
    def T(self) -> "Matrix":
        if self.nrows == 0 or self.ncols == 0:
            return Matrix.zeros(self.ncols, self.nrows, self.field)
        return Matrix(self.field, self._m.transpose())

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; row and column pairs are ordered lexicographically."""
        self._check(other)
        r1, c1 = self.shape
        r2, c2 = other.shape
        a, b = self.tolist(), other.tolist()
        zero_row = [0] * c2
        flat = []
        for i in range(r1):
            for k in range(r2):
                brow = b[k]
                for j in range(c1):
                    x = a[i][j]
                    flat.extend([x * y for y in brow] if x else zero_row)
        return Matrix(self.field, self.field._flint(r1 * r2, c1 * c2, flat))

    def select_rows(self, idx: Sequence[int]) -> "Matrix":
        flat, n = self.entries(), self.ncols
        out = []
        for i in idx:
            out.extend(flat[i * n:(i + 1) * n])
        return Matrix(self.field, self.field._flint(len(idx), n, out))

    def select_cols(self, idx: Sequence[int]) -> "Matrix":
        return self.T.select_rows(idx).T

    @staticmethod
    def hstack(blocks: Sequence["Matrix"]) -> "Matrix":
        return Matrix.vstack([b.T for b in blocks]).T

    def reshape(self, nrows: int, ncols: int) -> "Matrix":
        """Row-major reshape."""
        return Matrix.from_flat(nrows, ncols, self.entries(), self.field)

    @staticmethod
    def vstack(blocks: Sequence["Matrix"]) -> "Matrix":
        blocks = list(blocks)
        if not blocks:
            raise DimensionError("nothing to stack")
        field, ncols = blocks[0].field, blocks[0].ncols
        flat = []
        for b in blocks:
            blocks[0]._check(b)
            if b.ncols != ncols:
                raise DimensionError("column counts differ")
            flat.extend(b.entries())
        return Matrix(field, field._flint(sum(b.nrows for b in blocks), ncols, flat))

    def rank(self) -> int:
        if self.nrows == 0 or self.ncols == 0:
            return 0
        return self._m.rank()

    def apply_sparse(self, vec: dict) -> dict:
        """Image of a sparse vector ``{index: coefficient}``."""
        out: dict = {}
        for j, c in vec.items():
            for i in range(self.nrows):
                v = self._m[i, j]
                if v:
                    out[i] = out.get(i, 0) + c * v
        return {i: v for i, v in out.items() if v}


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with zero rows dropped, plus the pivot columns."""
    if m.nrows == 0 or m.ncols == 0:
        return Matrix.zeros(0, m.ncols, m.field), []
    reduced, rank = m._m.rref()
    n = m.ncols
    flat = reduced.entries()[:rank * n] if rank else []
    pivots = []
    j = 0
    for i in range(rank):
        base = i * n
        while not flat[base + j]:
            j += 1
        pivots.append(j)
    return Matrix(m.field, m.field._flint(rank, n, flat)), pivots


def sparse_rref(rows: Iterable[dict], ncols: int, field: Field = QQ) -> tuple[list[dict], list[int]]:
    """RREF of a family of sparse row vectors.

    Rows are ``{column: value}`` dicts.  The basis is kept fully reduced while
    rows are inserted, so every pivot row has zeros in all other pivot
    columns and its leading entry is its pivot; the sorted result is the
    unique RREF.
    """
    basis: dict[int, dict] = {}          # pivot column -> row
    where: dict[int, set[int]] = {}      # column -> pivots of rows touching it
    zero = field.zero
    for raw in rows:
        v = {j: field(c) for j, c in raw.items() if c}
        for p in [j for j in v if j in basis]:
            c = v.get(p)
            if not c:
                continue
            for j, b in basis[p].items():
                x = v.get(j, zero) - c * b
                if x:
                    v[j] = x
                else:
                    v.pop(j, None)
        if not v:
            continue
        p = min(v)
        inv = 1 / v[p]
        v = {j: x * inv for j, x in v.items()}
        for q in list(where.get(p, ())):
            row = basis[q]
            c = row[p]
            for j, b in v.items():
                x = row.get(j, zero) - c * b
                if x:
                    if j not in row:
                        where.setdefault(j, set()).add(q)
                    row[j] = x
                else:
                    del row[j]
                    where[j].discard(q)
        basis[p] = v
        for j in v:
            where.setdefault(j, set()).add(p)
    pivots = sorted(basis)
    return [basis[p] for p in pivots], pivots


def solve_affine(a: Matrix, b: Matrix | Sequence):
    """Solve ``a x = b`` exactly.

    Returns ``(particular, kernel)`` where the particular solution has all
    free variables set to zero, or ``None`` when the system is inconsistent.
    """
    if not isinstance(b, Matrix):
        b = Matrix.column(b, a.field)
    if b.nrows != a.nrows or b.ncols != 1:
        raise DimensionError(f"rhs of shape {b.shape} for system of shape {a.shape}")
    rows = a.rows_sparse()
    rhs = b.col(0)
    n = a.ncols
    for r, v in zip(rows, rhs):
        if v:
            r[n] = v
    return _solve_from_rows(rows, n, a.field)


def solve_sparse(rows: Sequence[dict], rhs: Sequence, ncols: int, field: Field = QQ,
                 kernel: bool = True):
    """Same contract as :func:`solve_affine` for a system given by sparse rows.

    With ``kernel=False`` the kernel is not formed and ``None`` is returned in
    its place; this matters for wide systems whose kernel would be huge.
    """
    aug = []
    for r, v in zip(rows, rhs):
        r = dict(r)
        if v:
            r[ncols] = v
        aug.append(r)
    return _solve_from_rows(aug, ncols, field, kernel)


def _solve_from_rows(aug_rows, n, field, kernel=True):
    red, pivots = sparse_rref(aug_rows, n + 1, field)
    if pivots and pivots[-1] == n:
        return None
    particular = [field.zero] * n
    for row, p in zip(red, pivots):
        particular[p] = row.get(n, field.zero)
    if not kernel:
        return Matrix.column(particular, field), None
    kernel = Subspace.from_rref_rows([{j: v for j, v in r.items() if j < n} for r in red],
                                     pivots, n, field).complement_kernel()
    return Matrix.column(particular, field), kernel


class Subspace:
    """A subspace of ``field^ambient_dim`` held as a canonical RREF basis."""

    __slots__ = ("ambient_dim", "field", "basis", "pivots", "_rows")

    def __init__(self, ambient_dim: int, basis: Matrix, pivots: Sequence[int]):
        self.ambient_dim = ambient_dim
        self.field = basis.field
        self.basis = basis
        self.pivots = tuple(pivots)
        self._rows = None

    @classmethod
    def span(cls, vectors: Iterable, ambient_dim: int, field: Field = QQ) -> "Subspace":
        """Span of vectors given as sequences, sparse dicts or column matrices."""
        rows = []
        for v in vectors:
            if isinstance(v, Matrix):
                rows.extend(v.cols_sparse())
            elif isinstance(v, dict):
                rows.append(v)
            else:
                rows.append({i: x for i, x in enumerate(v) if x})
        red, pivots = sparse_rref(rows, ambient_dim, field)
        return cls.from_rref_rows(red, pivots, ambient_dim, field)

    @classmethod
    def row_space(cls, m: Matrix) -> "Subspace":
        r, p = rref(m)
        return cls(m.ncols, r, p)

    @classmethod
    def column_space(cls, m: Matrix) -> "Subspace":
        return cls.row_space(m.T)

    @classmethod
    def from_rref_rows(cls, rows, pivots, ambient_dim, field) -> "Subspace":
        s = cls(ambient_dim, Matrix.from_sparse_rows(rows, ambient_dim, field), pivots)
        s._rows = [dict(r) for r in rows]
        return s

    @classmethod
    def zero(cls, ambient_dim: int, field: Field = QQ) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(0, ambient_dim, field), [])

    @classmethod
    def whole(cls, ambient_dim: int, field: Field = QQ) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim, field), range(ambient_dim))

    @classmethod
    def kernel(cls, m: Matrix) -> "Subspace":
        """Right kernel ``{x : m x = 0}``."""
        r, p = rref(m)
        return cls(m.ncols, r, p).complement_kernel()

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def rows_sparse(self) -> list[dict]:
        if self._rows is None:
            self._rows = self.basis.rows_sparse()
        return self._rows

    def vectors(self) -> list[list]:
        return self.basis.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def _same(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(f"ambient {self.ambient_dim} vs {other.ambient_dim}")
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def coordinates(self, v) -> list:
        """Coordinates of ``v`` in the RREF basis (its pivot entries).

        Raises ``ValueError`` if ``v`` is not in the subspace.
        """
        vec = _as_sparse(v)
        coords = [vec.get(p, self.field.zero) for p in self.pivots]
        rebuilt: dict = {}
        for c, row in zip(coords, self.rows_sparse()):
            if c:
                for j, x in row.items():
                    rebuilt[j] = rebuilt.get(j, 0) + c * x
        if {j: x for j, x in rebuilt.items() if x} != {j: self.field(x) for j, x in vec.items() if x}:
            raise ValueError("vector does not lie in the subspace")
        return coords

    def contains(self, v) -> bool:
        try:
            self.coordinates(v)
        except ValueError:
            return False
        return True

    def contains_subspace(self, other: "Subspace") -> bool:
        return self.sum(other).dim == self.dim

    def sum(self, other: "Subspace") -> "Subspace":
        self._same(other)
        return Subspace.span(self.rows_sparse() + other.rows_sparse(), self.ambient_dim, self.field)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of ``[X^T | -Y^T]``."""
        self._same(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim, self.field)
        stacked = Matrix.hstack([self.basis.T, -other.basis.T])
        ker = Subspace.kernel(stacked)
        vecs = [self.basis.T @ Matrix.column(row[:self.dim], self.field) for row in ker.vectors()]
        return Subspace.span(vecs, self.ambient_dim, self.field)

    def complement_kernel(self) -> "Subspace":
        """Treat the basis rows as equations and return their solution space."""
        n = self.ambient_dim
        pivset = set(self.pivots)
        rows = self.rows_sparse()
        vecs = []
        for f in range(n):
            if f in pivset:
                continue
            v = {f: self.field.one}
            for p, row in zip(self.pivots, rows):
                c = row.get(f)
                if c:
                    v[p] = -c
            vecs.append(v)
        return Subspace.span(vecs, n, self.field)

    def quotient_projection(self) -> tuple[Matrix, Matrix]:
        """Projection ``ambient -> ambient/self`` and a section of it.

        Coset representatives live on the non-pivot coordinates: the section
        sends the t-th quotient basis vector to the t-th non-pivot unit vector.
        """
        n = self.ambient_dim
        pivset = set(self.pivots)
        free = [j for j in range(n) if j not in pivset]
        pos = {j: t for t, j in enumerate(free)}
        cols: list[dict] = [dict() for _ in range(n)]
        for j in free:
            cols[j] = {pos[j]: self.field.one}
        for p, row in zip(self.pivots, self.rows_sparse()):
            cols[p] = {pos[j]: -x for j, x in row.items() if j != p}
        proj = Matrix.from_sparse_cols(cols, len(free), self.field)
        section = Matrix.from_sparse_cols([{j: self.field.one} for j in free], n, self.field)
        return proj, section


def _as_sparse(v) -> dict:
    if isinstance(v, dict):
        return v
    if isinstance(v, Matrix):
        return v.col_sparse(0)
    return {i: x for i, x in enumerate(v) if x}


def subspace_ops(x: Subspace, y: Subspace) -> dict:
    """Sum, intersection and the quotient projection/section of ``x``."""
    proj, section = x.quotient_projection()
    return {"sum": x.sum(y), "intersection": x.intersection(y),
            "quotient_projection": proj, "quotient_section": section}


class SparseCols:
    """Column-sparse matrix, used for k-level lifts that are too large to store densely."""

    __slots__ = ("nrows", "cols", "field")

    def __init__(self, nrows: int, cols: Sequence[dict], field: Field = QQ):
        self.nrows = nrows
        self.cols = tuple({i: v for i, v in c.items() if v} for c in cols)
        self.field = field

    @property
    def ncols(self) -> int:
        return len(self.cols)

    @classmethod
    def from_matrix(cls, m: Matrix) -> "SparseCols":
        return cls(m.nrows, m.cols_sparse(), m.field)

    def dense(self) -> Matrix:
        return Matrix.from_sparse_cols(self.cols, self.nrows, self.field)

    def premultiply(self, m: Matrix) -> Matrix:
        """``m @ self`` as a dense matrix, touching only the nonzero rows."""
        mcols = m.cols_sparse()
        out = []
        for c in self.cols:
            acc: dict = {}
            for j, v in c.items():
                for i, x in mcols[j].items():
                    acc[i] = acc.get(i, 0) + v * x
            out.append(acc)
        return Matrix.from_sparse_cols(out, m.nrows, self.field)

    def __eq__(self, other):
        if not isinstance(other, SparseCols):
            return NotImplemented
        return self.nrows == other.nrows and self.cols == other.cols

    def __hash__(self):
        return hash((self.nrows, tuple(tuple(sorted((i, str(v)) for i, v in c.items())) for c in self.cols)))
