from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coring_lab.exactlin import (GF, QQ, FieldMismatchError, Matrix, Subspace,
                                 rref, solve_affine, solve_sparse, sparse_rref,
                                 subspace_ops)

from conftest import matrices


def M(rows, field=QQ):
    return Matrix.from_rows(rows, field)


class TestRref:
    def test_zero_matrix(self):
        r, piv = rref(M([[0, 0], [0, 0]]))
        assert r.nrows == 0 and piv == []

    def test_rank_one(self):
        r, piv = rref(M([[2, 4], [1, 2]]))
        assert r == M([[1, 2]]) and piv == [0]

    def test_identity(self):
        r, piv = rref(Matrix.identity(3))
        assert r == Matrix.identity(3) and piv == [0, 1, 2]

    @given(matrices())
    def test_idempotent(self, m):
        r, piv = rref(m)
        if r.nrows:
            assert rref(r) == (r, piv)

    @given(matrices())
    def test_row_space_preserved(self, m):
        r, piv = rref(m)
        assert len(piv) == m.rank()
        assert Subspace.row_space(m) == Subspace.span(m.rows_sparse(), m.ncols)

    @given(matrices())
    def test_sparse_agrees_with_dense(self, m):
        red, piv = sparse_rref(m.rows_sparse(), m.ncols)
        r, piv2 = rref(m)
        assert piv == piv2
        assert Matrix.from_sparse_rows(red, m.ncols) == r


class TestSolve:
    def test_identity_system(self):
        part, ker = solve_affine(Matrix.identity(2), [3, 5])
        assert part.col(0) == [3, 5] and ker.dim == 0

    def test_underdetermined(self):
        part, ker = solve_affine(M([[1, 1]]), [0])
        assert part.col(0) == [0, 0]
        assert ker.dim == 1 and ker.contains([1, -1])

    def test_inconsistent(self):
        assert solve_affine(M([[1], [1]]), [0, 1]) is None

    @given(matrices(), st.data())
    def test_solution_is_exact(self, a, data):
        x = data.draw(st.lists(st.fractions(-3, 3, max_denominator=3), min_size=a.ncols, max_size=a.ncols))
        b = (a @ Matrix.column(x)).col(0)
        part, ker = solve_affine(a, b)
        assert (a @ part).col(0) == b
        assert ker.dim == a.ncols - a.rank()
        for v in ker.vectors():
            assert (a @ Matrix.column(v)).is_zero()

    def test_sparse_without_kernel(self):
        part, ker = solve_sparse([{0: 1, 1: 1}], [2], 2, kernel=False)
        assert ker is None and part.col(0) == [2, 0]


class TestSubspace:
    def test_same(self):
        x = Subspace.span([[1, 2, 3]], 3)
        ops = subspace_ops(x, x)
        assert ops["sum"] == x and ops["intersection"] == x

    def test_complementary_lines(self):
        x, y = Subspace.span([[1, 0]], 2), Subspace.span([[0, 1]], 2)
        ops = subspace_ops(x, y)
        assert ops["sum"].dim == 2 and ops["intersection"].dim == 0

    def test_quotient(self):
        x = Subspace.span([[1, 1, 0]], 3)
        ops = subspace_ops(x, Subspace.zero(3))
        proj, sec = ops["quotient_projection"], ops["quotient_section"]
        assert proj.shape == (2, 3)
        assert proj @ sec == Matrix.identity(2)
        assert (proj @ Matrix.column([1, 1, 0])).is_zero()

    @given(matrices(max_cols=4, min_cols=4), matrices(max_cols=4, min_cols=4))
    def test_dimension_formula(self, a, b):
        x, y = Subspace.row_space(a), Subspace.row_space(b)
        assert x.sum(y).dim + x.intersection(y).dim == x.dim + y.dim
        assert x.sum(y).contains_subspace(x)
        assert x.contains_subspace(x.intersection(y))

    @given(matrices())
    def test_coordinates_round_trip(self, m):
        s = Subspace.row_space(m)
        for v in m.rows_sparse():
            coords = s.coordinates(v)
            back = (s.basis.T @ Matrix.column(coords)).col(0)
            assert back == [v.get(j, 0) for j in range(m.ncols)]


class TestFields:
    def test_gf_arithmetic(self):
        F = GF(5)
        m = Matrix.from_rows([[2, 3], [4, 1]], F)
        assert (m @ m) == Matrix.from_rows([[16 % 5, 9 % 5], [12 % 5, 13 % 5]], F)
        assert F(7) == F(2)

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            Matrix.identity(2) @ Matrix.identity(2, GF(3))

    def test_exact_rationals(self):
        m = M([[Fraction(1, 3), 0], [0, 3]])
        assert m @ m == M([[Fraction(1, 9), 0], [0, 9]])

    @given(matrices(), matrices())
    def test_kron_mixed_product(self, a, b):
        left = a.kron(b).T
        assert left == a.T.kron(b.T)
