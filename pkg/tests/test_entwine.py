import pytest
from hypothesis import given, strategies as st

from coring_lab.algebra import (dual_numbers, group_algebra, matrix_algebra,
                                rationals, upper_triangular)
from coring_lab.coring import (check_coring, comatrix_coalgebra,
                               grouplike_coalgebra)
from coring_lab.entwine import (Entwining, InvalidEntwiningError,
                                check_entwining, entwined_coring, flip_entwining,
                                group_entwining, tensor_entwining)
from coring_lab.exactlin import QQ, Matrix

ALGEBRAS = {"QQ": rationals, "M2": lambda: matrix_algebra(2), "dual": dual_numbers,
            "T2": lambda: upper_triangular(2)}
COALGEBRAS = {"grouplike-2": lambda: grouplike_coalgebra(2), "comatrix-2": lambda: comatrix_coalgebra(2)}


def shifted_entwining(n: int, f) -> Entwining:
    """ψ(g_i ⊗ h_j) = h_j ⊗ g_{i + f(j)} for k[Z/n] and its grouplike coalgebra."""
    a, c = group_algebra(n), grouplike_coalgebra(n)
    cols = [{j * n + (i + f[j]) % n: QQ(1)} for i in range(n) for j in range(n)]
    return Entwining(a, c, Matrix.from_sparse_cols(cols, n * n), name=f"shift{tuple(f)}")


class TestCheck:
    @pytest.mark.parametrize("a", sorted(ALGEBRAS))
    @pytest.mark.parametrize("c", sorted(COALGEBRAS))
    def test_flip_is_valid(self, a, c):
        assert check_entwining(flip_entwining(ALGEBRAS[a](), COALGEBRAS[c]())).ok

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_group_entwining(self, n):
        assert check_entwining(group_entwining(n)).ok

    def test_corrupted_unit(self):
        e = flip_entwining(dual_numbers(), grouplike_coalgebra(2))
        bad = Entwining(e.algebra, e.coalgebra, e.psi.scale(2))
        rep = check_entwining(bad)
        assert "bimodule.right_unit" in rep.identities()

    def test_corrupted_coalgebra_side(self):
        # ψ(g_i ⊗ a) = a ⊗ g_0 is right-linear but breaks the counit triangle
        a, c = dual_numbers(), grouplike_coalgebra(2)
        cols = [{b * 2 + 0: QQ(1)} for k in range(2) for b in range(2)]
        bad = Entwining(a, c, Matrix.from_sparse_cols(cols, 4))
        rep = check_entwining(bad)
        assert not rep.ok

    def test_rejects_non_coalgebra(self):
        from coring_lab.coring import trivial_coring
        with pytest.raises(ValueError):
            Entwining(rationals(), trivial_coring(dual_numbers()), Matrix.identity(2))

    @given(st.integers(2, 4).flatmap(
        lambda n: st.tuples(st.just(n), st.lists(st.integers(0, n - 1), min_size=n, max_size=n))))
    def test_shift_valid_iff_additive(self, nf):
        n, f = nf
        additive = all(f[j] == (f[1] * j) % n for j in range(n))
        assert check_entwining(shifted_entwining(n, f)).ok == additive


class TestCorings:
    def test_flip_over_rationals_is_the_coalgebra(self):
        c = grouplike_coalgebra(2)
        e = entwined_coring(flip_entwining(rationals(), c))
        assert e.dim == 2 and e.comult == c.comult and e.counit == c.counit

    def test_flip_matrix_algebra(self):
        e = entwined_coring(flip_entwining(matrix_algebra(2), grouplike_coalgebra(2)))
        assert e.dim == 8 and check_coring(e).ok

    def test_flip_dual_numbers_comatrix(self):
        e = entwined_coring(flip_entwining(dual_numbers(), comatrix_coalgebra(2)))
        assert e.dim == 8 and check_coring(e).ok

    def test_invalid_raises(self):
        e = flip_entwining(dual_numbers(), grouplike_coalgebra(2))
        with pytest.raises(InvalidEntwiningError):
            entwined_coring(Entwining(e.algebra, e.coalgebra, e.psi.scale(2)))


class TestTensor:
    def test_flip_flip_is_flip(self):
        a, b = matrix_algebra(2), upper_triangular(2)
        c, d = grouplike_coalgebra(2), comatrix_coalgebra(2)
        t = tensor_entwining(flip_entwining(a, c), flip_entwining(b, d))
        assert t.report.ok
        flip = flip_entwining(t.entwining.algebra, t.entwining.coalgebra)
        assert t.entwining.psi == flip.psi

    def test_permutation_certificate(self):
        t = tensor_entwining(flip_entwining(rationals(), grouplike_coalgebra(2)),
                             flip_entwining(matrix_algebra(2), grouplike_coalgebra(2)))
        assert t.iso.shape == (16, 16)
        cols = t.iso.cols_sparse()
        assert all(list(col.values()) == [1] for col in cols)
        assert sorted(next(iter(col)) for col in cols) == list(range(16))

    @pytest.mark.parametrize("pair", [(2, 2), (2, 3)])
    def test_group_entwinings(self, pair):
        t = tensor_entwining(group_entwining(pair[0]), group_entwining(pair[1]))
        assert t.report.ok and check_entwining(t.entwining).ok

    @given(st.sampled_from(sorted(ALGEBRAS)),
           st.sampled_from(["shift-0", "shift-1", "flip-T2", "flip-dual", "group-2"]))
    def test_tensor_is_valid(self, a, second):
        e1 = flip_entwining(ALGEBRAS[a](), grouplike_coalgebra(2))
        e2 = {"shift-0": lambda: shifted_entwining(2, [0, 0]),
              "shift-1": lambda: shifted_entwining(2, [0, 1]),
              "flip-T2": lambda: flip_entwining(upper_triangular(2), grouplike_coalgebra(1)),
              "flip-dual": lambda: flip_entwining(dual_numbers(), grouplike_coalgebra(2)),
              "group-2": lambda: group_entwining(2)}[second]()
        t = tensor_entwining(e1, e2)
        assert t.report.ok and check_entwining(t.entwining).ok
