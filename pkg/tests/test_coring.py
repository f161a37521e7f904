from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from coring_lab.algebra import (dual_numbers, field_extension, is_semisimple,
                                matrix_algebra, opposite_algebra, product_algebra,
                                rationals, separability_idempotent,
                                upper_triangular)
from coring_lab.coring import (Coring, SubalgebraError, base_change, check_coring,
                               check_coring_hom, coalgebra, comatrix_coalgebra,
                               dual_coalgebra, grouplike_coalgebra,
                               opposite_coring, sweedler_coring, tensor_coring,
                               trivial_coring)
from coring_lab.cosep import check_cointegral, coseparability
from coring_lab.duals import (LEFT, RIGHT, counit_as_coring_map, dual_hom,
                              dual_radical, dual_ring, generated_subbicomodule,
                              is_semisimple_coring, psi, restrict_coring)
from coring_lab.exactlin import QQ, Matrix

from conftest import matrices

SMALL = {
    "trivial-QQ": lambda: trivial_coring(rationals()),
    "trivial-M2": lambda: trivial_coring(matrix_algebra(2)),
    "trivial-dual": lambda: trivial_coring(dual_numbers()),
    "trivial-T2": lambda: trivial_coring(upper_triangular(2)),
    "comatrix-2": lambda: comatrix_coalgebra(2),
    "grouplike-2": lambda: grouplike_coalgebra(2),
    "grouplike-3": lambda: grouplike_coalgebra(3),
    "dual-dual": lambda: dual_coalgebra(dual_numbers()),
    "dual-T2": lambda: dual_coalgebra(upper_triangular(2)),
    "sweedler-dual": lambda: sweedler_coring(dual_numbers(), [[1, 0]]),
    "sweedler-QxQ": lambda: sweedler_coring(product_algebra(2), [[1, 1]]),
}
# (coseparable, semisimple)
VERDICTS = {
    "trivial-QQ": (True, True), "trivial-M2": (True, True), "trivial-dual": (True, False),
    "trivial-T2": (True, False), "comatrix-2": (True, True), "grouplike-2": (True, True),
    "grouplike-3": (True, True), "dual-dual": (False, False), "dual-T2": (False, False),
    "sweedler-dual": (True, True), "sweedler-QxQ": (True, True),
}
small_names = st.sampled_from(sorted(SMALL))


def reindexed_coalgebra(c: Coring, p: Matrix) -> Coring:
    """A coalgebra over QQ transported to the basis f_i = sum_k p[k, i] e_k."""
    n = c.dim
    pinv = Matrix(QQ, p._m.inv())
    big = pinv.kron(pinv)
    lift = []
    for i in range(n):
        vec = [QQ(0)] * (n * n)
        for k, coef in p.col_sparse(i).items():
            for idx, v in c.lift[k].items():
                vec[idx] += coef * v
        lift.append((big @ Matrix.column(vec)).col_sparse(0))
    counit = (c.counit @ p).row(0)
    return coalgebra(c.name + "'", lift, counit)


class TestChecker:
    @pytest.mark.parametrize("name", sorted(SMALL))
    def test_small_corings_are_valid(self, name):
        assert check_coring(SMALL[name]()).ok

    def test_comatrix_bad_counit(self):
        c = comatrix_coalgebra(2)
        bad = Coring(c.base, c.carrier, c.lift, Matrix.from_rows([[1, 1, 1, 1]]))
        rep = check_coring(bad)
        assert {"counit_left", "counit_right"} & rep.identities()

    def test_non_coassociative(self):
        c = grouplike_coalgebra(2)
        lift = [dict(c.lift[0]), {0: QQ(1), 3: QQ(1), 1: QQ(-1)}]   # Δg1 = g0⊗g0 + g1⊗g1 - g0⊗g1
        rep = check_coring(Coring(c.base, c.carrier, lift, c.counit))
        assert not rep.ok

    def test_non_linear_comultiplication(self):
        c = trivial_coring(dual_numbers())
        lift = [dict(c.lift[0]), {2: QQ(1), 1: QQ(1)}]   # Δx = x⊗1 + 1⊗x (not A-linear over A)
        rep = check_coring(Coring(c.base, c.carrier, lift, c.counit))
        assert not rep.ok


class TestConstructors:
    def test_trivial_tensor_trivial(self):
        a, b = dual_numbers(), matrix_algebra(2)
        t = tensor_coring(trivial_coring(a), trivial_coring(b))
        assert check_coring(t).ok and t.dim == 8
        triv = trivial_coring(t.base)
        assert t.counit == triv.counit

    def test_comatrix_squared(self):
        t = tensor_coring(comatrix_coalgebra(2), comatrix_coalgebra(2))
        assert t.dim == 16 and check_coring(t).ok

    def test_unit_law(self):
        c = comatrix_coalgebra(2)
        t = tensor_coring(c, trivial_coring(rationals()))
        assert t.dim == c.dim and t.counit == c.counit and t.comult == c.comult

    def test_opposite(self):
        c = comatrix_coalgebra(2)
        op = opposite_coring(c)
        assert check_coring(op).ok
        # Δ°(e_ij) = Σ_k e_kj ⊗ e_ik
        assert {(k, l) for k, l, _ in op.terms[0 * 2 + 1]} == {(0 * 2 + 1, 0 * 2 + 0), (1 * 2 + 1, 0 * 2 + 1)}
        back = opposite_coring(op)
        assert back.comult == c.comult and back.counit == c.counit

    def test_opposite_trivial(self):
        a = upper_triangular(2)
        op = opposite_coring(trivial_coring(a))
        assert op.base == opposite_algebra(a) and check_coring(op).ok

    def test_sweedler_examples(self):
        a = matrix_algebra(2)
        s = sweedler_coring(a, [list(a.unit)])
        assert s.dim == 16 and check_coring(s).ok
        full = sweedler_coring(a, [[int(i == j) for i in range(4)] for j in range(4)])
        assert full.dim == 4 and check_coring(full).ok
        d = sweedler_coring(dual_numbers(), [[1, 0]])
        assert d.dim == 4

    def test_sweedler_needs_subalgebra(self):
        with pytest.raises(SubalgebraError):
            sweedler_coring(matrix_algebra(2), [[0, 1, 0, 0]])
        with pytest.raises(SubalgebraError):
            sweedler_coring(matrix_algebra(2), [[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]])

    def test_base_change(self):
        c = grouplike_coalgebra(2)
        kk = field_extension([1, 0, 1])
        bc = base_change(c, kk)
        assert bc.dim == 4 and check_coring(bc).ok
        triv = base_change(c, rationals())
        assert triv.dim == c.dim and triv.comult == c.comult

    @given(small_names, small_names)
    def test_tensor_closure(self, n1, n2):
        c, d = SMALL[n1](), SMALL[n2]()
        assume(c.dim * d.dim <= 16)
        assert check_coring(tensor_coring(c, d)).ok

    @given(small_names)
    def test_opposite_closure(self, name):
        assert check_coring(opposite_coring(SMALL[name]())).ok


class TestCoseparability:
    def test_comatrix_half_weighted_cointegral(self):
        c = comatrix_coalgebra(2)
        gamma = [QQ(0)] * 16
        for a in range(2):
            for b in range(2):
                for cc in range(2):
                    for d in range(2):
                        if b == cc and a == d:
                            gamma[(a * 2 + b) * 4 + (cc * 2 + d)] = Fraction(1, 2)
        g = Matrix.from_rows([gamma])
        assert c.pres2.dim == 16
        assert check_cointegral(c, g).ok
        assert (g @ c.comult) == c.counit
        # a wrong weight fails γΔ = ε only
        rep = check_cointegral(c, g.scale(2))
        assert rep.identities() == {"gamma_delta_eq_eps"}

    def test_trivial_coring_is_coseparable(self):
        for a in (dual_numbers(), upper_triangular(2), matrix_algebra(2)):
            w = coseparability(trivial_coring(a))
            assert w is not None and w.report.ok

    def test_dual_of_dual_numbers_is_not(self):
        assert coseparability(dual_coalgebra(dual_numbers())) is None

    def test_sweedler_dual_numbers_explicit_cointegral(self):
        # γ(u⊗v⊗w) = u E(v) w with E(a + bx) = a, on (A⊗A)⊗_A(A⊗A) ≅ A⊗A⊗A
        a = dual_numbers()
        c = sweedler_coring(a, [[1, 0]])
        cols = []
        for q in range(c.pres2.dim):
            x, y = c.pres2.representative(q)
            i, j = divmod(x, 2)
            k, l = divmod(y, 2)
            e = a.product(j, k).get(0, 0)
            cols.append({t: e * v for t, v in a.product(i, l).items()})
        g = Matrix.from_sparse_cols(cols, 2)
        assert check_cointegral(c, g).ok

    @pytest.mark.parametrize("name", sorted(SMALL))
    def test_verdicts_and_witness(self, name):
        c = SMALL[name]()
        w = coseparability(c)
        assert (w is not None) == VERDICTS[name][0]
        if w is not None:
            assert c.counit @ w.pi == w.gamma
            assert w.pi @ c.comult == Matrix.identity(c.dim)
            assert check_cointegral(c, w.gamma).ok

    @given(st.sampled_from(["comatrix-2", "grouplike-3", "dual-dual", "dual-T2"]), st.data())
    def test_invariant_under_reindexing(self, name, data):
        c = SMALL[name]()
        p = data.draw(matrices(c.dim, c.dim, c.dim, c.dim))
        assume(p.rank() == c.dim)
        c2 = reindexed_coalgebra(c, p)
        assert check_coring(c2).ok
        assert (coseparability(c2) is None) == (coseparability(c) is None)
        assert is_semisimple_coring(c2).semisimple == is_semisimple_coring(c).semisimple


class TestDuals:
    def test_trivial_coring_dual_is_opposite(self):
        a = upper_triangular(2)
        for side in (LEFT, RIGHT):
            ring = dual_ring(trivial_coring(a), side)
            assert ring.report.ok and ring.dim == 3
            assert dual_radical(trivial_coring(a), side).dim == 1

    def test_comatrix_dual_is_matrix_algebra(self):
        ring = dual_ring(comatrix_coalgebra(2), RIGHT)
        assert ring.dim == 4 and is_semisimple(ring.algebra)
        # C* of the comatrix coalgebra is central simple: its centre is one-dimensional
        centre = [i for i in range(4)
                  if all(ring.algebra.product(i, j) == ring.algebra.product(j, i) for j in range(4))]
        assert separability_idempotent(ring.algebra) is not None
        assert len(centre) <= 1

    def test_grouplike_dual_is_product(self):
        ring = dual_ring(grouplike_coalgebra(2), RIGHT)
        assert ring.dim == 2 and ring.algebra.product(0, 1) == {}

    def test_generated_subbicomodule(self):
        c = trivial_coring(product_algebra(2))
        assert generated_subbicomodule(c, [[1, 0]]).dim == 1
        cm = comatrix_coalgebra(2)
        assert generated_subbicomodule(cm, [[1, 0, 0, 0]]).dim == 4
        assert generated_subbicomodule(cm, [[int(i == j) for i in range(4)] for j in range(4)]).dim == 4

    def test_restrict_to_grouplike_component(self):
        c = grouplike_coalgebra(3)
        sub = generated_subbicomodule(c, [[1, 0, 0]])
        r = restrict_coring(c, sub)
        assert r is not None and r.dim == 1 and check_coring(r).ok

    def test_coring_maps(self):
        c = comatrix_coalgebra(2)
        ident = Matrix.identity(4)
        assert check_coring_hom(ident, c, c).ok
        mat, rep = dual_hom(ident, c, c)
        assert rep.ok and mat == Matrix.identity(4)
        eps, triv = counit_as_coring_map(c)
        assert check_coring_hom(eps, c, triv).ok
        mat, rep = dual_hom(eps, c, triv)
        assert rep.ok and mat == dual_ring(c, RIGHT).embedding
        assert not check_coring_hom(ident.scale(2), c, c).ok


class TestSemisimplicity:
    @pytest.mark.parametrize("name", sorted(SMALL))
    def test_verdicts(self, name):
        assert is_semisimple_coring(SMALL[name]()).semisimple == VERDICTS[name][1]

    def test_evidence(self):
        v = is_semisimple_coring(trivial_coring(dual_numbers()))
        assert v.left_projective and v.right_projective
        assert v.left_dual_radical == 1 and v.right_dual_radical == 1


class TestBaseChange:
    def test_psi_rationals_is_identity(self):
        c = comatrix_coalgebra(2)
        cert = psi(c, rationals())
        assert cert.report.ok and cert.psi == Matrix.identity(4)

    def test_grouplike_dimension(self):
        cert = psi(grouplike_coalgebra(2), field_extension([1, 0, 1]))
        assert cert.psi.shape == (4, 4) and cert.report.ok

    @pytest.mark.parametrize("poly", [[1, 0, 1], [1, 0, -2], [1, 0, 0, -2]])
    def test_comatrix_psi(self, poly):
        cert = psi(comatrix_coalgebra(2), field_extension(poly))
        assert cert.report.ok
        n = cert.psi.nrows
        assert cert.phi @ cert.psi == Matrix.identity(n)
        assert cert.psi @ cert.phi == Matrix.identity(n)

    def test_nontrivial_base(self):
        cert = psi(trivial_coring(upper_triangular(2)), field_extension([1, 0, 1]))
        assert cert.report.ok
