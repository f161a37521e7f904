"""Coseparability: cointegrals γ and bicolinear splittings π of Δ.

Both characterizations are solved as exact linear systems over the quotient
coordinates of C ⊗_A C.  For a basis element q of C ⊗_A C with coset
representative e_x ⊗ e_y:

    (C⊗γ)(Δ⊗C)(q) = Σ c · e_k γ(x_l ⊗ y)      over Δ(e_x) = Σ c e_k ⊗ e_l
    (γ⊗C)(C⊗Δ)(q) = Σ c · γ(x ⊗ y_k) e_l      over Δ(e_y) = Σ c e_k ⊗ e_l

and similarly for π, whose colinearity identities live in C ⊗_A C.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bimodule import sparse_add
from .coring import Coring
from .duals import InconsistencyError
from .exactlin import Matrix, solve_sparse
from .report import Report


@dataclass
class Cointegral:
    gamma: Matrix          # dim A x dim(C⊗_A C)
    pi: Matrix             # dim C x dim(C⊗_A C), equal to (C⊗γ)(Δ⊗C)
    pi_solution: Matrix    # canonical solution of the π-system on its own
    report: Report

    def to_json(self):
        return {"gamma": self.gamma.to_json(), "pi": self.pi.to_json(),
                "pi_solution": self.pi_solution.to_json(), "report": self.report.to_json()}


def _pair_index(c: Coring, x: int, y: int) -> dict:
    """Quotient coordinates of e_x ⊗ e_y."""
    return c.pres2.proj_cols[x * c.dim + y]


def _bimodule_rows(c: Coring, nrows_out: int, out_left, out_right, var):
    """Rows expressing h ∘ act_q(b) = act_out(b) ∘ h for an unknown h: C⊗_A C -> OUT.

    ``out_left[b][i]`` / ``out_right[b][i]`` are sparse columns of the action on
    the codomain; ``var(i, r)`` indexes the unknown h[i, r].
    """
    q = c.pres2.quotient
    rows = []
    q2 = q.dim
    for acts_q, acts_out in ((q.left_cols, out_left), (q.right_cols, out_right)):
        for b in range(len(acts_q)):
            aq, ao = acts_q[b], acts_out[b]
            for r in range(q2):
                eqs: dict = {}
                # (h act_q)[:, r] = Σ_s act_q[s, r] h[:, s]
                for s, v in aq[r].items():
                    for i in range(nrows_out):
                        sparse_add(eqs.setdefault(i, {}), {var(i, s): v})
                # (act_out h)[:, r] = Σ_j act_out[:, j] h[j, r]
                for j in range(nrows_out):
                    for i, v in ao[j].items():
                        sparse_add(eqs.setdefault(i, {}), {var(j, r): -v})
                rows.extend(e for e in (eqs[i] for i in sorted(eqs)) if e)
    return rows


def _compat_terms_gamma(c: Coring, q: int):
    """Sparse coefficients of both sides of the γ-compatibility at basis q.

    Returns two dicts mapping (output coordinate z, unknown (b, r)) -> coefficient.
    """
    x, y = c.pres2.representative(q)
    rc, lc = c.carrier.right_cols, c.carrier.left_cols
    a = c.base.dim
    lhs: dict = {}
    for k, l, v in c.terms[x]:
        for r, p in _pair_index(c, l, y).items():
            for b in range(a):
                for z, w in rc[b][k].items():
                    key = (z, b, r)
                    lhs[key] = lhs.get(key, 0) + v * p * w
    rhs: dict = {}
    for k, l, v in c.terms[y]:
        for r, p in _pair_index(c, x, k).items():
            for b in range(a):
                for z, w in lc[b][l].items():
                    key = (z, b, r)
                    rhs[key] = rhs.get(key, 0) + v * p * w
    return lhs, rhs


def gamma_system(c: Coring):
    """Rows and right-hand side of the γ-system; unknown γ[b, r] at b*q2 + r."""
    A = c.base
    a, n, q2 = A.dim, c.dim, c.pres2.dim
    var = lambda b, r: b * q2 + r
    lcA = [m.cols_sparse() for m in A.L]
    rcA = [m.cols_sparse() for m in A.R]
    rows = _bimodule_rows(c, a, lcA, rcA, var)
    rhs = [0] * len(rows)
    # γΔ = ε
    comult = c.comult.cols_sparse()
    for x in range(n):
        for b in range(a):
            rows.append({var(b, r): v for r, v in comult[x].items()})
            rhs.append(c.counit[b, x])
    # (C⊗γ)(Δ⊗C) = (γ⊗C)(C⊗Δ)
    for q in range(q2):
        lhs, rhs_terms = _compat_terms_gamma(c, q)
        eqs: dict = {}
        for (z, b, r), v in lhs.items():
            sparse_add(eqs.setdefault(z, {}), {var(b, r): v})
        for (z, b, r), v in rhs_terms.items():
            sparse_add(eqs.setdefault(z, {}), {var(b, r): -v})
        for z in sorted(eqs):
            if eqs[z]:
                rows.append(eqs[z])
                rhs.append(0)
    return rows, rhs, a * q2


def pi_system(c: Coring):
    """Rows and right-hand side of the π-system; unknown π[z, r] at z*q2 + r."""
    C = c.carrier
    n, q2 = c.dim, c.pres2.dim
    var = lambda z, r: z * q2 + r
    rows = _bimodule_rows(c, n, C.left_cols, C.right_cols, var)
    rhs = [0] * len(rows)
    comult = c.comult.cols_sparse()
    # πΔ = id
    for x in range(n):
        for z in range(n):
            rows.append({var(z, r): v for r, v in comult[x].items()})
            rhs.append(1 if z == x else 0)
    # Δπ = (π⊗C)(C⊗Δ) and Δπ = (C⊗π)(Δ⊗C), both valued in C ⊗_A C
    for q in range(q2):
        x, y = c.pres2.representative(q)
        delta_pi: dict = {}
        for z in range(n):
            for s, v in comult[z].items():
                delta_pi[(s, z, q)] = delta_pi.get((s, z, q), 0) + v
        right: dict = {}
        for k, l, v in c.terms[y]:
            for r, p in _pair_index(c, x, k).items():
                for z in range(n):
                    for s, w in _pair_index(c, z, l).items():
                        right[(s, z, r)] = right.get((s, z, r), 0) + v * p * w
        left: dict = {}
        for k, l, v in c.terms[x]:
            for r, p in _pair_index(c, l, y).items():
                for z in range(n):
                    for s, w in _pair_index(c, k, z).items():
                        left[(s, z, r)] = left.get((s, z, r), 0) + v * p * w
        for other in (right, left):
            eqs: dict = {}
            for (s, z, r), v in delta_pi.items():
                sparse_add(eqs.setdefault(s, {}), {var(z, r): v})
            for (s, z, r), v in other.items():
                sparse_add(eqs.setdefault(s, {}), {var(z, r): -v})
            for s in sorted(eqs):
                if eqs[s]:
                    rows.append(eqs[s])
                    rhs.append(0)
    return rows, rhs, n * q2


def pi_from_gamma(c: Coring, gamma: Matrix) -> Matrix:
    """π = (C⊗γ)(Δ⊗C) as a dim C x dim(C⊗_A C) matrix."""
    n, q2 = c.dim, c.pres2.dim
    cols = []
    for q in range(q2):
        lhs, _ = _compat_terms_gamma(c, q)
        col: dict = {}
        for (z, b, r), v in lhs.items():
            g = gamma[b, r]
            if g:
                col[z] = col.get(z, 0) + v * g
        cols.append(col)
    return Matrix.from_sparse_cols(cols, n, c.field)


def _satisfies(rows, rhs, sol: Matrix) -> bool:
    vec = sol.col(0)
    for row, b in zip(rows, rhs):
        if sum((v * vec[j] for j, v in row.items()), 0) != b:
            return False
    return True


def coseparability(c: Coring) -> Cointegral | None:
    """Solve the γ- and π-systems; None iff both are inconsistent.

    The returned γ is the canonical particular solution of its system and
    π = (C⊗γ)(Δ⊗C).  The relations γ = επ, πΔ = id and the π-system
    constraints are verified; disagreement between the two systems raises
    :class:`InconsistencyError`.
    """
    if "cosep" in c._memo:
        return c._memo["cosep"]
    F = c.field
    a, n, q2 = c.base.dim, c.dim, c.pres2.dim
    g_rows, g_rhs, g_n = gamma_system(c)
    p_rows, p_rhs, p_n = pi_system(c)
    g_sol = solve_sparse(g_rows, g_rhs, g_n, F, kernel=False)
    p_sol = solve_sparse(p_rows, p_rhs, p_n, F, kernel=False)
    if (g_sol is None) != (p_sol is None):
        raise InconsistencyError(
            f"{c.name}: γ-system solvable={g_sol is not None}, π-system solvable={p_sol is not None}")
    if g_sol is None:
        c._memo["cosep"] = None
        return None
    gamma = Matrix.from_flat(a, q2, g_sol[0].col(0), F)
    pi_sol = Matrix.from_flat(n, q2, p_sol[0].col(0), F)
    pi = pi_from_gamma(c, gamma)
    rep = Report()
    if c.counit @ pi != gamma:
        rep.add("gamma_is_eps_pi")
    if pi @ c.comult != Matrix.identity(n, F):
        rep.add("pi_splits_comult")
    if not _satisfies(p_rows, p_rhs, Matrix.column(pi.entries(), F)):
        rep.add("pi_bicolinear")
    if not _satisfies(g_rows, g_rhs, Matrix.column((c.counit @ pi_sol).entries(), F)):
        rep.add("eps_pi_solution_is_cointegral")
    if not rep.ok:
        raise InconsistencyError(f"{c.name}: {rep}")
    out = Cointegral(gamma, pi, pi_sol, rep)
    c._memo["cosep"] = out
    return out


def check_cointegral(c: Coring, gamma: Matrix) -> Report:
    """Which cointegral identities a candidate γ violates."""
    rows, rhs, _ = gamma_system(c)
    rep = Report()
    if gamma.shape != (c.base.dim, c.pres2.dim):
        rep.add("shape")
        return rep
    vec = gamma.entries()
    n_bimod = len(_bimodule_rows(c, c.base.dim,
                                 [m.cols_sparse() for m in c.base.L],
                                 [m.cols_sparse() for m in c.base.R],
                                 lambda b, r: b * c.pres2.dim + r))
    n_counit = c.dim * c.base.dim
    for i, (row, b) in enumerate(zip(rows, rhs)):
        if sum((v * vec[j] for j, v in row.items()), 0) != b:
            if i < n_bimod:
                name = "bimodule_map"
            elif i < n_bimod + n_counit:
                name = "gamma_delta_eq_eps"
            else:
                name = "compatibility"
            rep.add(name, (i,))
    return rep
