"""Standalone oracle for the catalog's coseparability and semisimplicity verdicts.

It reads each coring only through its JSON export and uses sympy's exact
DomainMatrix arithmetic, with formulations that differ from the library's:

* coseparability: solve for γ on C ⊗_k C (not the quotient), imposing the
  balancing relations, A-bilinearity, γΔ = ε and the compatibility identity
  pointwise on pure tensors;
* semisimplicity: both duals by brute-force nullspaces, their structure
  constants from the convolution product, the radical from Dickson's trace
  form of the regular representation, and projectivity of C on each side by
  solving for an A-linear section of A ⊗_k C -> C.

Usage: python3 tools/oracle.py [glob]   (exit status 1 on any disagreement)
"""
from __future__ import annotations

import sys
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from coring_lab import catalog


def q(v) -> Fraction:
    return Fraction(v) if isinstance(v, int) else Fraction(str(v))


class Raw:
    """Plain-Fraction view of a coring JSON export."""

    def __init__(self, data: dict):
        base = data["base"]
        self.a = base["dim"]
        self.mult = [[[q(x) for x in base["mult"][i][j]] for j in range(self.a)] for i in range(self.a)]
        self.unit = [q(x) for x in base["unit"]]
        car = data["carrier"]
        self.n = car["dim"]
        self.L = [[[q(x) for x in row] for row in m] for m in car["left_action"]]
        self.R = [[[q(x) for x in row] for row in m] for m in car["right_action"]]
        self.delta = [[(k, l, q(c)) for k, l, c in terms] for terms in data["comult"]["lift"]]
        self.eps = [[q(x) for x in row] for row in data["counit"]]

    def times(self, alpha, beta):
        out = [Fraction(0)] * self.a
        for i, x in enumerate(alpha):
            if x:
                for j, y in enumerate(beta):
                    if y:
                        for k, z in enumerate(self.mult[i][j]):
                            out[k] += x * y * z
        return out

    def act(self, mats, alpha, x):
        """Σ_b alpha_b mats[b] applied to the basis vector x."""
        out = [Fraction(0)] * self.n
        for b, w in enumerate(alpha):
            if w:
                for y in range(self.n):
                    out[y] += w * mats[b][y][x]
        return out


def _sparse(rows: list[dict], ncols: int) -> DomainMatrix:
    data = {}
    for i, r in enumerate(rows):
        entries = {j: QQ(Fraction(v).numerator, Fraction(v).denominator) for j, v in r.items() if v}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (max(len(rows), 1), ncols), QQ)


def rank(rows: list[dict], ncols: int) -> int:
    m = _sparse(rows, ncols)
    return m.rank() if m.rep else 0


def solvable(rows: list[dict], rhs: list, nvars: int) -> bool:
    aug = [dict(r) for r in rows]
    for r, b in zip(aug, rhs):
        if b:
            r[nvars] = Fraction(b)
    return rank(rows, nvars) == rank(aug, nvars + 1)


def nullspace(rows: list[dict], nvars: int) -> list[list[Fraction]]:
    ns = _sparse(rows, nvars).to_dense().nullspace().to_Matrix()
    return [[Fraction(int(x.p), int(x.q)) for x in ns.row(i)] for i in range(ns.rows)]


def add(row: dict, j, v):
    if v:
        row[j] = row.get(j, 0) + v


def coseparable(c: Raw) -> bool:
    a, n = c.a, c.n
    var = lambda b, x, y: b * n * n + x * n + y
    nv = a * n * n
    rows, rhs = [], []

    def emit(eqs: dict):
        for key in sorted(eqs):
            r = {j: v for j, v in eqs[key].items() if v}
            if r:
                rows.append(r)
                rhs.append(0)

    for x in range(n):
        for y in range(n):
            for b in range(a):
                # balancing: γ(x·e_b ⊗ y) = γ(x ⊗ e_b·y)
                eqs: dict = {}
                for z in range(n):
                    for t in range(a):
                        add(eqs.setdefault(t, {}), var(t, z, y), c.R[b][z][x])
                        add(eqs.setdefault(t, {}), var(t, x, z), -c.L[b][z][y])
                emit(eqs)
                # bilinearity: γ(e_b·x ⊗ y) = e_b γ(x⊗y), γ(x ⊗ y·e_b) = γ(x⊗y) e_b
                left: dict = {}
                right: dict = {}
                for z in range(n):
                    for t in range(a):
                        add(left.setdefault(t, {}), var(t, z, y), c.L[b][z][x])
                        add(right.setdefault(t, {}), var(t, x, z), c.R[b][z][y])
                for s in range(a):
                    eb = [Fraction(int(u == b)) for u in range(a)]
                    es = [Fraction(int(u == s)) for u in range(a)]
                    for t, v in enumerate(c.times(eb, es)):
                        add(left.setdefault(t, {}), var(s, x, y), -v)
                    for t, v in enumerate(c.times(es, eb)):
                        add(right.setdefault(t, {}), var(s, x, y), -v)
                emit(left)
                emit(right)
    # γΔ = ε
    for x in range(n):
        for t in range(a):
            r: dict = {}
            for k, l, v in c.delta[x]:
                add(r, var(t, k, l), v)
            rows.append(r)
            rhs.append(c.eps[t][x])
    # Σ e_k·γ(l⊗y) = Σ γ(x⊗k')·e_l'  on every pure tensor x⊗y
    for x in range(n):
        for y in range(n):
            eqs: dict = {}
            for k, l, v in c.delta[x]:
                for s in range(a):
                    for z, w in enumerate(c.act(c.R, [int(u == s) for u in range(a)], k)):
                        add(eqs.setdefault(z, {}), var(s, l, y), v * w)
            for k, l, v in c.delta[y]:
                for s in range(a):
                    for z, w in enumerate(c.act(c.L, [int(u == s) for u in range(a)], l)):
                        add(eqs.setdefault(z, {}), var(s, x, k), -v * w)
            emit(eqs)
    return solvable(rows, rhs, nv)


def projective(c: Raw, side: str) -> bool:
    """Is C projective as a left (or right) A-module?"""
    a, n = c.a, c.n
    acts = c.L if side == "left" else c.R
    mult = (lambda i, j: c.mult[i][j]) if side == "left" else (lambda i, j: c.mult[j][i])
    var = lambda i, r, x: (i * n + r) * n + x
    rows, rhs = [], []
    # s(e_b m_x) = (e_b ⊗ 1) s(m_x)
    for b in range(a):
        for x in range(n):
            eqs: dict = {}
            for y in range(n):
                w = acts[b][y][x]
                if w:
                    for i in range(a):
                        for r in range(n):
                            add(eqs.setdefault((i, r), {}), var(i, r, y), w)
            for i in range(a):
                for t, v in enumerate(mult(b, i)):
                    for r in range(n):
                        add(eqs.setdefault((t, r), {}), var(i, r, x), -v)
            for key in sorted(eqs):
                r = {j: v for j, v in eqs[key].items() if v}
                if r:
                    rows.append(r)
                    rhs.append(0)
    # π s = id with π(e_i ⊗ m_r) = e_i m_r
    for x in range(n):
        for z in range(n):
            r: dict = {}
            for i in range(a):
                for rr in range(n):
                    add(r, var(i, rr, x), acts[i][z][rr])
            rows.append(r)
            rhs.append(int(z == x))
    return solvable(rows, rhs, a * n * n)


def dual_radical_dim(c: Raw, side: str) -> tuple[int, int]:
    """(dim, radical dim) of the left or right dual ring."""
    a, n = c.a, c.n
    acts = c.L if side == "left" else c.R
    rows = []
    for b in range(a):
        eb = [Fraction(int(u == b)) for u in range(a)]
        for x in range(n):
            eqs: dict = {}
            for y in range(n):
                w = acts[b][y][x]
                for t in range(a):
                    add(eqs.setdefault(t, {}), t * n + y, w)
            for s in range(a):
                es = [Fraction(int(u == s)) for u in range(a)]
                prod = c.times(eb, es) if side == "left" else c.times(es, eb)
                for t, v in enumerate(prod):
                    add(eqs.setdefault(t, {}), s * n + x, -v)
            rows.extend({j: v for j, v in eqs[t].items() if v} for t in sorted(eqs))
    basis = nullspace([r for r in rows if r] or [{}], a * n)
    N = len(basis)
    if N == 0:
        return 0, 0
    fmat = [[[f[t * n + x] for x in range(n)] for t in range(a)] for f in basis]

    def apply(f, vec):
        return [sum(f[t][x] * vec[x] for x in range(n)) for t in range(a)]

    def product(f, g):
        out = []
        for x in range(n):
            val = [Fraction(0)] * a
            for k, l, v in c.delta[x]:
                if side == "left":
                    inner = c.act(c.R, apply(g, [int(z == l) for z in range(n)]), k)
                    val = [p + v * w for p, w in zip(val, apply(f, inner))]
                else:
                    inner = c.act(c.L, apply(f, [int(z == k) for z in range(n)]), l)
                    val = [p + v * w for p, w in zip(val, apply(g, inner))]
            out.append(val)
        return [out[x][t] for t in range(a) for x in range(n)]

    # coordinates in the basis: solve B^T y = v
    bt = DomainMatrix([[QQ(basis[i][j].numerator, basis[i][j].denominator) for i in range(N)]
                       for j in range(a * n)], (a * n, N), QQ)
    consts = []
    for u in range(N):
        row = []
        for w in range(N):
            v = product(fmat[u], fmat[w])
            rhs = DomainMatrix([[QQ(x.numerator, x.denominator)] for x in v], (a * n, 1), QQ)
            sol = bt.lu_solve(rhs).to_Matrix()
            row.append([Fraction(int(sol[i].p), int(sol[i].q)) for i in range(N)])
        consts.append(row)
    tr = [sum(consts[w][z][z] for z in range(N)) for w in range(N)]
    form = [{v: sum(consts[u][v][w] * tr[w] for w in range(N)) for v in range(N)} for u in range(N)]
    return N, N - rank(form, N)


def semisimple(c: Raw) -> bool:
    if not (projective(c, "left") and projective(c, "right")):
        return False
    return dual_radical_dim(c, "left")[1] == 0 and dual_radical_dim(c, "right")[1] == 0


def main(argv) -> int:
    pattern = argv[1] if len(argv) > 1 else None
    bad = 0
    for e in catalog.entries("coring", pattern):
        raw = Raw(e.build().to_json())
        got = {"coseparable": coseparable(raw), "semisimple": semisimple(raw)}
        exp = {k: e.expected[k].value for k in got}
        flag = "ok" if got == exp else "MISMATCH"
        bad += got != exp
        print(f"{e.id:45s} cosep={got['coseparable']!s:5s} semisimple={got['semisimple']!s:5s} {flag}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
