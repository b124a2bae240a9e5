"""Explicit trivectors with prescribed geometry, and the affine system for phi."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .linalg import Subspace, random_subspace, solve_affine
from .trivector import Trivector, in_Y, random_trivector, singular_at

N = 10


@dataclass
class Configuration:
    which: str
    sigma: Trivector
    V4: Subspace
    V5: Subspace
    V7: Subspace
    V4p: Subspace
    V5p: Subspace
    V7p: Subspace


# (V7, V4, V7', V4', sigma|V7, sigma|V7') in 1-based coordinates
_LAYOUT = {
    "A": (range(1, 8), range(2, 6), range(4, 11), range(6, 10), (1, 6, 7), (4, 5, 10)),
    "B": (range(1, 8), range(1, 5), range(4, 11), (4, 8, 9, 10), (5, 6, 7), (5, 6, 7)),
}


def _prescribed(support: Sequence[int], triple: tuple[int, int, int]) -> dict:
    idx = [i - 1 for i in support]
    t = tuple(sorted(i - 1 for i in triple))
    return {c: (1 if c == t else 0) for c in combinations(idx, 3)}


def build_configuration(which: str, F, seed: int = 0) -> Configuration:
    """Trivector whose Y contains two lines C, C' in situation A or B.

    sigma restricted to V7 and to V7' is the prescribed decomposable form; all
    other coordinates are drawn from ``seed``.  V5 = V4 + <v> and V5' = V4' + <v'>
    with v in V7, v' in V7' random, resampled until V5, V5' are transverse (A)
    or meet exactly in <e4> (B).
    """
    which = which.upper()
    if which not in _LAYOUT:
        raise ValueError("configuration must be 'A' or 'B'")
    rng = random.Random(seed)
    v7, v4, v7p, v4p, t, tp = _LAYOUT[which]
    fixed = _prescribed(v7, t)
    for k, val in _prescribed(v7p, tp).items():
        if fixed.get(k, val) != val:
            raise AssertionError("prescribed forms disagree on V7 and V7'")
        fixed[k] = val
    sigma = random_trivector(F, rng, N, fixed)
    V7, V4 = Subspace.coordinate(F, v7), Subspace.coordinate(F, v4)
    V7p, V4p = Subspace.coordinate(F, v7p), Subspace.coordinate(F, v4p)
    e4 = Subspace.coordinate(F, [4])
    while True:
        V5 = V4 + random_subspace(F, rng, 1, N, inside=V7)
        V5p = V4p + random_subspace(F, rng, 1, N, inside=V7p)
        if V5.dim != 5 or V5p.dim != 5:
            continue
        meet = V5 & V5p
        if which == "A":
            ok = (meet.dim == 0 and (V5 & V7p).dim == 2 and (V5p & V7).dim == 2)
        else:
            ok = meet == e4 and ((V5 & V7p) + (V5p & V7)).dim == 3
        if ok:
            break
    return Configuration(which, sigma, V4, V5, V7, V4p, V5p, V7p)


def z_intersect(cfg: Configuration) -> list[Subspace]:
    """3-spaces W3 in V7 & V7' with dim(W3 & V5) >= 2 and dim(W3 & V5') >= 2."""
    a = cfg.V5 & cfg.V7p
    b = cfg.V5p & cfg.V7
    if a.dim < 2 or b.dim < 2:
        return []
    if a.dim > 2 or b.dim > 2:
        raise ValueError("traces of dimension > 2: the intersection is positive-dimensional")
    s = a + b
    if s.dim == 4:
        return []
    if s.dim == 3:
        return [s]
    raise ValueError("traces coincide: the intersection is positive-dimensional")


# ---------------------------------------------------------------------------
# trivectors singular at W, with two prescribed points of the K3 surface


@dataclass
class CompanionInstance:
    sigma: Trivector
    W: Subspace
    Wp: Subspace
    Wpp: Subspace

    @property
    def W6(self) -> Subspace:
        return self.Wp + self.Wpp


def singular_trivector(F, rng, W_idx=(0, 1, 2), n: int = N,
                       vanish_pairs=(), vanish_triples=()) -> Trivector:
    """Random sigma with sigma(W, W, .) = 0 for W = <e_i : i in W_idx> (0-based).

    ``vanish_pairs`` lists (A, B) index sets with sigma(W, A, A') = 0 for
    A-pairs inside B; ``vanish_triples`` lists index sets on which sigma
    vanishes identically.  Both are in the coordinates of V.
    """
    Wset = set(W_idx)
    fixed = {}
    for t in combinations(range(n), 3):
        if len(Wset.intersection(t)) >= 2:
            fixed[t] = 0
    for block in vanish_pairs:
        bset = set(block)
        for t in combinations(range(n), 3):
            inW = [i for i in t if i in Wset]
            if len(inW) == 1 and all(i in bset for i in t if i not in Wset):
                fixed[t] = 0
    for block in vanish_triples:
        for t in combinations(sorted(block), 3):
            fixed[t] = 0
    return random_trivector(F, rng, n, fixed)


def companion_instance(F, seed: int, vanish_on_sum: bool = True,
                       generic: bool = True) -> CompanionInstance:
    """sigma singular at W = <e1,e2,e3> with W' = <e4,e5,e6>, W'' = <e7,e8,e9>
    in the K3 surface S, and (if ``vanish_on_sum``) sigma vanishing on W' + W''.

    With ``generic`` the draw is repeated until beta_{W',W''} and
    beta_{W'',W'} are invertible, i.e. the pair of points avoids the divisor
    where the affine system degenerates.  The coordinates are finally moved by
    a random change of basis of V, so nothing is aligned with the standard basis.
    """
    rng = random.Random(seed)
    std = lambda idx: Subspace.coordinate(F, [i + 1 for i in idx], N)
    W, Wp, Wpp = std((0, 1, 2)), std((3, 4, 5)), std((6, 7, 8))
    while True:
        base = singular_trivector(F, rng, (0, 1, 2), N,
                                  vanish_pairs=[(3, 4, 5), (6, 7, 8)],
                                  vanish_triples=[range(3, 9)] if vanish_on_sum
                                  else [range(3, 6), range(6, 9)])
        if not generic or (_beta_invertible(base, W, Wp, Wpp)
                           and _beta_invertible(base, W, Wpp, Wp)):
            break
    g = _random_invertible(F, rng, N)
    sigma = _transform(base, g, F)
    # a vector x in new coordinates corresponds to g x in the old ones,
    # so subspaces move by g^{-1}
    ginv = _inverse(g, F)
    cols = lambda idx: Subspace(F, [[ginv[r][c] for r in range(N)] for c in idx], N)
    return CompanionInstance(sigma, cols((0, 1, 2)), cols((3, 4, 5)), cols((6, 7, 8)))


def _beta_invertible(sigma, W, A, B) -> bool:
    from .linalg import rank
    return rank(beta_matrix(sigma, W, A, B)[0], sigma.F) == 9


def _random_invertible(F, rng, n: int) -> list[list]:
    while True:
        m = [[F.random(rng) for _ in range(n)] for _ in range(n)]
        if Subspace(F, m, n).dim == n:
            return m


def _inverse(m, F) -> list[list]:
    from .linalg import rref
    n = len(m)
    aug = [list(r) + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(m)]
    red, piv = rref(aug, F)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def _transform(sigma: Trivector, g, F) -> Trivector:
    """(g^* sigma)(u, v, w) = sigma(g u, g v, g w)."""
    n = sigma.n
    cols = [[g[r][c] for r in range(n)] for c in range(n)]
    return Trivector(F, n, {t: sigma(cols[t[0]], cols[t[1]], cols[t[2]])
                            for t in combinations(range(n), 3)})


# ---------------------------------------------------------------------------
# the affine system for W6 = graph(u), u : W' + W'' -> W


@dataclass
class PhiResult:
    kind: str  # "unique", "family" or "none"
    W6: Subspace | None = None
    family_dim: int = 0
    u: list | None = None


def _check_phi_pre(sigma, W, Wp, Wpp) -> None:
    for name, s in (("W", W), ("W'", Wp), ("W''", Wpp)):
        if s.dim != 3:
            raise ValueError(f"{name} must be 3-dimensional")
    if not singular_at(sigma, W):
        raise ValueError("precondition failed: sigma is not singular at W")
    if not in_Y(sigma, W + Wp):
        raise ValueError("precondition failed: W + W' is not in Y_sigma")
    if not in_Y(sigma, W + Wpp):
        raise ValueError("precondition failed: W + W'' is not in Y_sigma")
    if (W + Wp + Wpp).dim != 9:
        raise ValueError("precondition failed: W, W', W'' are not transverse")


def phi_system(sigma: Trivector, W: Subspace, Wp: Subspace, Wpp: Subspace):
    """Matrix, constant term and row/column labels of the affine map.

    Unknowns u[(m, s)] with u(x_s) = sum_m u[(m, s)] w_m, where x_0..x_2 is
    the basis of W' and x_3..x_5 that of W''.  Equations are indexed by
    ('p', i, j, q): sigma on a'_i ^ a'_j ^ a''_q, and ('pp', i, q, r):
    sigma on a'_i ^ a''_q ^ a''_r.
    """
    F = sigma.F
    w = W.basis
    x = list(Wp.basis) + list(Wpp.basis)
    cols = [(m, s) for s in range(6) for m in range(3)]
    triples = ([("p", (i, j, 3 + q)) for i, j in combinations(range(3), 2) for q in range(3)]
               + [("pp", (i, 3 + q, 3 + r)) for i in range(3) for q, r in combinations(range(3), 2)])
    rows, const = [], []
    for _, (s1, s2, s3) in triples:
        const.append(sigma(x[s1], x[s2], x[s3]))
        row = []
        for m, s in cols:
            val = 0
            if s == s1:
                val += sigma(w[m], x[s2], x[s3])
            if s == s2:
                val += sigma(x[s1], w[m], x[s3])
            if s == s3:
                val += sigma(x[s1], x[s2], w[m])
            row.append(F(val))
        rows.append(row)
    labels = [(tag,) + t for tag, t in triples]
    return rows, const, labels, cols


def phi_solve(sigma: Trivector, W: Subspace, Wp: Subspace, Wpp: Subspace) -> PhiResult:
    """The W6 in Y_sigma, transverse to W, with p(W6) = W' + W''."""
    _check_phi_pre(sigma, W, Wp, Wpp)
    F = sigma.F
    rows, const, _, cols = phi_system(sigma, W, Wp, Wpp)
    sol, ker = solve_affine(rows, [F(-c) for c in const], F)
    if sol is None:
        return PhiResult("none")
    if ker:
        return PhiResult("family", family_dim=len(ker), u=sol)
    x = list(Wp.basis) + list(Wpp.basis)
    graph = []
    for s in range(6):
        v = list(x[s])
        for m in range(3):
            c = sol[cols.index((m, s))]
            if c:
                v = [F(a + c * b) for a, b in zip(v, W.basis[m])]
        graph.append(v)
    W6 = Subspace(F, graph, sigma.n)
    if not in_Y(sigma, W6):
        raise ArithmeticError("solution of the affine system is not in Y_sigma")
    return PhiResult("unique", W6=W6, u=sol)


def beta_matrix(sigma: Trivector, W: Subspace, A: Subspace, B: Subspace):
    """Linear map Hom(A, B) -> (W (x) wedge^2 A)^*, v -> (Id, v)^* sigma.

    Columns (q, i): v(a_i) = b_q.  Rows (m, (i, j)) for i < j: the value on
    w_m (x) a_i ^ a_j, namely sigma(w_m, v a_i, a_j) + sigma(w_m, a_i, v a_j).
    """
    F = sigma.F
    w, a, b = W.basis, A.basis, B.basis
    cols = [(q, i) for i in range(3) for q in range(3)]
    rows_idx = [(m, (i, j)) for m in range(3) for i, j in combinations(range(3), 2)]
    mat = []
    for m, (i, j) in rows_idx:
        row = []
        for q, s in cols:
            val = 0
            if s == i:
                val += sigma(w[m], b[q], a[j])
            if s == j:
                val += sigma(w[m], a[i], b[q])
            row.append(F(val))
        mat.append(row)
    return mat, rows_idx, cols


def _pair_sign(pair: tuple[int, int]) -> tuple[int, int]:
    """Complementary index k of a pair (i, j) in {0,1,2} and the sign of (i, j, k)."""
    k = ({0, 1, 2} - set(pair)).pop()
    i, j = pair
    inversions = (i > j) + (i > k) + (j > k)
    return k, (-1) ** inversions


def transpose_identity(sigma: Trivector, W: Subspace, Wp: Subspace, Wpp: Subspace) -> bool:
    """Check that the linear part of the affine map is the transpose of
    beta_{W',W''} + beta_{W'',W'}, identifying wedge^2 W' with W'^* by the
    volume form (a pair (i, j) goes to sign(i, j, k) a_k^*) and likewise for W''.

    Entry-wise: F[(P, q), (m, s)] = e(P) e(P_s) B[(m, P_s), (q, k_P)] with P_s the
    pair complementary to s and k_P the index complementary to P.
    """
    F = sigma.F
    rows, _, labels, cols = phi_system(sigma, W, Wp, Wpp)
    b1, r1, c1 = beta_matrix(sigma, W, Wp, Wpp)
    b2, r2, c2 = beta_matrix(sigma, W, Wpp, Wp)
    for ri, lab in enumerate(labels):
        if lab[0] == "p":
            pair, q, off, bm, rr, cc = (lab[1], lab[2]), lab[3] - 3, 0, b1, r1, c1
        else:
            pair, q, off, bm, rr, cc = (lab[2] - 3, lab[3] - 3), lab[1], 3, b2, r2, c2
        k, eps = _pair_sign(pair)
        for ci, (m, s) in enumerate(cols):
            f = rows[ri][ci]
            local = s - off
            if not 0 <= local < 3:
                if f:
                    return False
                continue
            ps = tuple(sorted({0, 1, 2} - {local}))
            eps_s = _pair_sign(ps)[1]
            bval = bm[rr.index((m, ps))][cc.index((q, k))]
            if F(f - eps * eps_s * bval) != 0:
                return False
    return True
