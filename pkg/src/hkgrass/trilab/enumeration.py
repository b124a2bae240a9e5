"""Exhaustive searches over Grassmannians of prime fields (numpy-vectorized)."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .linalg import Subspace, nullspace
from .trivector import Trivector, in_Y, singular_at


def gaussian_binomial(n: int, k: int, q: int) -> int:
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _rref_patterns(d: int, n: int):
    """Pivot sets with, for each row, the list of its free columns."""
    for piv in itertools.combinations(range(n), d):
        free = [[c for c in range(piv[r] + 1, n) if c not in piv] for r in range(d)]
        yield piv, free


def _rows(piv_col: int, free: list[int], p: int, n: int) -> np.ndarray:
    """All rows with a 1 at ``piv_col`` and arbitrary values on ``free``."""
    count = p ** len(free)
    out = np.zeros((count, n), dtype=np.int64)
    out[:, piv_col] = 1
    if free:
        grid = np.indices((p,) * len(free)).reshape(len(free), -1).T
        out[:, free] = grid
    return out


def all_subspaces(p: int, d: int, n: int):
    """Every d-dimensional subspace of F_p^n as a (d, n) RREF integer matrix."""
    for piv, free in _rref_patterns(d, n):
        blocks = [_rows(piv[r], free[r], p, n) for r in range(d)]
        for combo in itertools.product(*[range(len(b)) for b in blocks]):
            yield np.stack([blocks[r][i] for r, i in enumerate(combo)])


def _forms_on(sigma: Trivector, W: Subspace, U: Subspace) -> np.ndarray:
    """The 2-forms sigma(w_m, ., .) restricted to U, as integer Gram matrices."""
    p = sigma.F.p
    out = np.zeros((W.dim, U.dim, U.dim), dtype=np.int64)
    for m, w in enumerate(W.basis):
        c = sigma.contract(w)
        for a, ua in enumerate(U.basis):
            for b, ub in enumerate(U.basis):
                out[m, a, b] = sum(ua[j] * c[j][k] * ub[k]
                                   for j in range(sigma.n) for k in range(sigma.n)) % p
    return out


def common_isotropic_3spaces(forms: np.ndarray, p: int) -> list[np.ndarray]:
    """3-dimensional subspaces of F_p^6 isotropic for every given 2-form."""
    n = forms.shape[1]
    found = []
    for piv, free in _rref_patterns(3, n):
        R0 = _rows(piv[0], free[0], p, n)
        R1 = _rows(piv[1], free[1], p, n)
        R2 = _rows(piv[2], free[2], p, n)
        for r0 in R0:
            # omega(r0, r) = r0^T f r = (f^T r0) . r
            a = [f.T @ r0 % p for f in forms]
            m1 = np.all([(R1 @ v) % p == 0 for v in a], axis=0)
            m2 = np.all([(R2 @ v) % p == 0 for v in a], axis=0)
            if not m1.any() or not m2.any():
                continue
            S1, S2 = R1[m1], R2[m2]
            ok = np.ones((len(S1), len(S2)), dtype=bool)
            for f in forms:
                ok &= (S1 @ f % p) @ S2.T % p == 0
            for i, j in zip(*np.nonzero(ok)):
                found.append(np.stack([r0, S1[i], S2[j]]))
    return found


@dataclass
class CompanionCount:
    count: int
    companions: list = field(default_factory=list)
    spans_W6: bool | None = None


def count_companions(sigma: Trivector, W: Subspace, W6: Subspace) -> CompanionCount:
    """All F_p-points [W'] of G(3, W6) with sigma(W, wedge^2 W') = 0."""
    F = sigma.F
    if not F.is_finite:
        raise ValueError("companion enumeration needs a finite field")
    if W.dim != 3 or W6.dim != 6:
        raise ValueError("W must be 3-dimensional and W6 6-dimensional")
    if not singular_at(sigma, W):
        raise ValueError("precondition failed: sigma is not singular at W")
    if not in_Y(sigma, W6):
        raise ValueError("precondition failed: W6 is not in Y_sigma")
    if (W & W6).dim:
        raise ValueError("precondition failed: W meets W6")
    p = F.p
    forms = _forms_on(sigma, W, W6)
    basis = np.array(W6.basis, dtype=np.int64)
    comps = []
    for sub in common_isotropic_3spaces(forms, p):
        vecs = (sub @ basis) % p
        comps.append(Subspace(F, vecs.tolist(), sigma.n))
    spans = None
    if len(comps) == 2:
        spans = (comps[0] + comps[1]) == W6
    return CompanionCount(len(comps), comps, spans)


# ---------------------------------------------------------------------------
# singular points of F_sigma


def _contraction_tensor(sigma: Trivector) -> np.ndarray:
    n, p = sigma.n, sigma.F.p
    t = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        e = [0] * n
        e[i] = 1
        t[i] = np.array(sigma.contract(e), dtype=np.int64) % p
    return t


def batched_rank_mod_p(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack of matrices over F_p."""
    A = mats.copy() % p
    N, r, c = A.shape
    rank = np.zeros(N, dtype=np.int64)
    rows = np.arange(r)
    inv = np.array([0] + [pow(x, -1, p) for x in range(1, p)], dtype=np.int64)
    bidx = np.arange(N)
    for col in range(c):
        cand = (A[:, :, col] != 0) & (rows[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(cand, axis=1)
        b = bidx[has]
        pr, rk = piv[has], rank[has]
        tmp = A[b, rk].copy()
        A[b, rk] = A[b, pr]
        A[b, pr] = tmp
        A[b, rk] = A[b, rk] * inv[A[b, rk, col]][:, None] % p
        factors = A[b, :, col].copy()
        factors[np.arange(len(b)), rk] = 0
        A[b] = (A[b] - factors[:, :, None] * A[b, rk][:, None, :]) % p
        rank[has] += 1
    return rank


def projective_points(p: int, n: int) -> np.ndarray:
    """Representatives (first nonzero entry 1) of all points of P^{n-1}(F_p)."""
    out = []
    for lead in range(n):
        rest = n - lead - 1
        block = np.zeros((p ** rest, n), dtype=np.int64)
        block[:, lead] = 1
        if rest:
            block[:, lead + 1:] = np.indices((p,) * rest).reshape(rest, -1).T
        out.append(block)
    return np.concatenate(out)


SCAN_PRIMES = (2, 3)


def scan_cost(p: int, n: int = 10) -> int:
    """Number of projective points visited by the scan."""
    return (p ** n - 1) // (p - 1)


def scan_singular_points(sigma: Trivector, chunk: int = 4096) -> list[Subspace]:
    """All F_p-points [W] of G(3, n) at which F_sigma is singular.

    A singular W lies in the kernel K(w) of Int_w sigma for each w in W, so
    only w with dim K(w) >= 3 are expanded, into the 3-spaces w in W in K(w).
    """
    F = sigma.F
    if not F.is_finite:
        raise ValueError("the singular-point scan needs a finite field")
    p, n = F.p, sigma.n
    if p not in SCAN_PRIMES:
        raise ValueError(
            f"scan over F_{p} would visit {scan_cost(p, n):,} projective points and "
            f"{gaussian_binomial(n, 3, p):,} points of G(3,{n}); only p in {SCAN_PRIMES} "
            "is supported")
    T = _contraction_tensor(sigma)
    pts = projective_points(p, n)
    found: dict = {}
    for start in range(0, len(pts), chunk):
        w = pts[start:start + chunk]
        mats = np.einsum("bi,ijk->bjk", w, T) % p
        ranks = batched_rank_mod_p(mats, p)
        for idx in np.nonzero(ranks <= n - 3)[0]:
            wv = [int(x) for x in w[idx]]
            for W in _three_spaces_through(F, wv, mats[idx].tolist()):
                if W.key() not in found and singular_at(sigma, W):
                    found[W.key()] = W
    return [found[k] for k in sorted(found)]


def _three_spaces_through(F, w: list, form: list[list]):
    n = len(w)
    K = Subspace(F, nullspace(form, F, n), n)
    line = Subspace(F, [w], n)
    # complement of <w> inside K
    comp = []
    cur = line
    for b in K.basis:
        nxt = cur + Subspace(F, [b], n)
        if nxt.dim > cur.dim:
            comp.append(b)
            cur = nxt
    d = len(comp)
    if d < 2:
        return
    for plane in all_subspaces(F.p, 2, d):
        vecs = [[F(sum(int(c) * comp[i][j] for i, c in enumerate(row))) for j in range(n)]
                for row in plane]
        yield Subspace(F, [w] + vecs, n)


def scan_brute_force(sigma: Trivector) -> list[Subspace]:
    """Reference scan over every point of G(3, n); only for small n."""
    F = sigma.F
    out = []
    for sub in all_subspaces(F.p, 3, sigma.n):
        W = Subspace(F, sub.tolist(), sigma.n)
        if singular_at(sigma, W):
            out.append(W)
    return sorted(out, key=lambda s: s.key())
