"""Formal bundle expressions on a Grassmannian G(k, n).

A :class:`BundleExpr` is a small expression tree over the tautological
subbundle ``S`` (rank k), the quotient ``Q`` (rank n - k) and trivial bundles,
closed under dual, direct sum, tensor product, exterior/symmetric powers,
Schur functors and twists by O(d) (O(1) = det S^*).

Two interpretations are provided elsewhere: Chern roots (:func:`roots`, used
by the Chow ring code) and a decomposition into irreducible homogeneous
bundles (in :mod:`hkgrass.bwb`).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping

from .symcore import Partition, lr_multiply, partitions

_OPS = {"sub", "quot", "trivial", "dual", "sum", "tensor", "wedge", "sym",
        "schur", "twist"}


@dataclass(frozen=True)
class BundleExpr:
    op: str
    args: tuple = ()
    param: object = None

    def __post_init__(self):
        if self.op not in _OPS:
            raise ValueError(f"unknown bundle operation {self.op!r}")

    # constructors -----------------------------------------------------
    def dual(self) -> "BundleExpr":
        return BundleExpr("dual", (self,))

    def __add__(self, other: "BundleExpr") -> "BundleExpr":
        return BundleExpr("sum", (self, other))

    def __mul__(self, other: "BundleExpr") -> "BundleExpr":
        return BundleExpr("tensor", (self, other))

    def __rmul__(self, m: int) -> "BundleExpr":
        if not isinstance(m, int) or m < 1:
            raise TypeError("only positive integer multiples of a bundle are supported")
        out = self
        for _ in range(m - 1):
            out = out + self
        return out

    def wedge(self, p: int) -> "BundleExpr":
        return BundleExpr("wedge", (self,), int(p))

    def sym(self, p: int) -> "BundleExpr":
        return BundleExpr("sym", (self,), int(p))

    def schur(self, lam) -> "BundleExpr":
        return BundleExpr("schur", (self,), Partition(lam))

    def twist(self, d: int) -> "BundleExpr":
        return BundleExpr("twist", (self,), int(d))

    # structure --------------------------------------------------------
    def rank(self, k: int, n: int) -> int:
        op, a = self.op, self.args
        if op == "sub":
            return k
        if op == "quot":
            return n - k
        if op == "trivial":
            return self.param
        if op in ("dual", "twist"):
            return a[0].rank(k, n)
        if op == "sum":
            return a[0].rank(k, n) + a[1].rank(k, n)
        if op == "tensor":
            return a[0].rank(k, n) * a[1].rank(k, n)
        r = a[0].rank(k, n)
        if op == "wedge":
            return comb(r, self.param)
        if op == "sym":
            return comb(r + self.param - 1, self.param)
        from .symcore import schur_dimension
        return schur_dimension(self.param, r)

    def __str__(self) -> str:
        op, a = self.op, self.args
        if op == "sub":
            return "S"
        if op == "quot":
            return "Q"
        if op == "trivial":
            return f"O^{self.param}" if self.param != 1 else "O"
        if op == "dual":
            return f"({a[0]})^*"
        if op == "sum":
            return f"({a[0]} + {a[1]})"
        if op == "tensor":
            return f"({a[0]} x {a[1]})"
        if op == "wedge":
            return f"L^{self.param}({a[0]})"
        if op == "sym":
            return f"Sym^{self.param}({a[0]})"
        if op == "schur":
            return f"S_{tuple(self.param)}({a[0]})"
        return f"{a[0]}({self.param})"


def taut_sub() -> BundleExpr:
    return BundleExpr("sub")


def taut_quot() -> BundleExpr:
    return BundleExpr("quot")


def trivial(r: int = 1) -> BundleExpr:
    return BundleExpr("trivial", (), int(r))


def line(d: int) -> BundleExpr:
    """O(d), with O(1) the Pluecker line bundle det(S^*)."""
    return trivial(1).twist(d)


def taut_dual() -> BundleExpr:
    """E = S^*, the dual of the tautological subbundle."""
    return taut_sub().dual()


def tangent() -> BundleExpr:
    return taut_dual() * taut_quot()


def cotangent() -> BundleExpr:
    return tangent().dual()


# ---------------------------------------------------------------------------
# Chern roots (virtual multisets of linear forms in the roots x_1..x_k of E)

Roots = dict  # {tuple of k ints: multiplicity}


def _clean(r: Mapping) -> Roots:
    return {w: m for w, m in r.items() if m}


def _add(a: Mapping, b: Mapping, sign: int = 1) -> Roots:
    out = dict(a)
    for w, m in b.items():
        out[w] = out.get(w, 0) + sign * m
    return _clean(out)


def _tensor(a: Mapping, b: Mapping) -> Roots:
    out: Roots = {}
    for wa, ma in a.items():
        for wb, mb in b.items():
            w = tuple(x + y for x, y in zip(wa, wb))
            out[w] = out.get(w, 0) + ma * mb
    return _clean(out)


def _power_series(r: Mapping, p: int, exterior: bool) -> Roots:
    """p-th exterior or symmetric power of a genuine (nonnegative) multiset."""
    k = len(next(iter(r))) if r else 0
    states = {(0, (0,) * k): 1}
    for w, m in r.items():
        new: dict = {}
        for (cnt, vec), mult in states.items():
            hi = min(m, p - cnt) if exterior else p - cnt
            for s in range(hi + 1):
                ways = comb(m, s) if exterior else comb(m + s - 1, s)
                key = (cnt + s, tuple(a + s * b for a, b in zip(vec, w)))
                new[key] = new.get(key, 0) + mult * ways
        states = new
    return _clean({vec: mult for (cnt, vec), mult in states.items() if cnt == p})


def _split(r: Mapping) -> tuple[Roots, Roots]:
    pos = {w: m for w, m in r.items() if m > 0}
    neg = {w: -m for w, m in r.items() if m < 0}
    return pos, neg


def _wedge(r: Mapping, p: int, k: int) -> Roots:
    # lambda_t(A - B) = lambda_t(A) / lambda_t(B) = lambda_t(A) * sum (-1)^j Sym^j(B) t^j
    pos, neg = _split(r)
    zero = (0,) * k
    out: Roots = {}
    for j in range(p + 1):
        a = _power_series(pos, p - j, True) if pos else ({zero: 1} if p == j else {})
        b = _power_series(neg, j, False) if neg else ({zero: 1} if j == 0 else {})
        out = _add(out, _tensor(a, b), (-1) ** j)
    return out


def _sym(r: Mapping, p: int, k: int) -> Roots:
    pos, neg = _split(r)
    zero = (0,) * k
    out: Roots = {}
    for j in range(p + 1):
        a = _power_series(pos, p - j, False) if pos else ({zero: 1} if p == j else {})
        b = _power_series(neg, j, True) if neg else ({zero: 1} if j == 0 else {})
        out = _add(out, _tensor(a, b), (-1) ** j)
    return out


def _schur(r: Mapping, lam: Partition, k: int) -> Roots:
    # Jacobi-Trudi: S_lam = det(Sym^{lam_i - i + j})
    from itertools import permutations
    from .symcore import _perm_sign
    ell = len(lam)
    zero = (0,) * k
    cache: dict[int, Roots] = {}

    def h(m):
        if m < 0:
            return {}
        if m not in cache:
            cache[m] = _sym(r, m, k) if m else {zero: 1}
        return cache[m]

    out: Roots = {}
    for perm in permutations(range(ell)):
        term = {zero: 1}
        for i in range(ell):
            term = _tensor(term, h(lam[i] - i + perm[i]))
            if not term:
                break
        if term:
            out = _add(out, term, _perm_sign(perm))
    return out


def roots(b: BundleExpr, k: int, n: int) -> Roots:
    """Virtual Chern-root multiset of ``b`` in terms of the roots of E = S^*."""
    op, a = b.op, b.args
    zero = (0,) * k
    if op == "sub":
        return {tuple(-int(i == j) for j in range(k)): 1 for i in range(k)}
    if op == "quot":
        # Q = V - S in K-theory
        return _add({zero: n}, roots(taut_sub(), k, n), -1)
    if op == "trivial":
        return {zero: b.param} if b.param else {}
    if op == "dual":
        return {tuple(-x for x in w): m for w, m in roots(a[0], k, n).items()}
    if op == "twist":
        d = b.param
        return {tuple(x + d for x in w): m for w, m in roots(a[0], k, n).items()}
    if op == "sum":
        return _add(roots(a[0], k, n), roots(a[1], k, n))
    if op == "tensor":
        return _tensor(roots(a[0], k, n), roots(a[1], k, n))
    inner = roots(a[0], k, n)
    if op == "wedge":
        return _wedge(inner, b.param, k)
    if op == "sym":
        return _sym(inner, b.param, k)
    return _schur(inner, b.param, k)


def virtual_rank(r: Mapping) -> int:
    return sum(r.values())


def schur_of_sum_terms(lam: Partition):
    """Pairs (mu, nu, c) with S_lam(A + B) = sum c * S_mu(A) (x) S_nu(B)."""
    out = []
    for size in range(lam.weight + 1):
        for mu in partitions(size):
            if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
                continue
            for nu in partitions(lam.weight - size):
                c = lr_multiply(mu, nu)[lam]
                if c:
                    out.append((mu, nu, c))
    return out
