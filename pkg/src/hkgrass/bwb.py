"""Borel-Weil-Bott on Grassmannians and the Koszul bookkeeping for Y.

An irreducible homogeneous bundle on G(k, n) is named by a weight
``(a | b)`` of length n: ``a`` (k entries, nonincreasing) is the highest
weight of the GL(k) factor acting on E = S^*, ``b`` (n - k entries,
nonincreasing) that of the GL(n-k) factor acting on Q^*.  Thus E is
(1,0,..,0 | 0), S is (0,..,0,-1 | 0), Q^* is (0 | 1,0,..) and Q is
(0 | 0,..,-1); O(d) = det(E)^d is (d,..,d | 0).  With this convention
H^0(O(1)) = wedge^3 V^* has dimension 120 on G(3,10).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping

from . import bundles as bx
from .chow import GrassCtx
from .symcore import (Partition, cauchy_sym, cauchy_wedge, dominant_weights_of,
                      exterior_power_character, lr_multiply,
                      symmetric_power_character, wedge_plethysm, weyl_dimension)

log = logging.getLogger(__name__)


class UnsupportedBundle(ValueError):
    """Raised when a bundle expression cannot be decomposed into irreducibles."""


@dataclass(frozen=True)
class WeightVector:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        for block, name in ((self.a, "first"), (self.b, "second")):
            if any(x < y for x, y in zip(block, block[1:])):
                raise ValueError(f"{name} block {block} is not nonincreasing")

    @classmethod
    def from_entries(cls, entries: Iterable[int], k: int) -> "WeightVector":
        e = tuple(entries)
        return cls(e[:k], e[k:])

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        return len(self.a) + len(self.b)

    @property
    def entries(self) -> tuple[int, ...]:
        return self.a + self.b

    def dual(self) -> "WeightVector":
        return WeightVector(tuple(-x for x in reversed(self.a)),
                            tuple(-x for x in reversed(self.b)))

    def twist(self, d: int) -> "WeightVector":
        return WeightVector(tuple(x + d for x in self.a), self.b)

    def serre(self) -> "WeightVector":
        """Weight of the Serre-dual bundle: dual twisted by the canonical O(-n)."""
        return self.dual().twist(-self.n)

    def rank(self) -> int:
        return weyl_dimension(self.a) * weyl_dimension(self.b)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.a))} | {','.join(map(str, self.b))})"


@dataclass(frozen=True)
class CohomologyReport:
    """Cohomology of an irreducible bundle: zero, or one degree with a dimension."""

    degree: int | None = None
    dimension: int = 0

    @property
    def is_zero(self) -> bool:
        return self.degree is None

    @property
    def euler(self) -> int:
        return 0 if self.is_zero else (-1) ** self.degree * self.dimension

    def __str__(self) -> str:
        return "0" if self.is_zero else f"H^{self.degree} of dim {self.dimension}"


ZERO = CohomologyReport()


@lru_cache(maxsize=1 << 16)
def _bott(entries: tuple[int, ...]) -> CohomologyReport:
    n = len(entries)
    shifted = [e + n - 1 - i for i, e in enumerate(entries)]
    if len(set(shifted)) < n:
        return ZERO
    inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                     if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    dominant = [x - (n - 1 - i) for i, x in enumerate(ordered)]
    return CohomologyReport(inversions, weyl_dimension(dominant))


def bott_resolve(w: WeightVector) -> CohomologyReport:
    return _bott(w.entries)


def euler_polynomial(entries: Iterable[int]) -> Fraction:
    """Weyl's dimension polynomial at an arbitrary weight (= chi of the line bundle
    on the full flag variety)."""
    e = tuple(entries)
    n = len(e)
    out = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            out *= Fraction(e[i] - e[j] + j - i, j - i)
    return out


# ---------------------------------------------------------------------------
# decomposition of bundle expressions into irreducibles

Decomp = dict  # {WeightVector: multiplicity}


def _add_into(out: dict, w, m: int) -> None:
    v = out.get(w, 0) + m
    if v:
        out[w] = v
    else:
        out.pop(w, None)


def _block_product(x: tuple[int, ...], y: tuple[int, ...]) -> list[tuple[tuple[int, ...], int]]:
    r = len(x)
    if r == 0:
        return [((), 1)]
    sx, sy = x[-1], y[-1]
    lam = Partition(v - sx for v in x)
    mu = Partition(v - sy for v in y)
    prod = lr_multiply(lam, mu, max_rows=r)
    return [(tuple(v + sx + sy for v in nu.padded(r)), c) for nu, c in prod.terms.items()]


def tensor_irreducibles(v: WeightVector, w: WeightVector) -> Decomp:
    out: Decomp = {}
    for a, ca in _block_product(v.a, w.a):
        for b, cb in _block_product(v.b, w.b):
            _add_into(out, WeightVector(a, b), ca * cb)
    return out


def _tensor(x: Decomp, y: Decomp) -> Decomp:
    out: Decomp = {}
    for v, mv in x.items():
        for w, mw in y.items():
            for u, c in tensor_irreducibles(v, w).items():
                _add_into(out, u, mv * mw * c)
    return out


def _dual(x: Decomp) -> Decomp:
    return {w.dual(): m for w, m in x.items()}


def _character(w: WeightVector) -> dict:
    ca = dominant_weights_of(w.a) if w.a else {(): 1}
    cb = dominant_weights_of(w.b) if w.b else {(): 1}
    return {wa + wb: ma * mb for wa, ma in ca.items() for wb, mb in cb.items()}


def _decompose_character(char: Mapping, k: int) -> Decomp:
    """Peel a GL(k) x GL(n-k) character into irreducibles (lex-highest first)."""
    rest = {w: m for w, m in char.items() if m}
    out: Decomp = {}
    while rest:
        top = max(rest)
        m = rest[top]
        if m < 0:
            raise ArithmeticError("character is not effective")
        hw = WeightVector(top[:k], top[k:])
        out[hw] = out.get(hw, 0) + m
        for w, c in _character(hw).items():
            v = rest.get(w, 0) - m * c
            if v:
                rest[w] = v
            else:
                rest.pop(w, None)
    return out


def _std_kind(w: WeightVector) -> tuple[str, int] | None:
    """Recognize the standard rep or its dual on one block, trivial on the other."""
    for block, other, tag in ((w.a, w.b, "a"), (w.b, w.a, "b")):
        if any(other):
            continue
        if block and block[0] == 1 and not any(block[1:]):
            return tag, 1
        if block and block[-1] == -1 and not any(block[:-1]):
            return tag, -1
    return None


def _block_weight(lam: Partition, r: int, sign: int) -> tuple[int, ...]:
    p = lam.padded(r)
    return p if sign > 0 else tuple(-x for x in reversed(p))


def _power_fast(x: Decomp, p: int, kind: str, node) -> Decomp | None:
    """Known closed forms for exterior/symmetric powers of a single irreducible."""
    if len(x) != 1:
        return None
    (w, m), = x.items()
    if m != 1:
        return None
    k, nk = len(w.a), len(w.b)
    # third exterior power of the standard representation of one block
    for block, other, tag in ((w.a, w.b, "a"), (w.b, w.a, "b")):
        if kind != "wedge" or any(other) or len(block) < 3:
            continue
        r = len(block)
        sign = 0
        if block[:3] == (1, 1, 1) and not any(block[3:]):
            sign = 1
        elif block[-3:] == (-1, -1, -1) and not any(block[:-3]):
            sign = -1
        if sign:
            out: Decomp = {}
            if p > comb(r, 3):
                return out
            for lam, c in wedge_plethysm(p, r).terms.items():
                bw = _block_weight(Partition(lam), r, sign)
                zero = (0,) * (nk if tag == "a" else k)
                wv = WeightVector(bw, zero) if tag == "a" else WeightVector(zero, bw)
                out[wv] = c
            return out
    # powers of a tensor product of two standard-or-dual blocks (Cauchy)
    if len(w.a) and len(w.b):
        sa = 1 if (w.a[0] == 1 and not any(w.a[1:])) else (
            -1 if (w.a[-1] == -1 and not any(w.a[:-1])) else 0)
        sb = 1 if (w.b[0] == 1 and not any(w.b[1:])) else (
            -1 if (w.b[-1] == -1 and not any(w.b[:-1])) else 0)
        if sa and sb:
            terms = (cauchy_wedge(p, k, nk) if kind == "wedge" else cauchy_sym(p, k, nk))
            return {WeightVector(_block_weight(la, k, sa), _block_weight(lb, nk, sb)): 1
                    for la, lb in terms}
    # powers of a standard block alone
    std = _std_kind(w)
    if std is not None:
        tag, sign = std
        r = k if tag == "a" else nk
        if kind == "wedge":
            if p > r:
                return {}
            lam = Partition((1,) * p)
        else:
            lam = Partition((p,)) if p else Partition(())
        bw = _block_weight(lam, r, sign)
        zero = (0,) * (nk if tag == "a" else k)
        return {WeightVector(bw, zero) if tag == "a" else WeightVector(zero, bw): 1}
    return None


CHARACTER_LIMIT = 200_000


def _power_generic(x: Decomp, p: int, kind: str, node, k: int) -> Decomp:
    rank = sum(m * w.rank() for w, m in x.items())
    size = comb(rank, p) if kind == "wedge" else comb(rank + p - 1, p)
    if size > CHARACTER_LIMIT:
        raise UnsupportedBundle(
            f"no closed form for {node} and its rank {size} exceeds the character limit")
    char: dict = {}
    for w, m in x.items():
        for wt, c in _character(w).items():
            char[wt] = char.get(wt, 0) + m * c
    if any(c < 0 for c in char.values()):
        raise UnsupportedBundle(f"{node} is a power of a virtual bundle")
    if not char:
        return {}
    pw = (exterior_power_character(char, p) if kind == "wedge"
          else symmetric_power_character(char, p))
    return _decompose_character(pw, k)


def _schur_generic(x: Decomp, lam: Partition, node, k: int) -> Decomp:
    # Jacobi-Trudi on characters: S_lam = det(Sym^{lam_i - i + j})
    from itertools import permutations
    from .symcore import _perm_sign, character_product
    rank = sum(m * w.rank() for w, m in x.items())
    from .symcore import schur_dimension
    if schur_dimension(lam, rank) > CHARACTER_LIMIT:
        raise UnsupportedBundle(f"{node} is too large for the character method")
    char: dict = {}
    for w, m in x.items():
        for wt, c in _character(w).items():
            char[wt] = char.get(wt, 0) + m * c
    n = len(next(iter(char)))
    zero = (0,) * n
    total: dict = {}
    ell = len(lam)
    for perm in permutations(range(ell)):
        term = {zero: 1}
        for i in range(ell):
            j = lam[i] - i + perm[i]
            if j < 0:
                term = {}
                break
            term = character_product(term, symmetric_power_character(char, j) if j else {zero: 1})
        s = _perm_sign(perm)
        for wt, c in term.items():
            total[wt] = total.get(wt, 0) + s * c
    return _decompose_character(total, k)


def decompose(b: bx.BundleExpr, k: int, n: int) -> Decomp:
    """Irreducible summands {WeightVector: multiplicity} of a bundle expression."""
    op, args = b.op, b.args
    nk = n - k
    if op == "sub":
        return {WeightVector((0,) * (k - 1) + (-1,), (0,) * nk): 1}
    if op == "quot":
        return {WeightVector((0,) * k, (0,) * (nk - 1) + (-1,)): 1}
    if op == "trivial":
        return {WeightVector((0,) * k, (0,) * nk): b.param} if b.param else {}
    if op == "dual":
        return _dual(decompose(args[0], k, n))
    if op == "twist":
        return {w.twist(b.param): m for w, m in decompose(args[0], k, n).items()}
    if op == "sum":
        out = dict(decompose(args[0], k, n))
        for w, m in decompose(args[1], k, n).items():
            _add_into(out, w, m)
        return out
    if op == "tensor":
        return _tensor(decompose(args[0], k, n), decompose(args[1], k, n))
    inner = decompose(args[0], k, n)
    if op in ("wedge", "sym"):
        fast = _power_fast(inner, b.param, op, b)
        if fast is not None:
            return fast
        return _power_generic(inner, b.param, op, b, k)
    if op == "schur":
        lam = b.param
        if len(lam) == 0:
            return {WeightVector((0,) * k, (0,) * nk): 1}
        if all(x == 1 for x in lam):
            return decompose(args[0].wedge(len(lam)), k, n)
        if len(lam) == 1:
            return decompose(args[0].sym(lam[0]), k, n)
        return _schur_generic(inner, lam, b, k)
    raise UnsupportedBundle(f"cannot decompose node {b}")


@dataclass
class Cohomology:
    """Dimensions of H^i aggregated over irreducible summands."""

    dims: dict[int, int] = field(default_factory=dict)

    def add(self, report: CohomologyReport, mult: int = 1) -> None:
        if not report.is_zero:
            self.dims[report.degree] = self.dims.get(report.degree, 0) + mult * report.dimension

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    @property
    def euler(self) -> int:
        return sum((-1) ** i * d for i, d in self.dims.items())

    def items(self) -> list[tuple[int, int]]:
        return sorted((i, d) for i, d in self.dims.items() if d)

    def positive_degrees(self) -> list[tuple[int, int]]:
        return [(i, d) for i, d in self.items() if i > 0]


def cohomology_of_decomp(x: Mapping[WeightVector, int]) -> Cohomology:
    out = Cohomology()
    for w, m in x.items():
        out.add(bott_resolve(w), m)
    return out


def cohomology_of_expr(ctx: GrassCtx, b: bx.BundleExpr) -> list[tuple[int, int]]:
    """[(degree, dimension), ...] for the nonzero cohomology of ``b`` on ``ctx``."""
    return cohomology_of_decomp(decompose(b, ctx.k, ctx.n)).items()


def euler_characteristic(ctx: GrassCtx, b: bx.BundleExpr) -> int:
    return cohomology_of_decomp(decompose(b, ctx.k, ctx.n)).euler


# ---------------------------------------------------------------------------
# Koszul complex of Y = zero locus of a section of F = wedge^3 E_6 on G(6,10)

Y_K, Y_N = 6, 10
F_RANK = comb(Y_K, 3)


def koszul_terms(i: int, t: int = 0, dual: bool = True) -> Decomp:
    """Irreducible summands of wedge^i F^* (t), or of wedge^i F (t) if not ``dual``."""
    out: Decomp = {}
    zero = (0,) * (Y_N - Y_K)
    for lam, c in wedge_plethysm(i, Y_K).terms.items():
        lam = Partition(lam).padded(Y_K)
        a = (tuple(t - x for x in reversed(lam)) if dual else tuple(x + t for x in lam))
        out[WeightVector(a, zero)] = c
    return out


@lru_cache(maxsize=None)
def _koszul_cohomology(i: int, t: int, dual: bool) -> Cohomology:
    return cohomology_of_decomp(koszul_terms(i, t, dual))


def koszul_euler(t: int = 0, dual: bool = True) -> int:
    """sum_i (-1)^i chi(G(6,10), wedge^i F^* (t)); ``dual=False`` uses wedge^i F."""
    return sum((-1) ** i * _koszul_cohomology(i, t, dual).euler
               for i in range(F_RANK + 1))


@dataclass(frozen=True)
class KoszulResolution:
    """Both readings of the Koszul sum and which one gives chi(O_Y)."""

    dual_sum: int
    plain_sum: int
    chi_expected: int

    @property
    def matching(self) -> str:
        if self.dual_sum == self.chi_expected:
            return "dual"
        if self.plain_sum == self.chi_expected:
            return "plain"
        return "neither"


def koszul_resolution(chi_expected: int = 3) -> KoszulResolution:
    return KoszulResolution(koszul_euler(0, True), koszul_euler(0, False), chi_expected)


def koszul_hodge_bound(q: int) -> int:
    """sum_i dim H^{q+i}(G, wedge^i F^*): an upper bound for h^q(Y, O_Y)."""
    if not 0 <= q <= 4:
        raise ValueError("q must lie in 0..4")
    return sum(_koszul_cohomology(i, 0, True)[q + i] for i in range(F_RANK + 1))


@dataclass(frozen=True)
class GriffithsCount:
    h_9_11: int
    h_10_10_van: int
    sections_o1: int
    sections_tangent: int


def griffiths_hodge_F() -> GriffithsCount:
    """Hodge numbers of the vanishing cohomology of the hyperplane section F of G(3,10)."""
    k, n = 3, 10
    o1 = bott_resolve(WeightVector((1,) * k, (0,) * (n - k)))
    canon_twist = bott_resolve(WeightVector((0,) * k, (0,) * (n - k)))  # omega(10) = O
    tangent = cohomology_of_expr(GrassCtx(k, n), bx.tangent())
    h0_t = dict(tangent).get(0, 0)
    h0_o1 = 0 if o1.is_zero or o1.degree else o1.dimension
    h_9_11 = 0 if canon_twist.is_zero or canon_twist.degree else canon_twist.dimension
    return GriffithsCount(h_9_11, (h0_o1 - 1) - h0_t, h0_o1, h0_t)


# ---------------------------------------------------------------------------
# vanishing sweeps

SWEEPS = ("F_tensor_wedge", "S6dual_tensor_wedge", "omega_twists")


@dataclass
class SweepReport:
    name: str
    requested: tuple[int, int]
    covered: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    nonzero: list = field(default_factory=list)  # (index, degree, dimension)

    @property
    def complete(self) -> bool:
        return not self.skipped

    @property
    def clean(self) -> bool:
        return not self.nonzero


def _omega_twist(j: int, t: int, k: int = 3, n: int = 10) -> Decomp:
    # Omega = S (x) Q^*, wedge^j = sum_lam S_lam S (x) S_lam' Q^*
    out: Decomp = {}
    for lam, conj in cauchy_wedge(j, k, n - k):
        a = tuple(t - x for x in reversed(lam.padded(k)))
        out[WeightVector(a, conj.padded(n - k))] = 1
    return out


def sweep_indices(name: str, lo: int | None = None, hi: int | None = None) -> Iterator:
    if name == "omega_twists":
        lo = 1 if lo is None else lo
        hi = 10 if hi is None else hi
        for t in range(lo, hi + 1):
            for j in range(0, 22):
                yield (j, t)
    elif name in ("F_tensor_wedge", "S6dual_tensor_wedge"):
        lo = (1 if name == "F_tensor_wedge" else 0) if lo is None else lo
        hi = F_RANK if hi is None else hi
        yield from range(lo, hi + 1)
    else:
        raise ValueError(f"unknown sweep {name!r}; choose from {SWEEPS}")


def _sweep_term(name: str, idx) -> tuple[Decomp, Iterable[int]]:
    """Summands and the cohomological degrees that must vanish."""
    if name == "omega_twists":
        j, t = idx
        return _omega_twist(j, t), range(1, 22)
    i = idx
    wedge = koszul_terms(i, 0, True)
    if name == "F_tensor_wedge":
        f = {WeightVector((1, 1, 1, 0, 0, 0), (0,) * 4): 1}
        return _tensor(f, wedge), [i]
    e = {WeightVector((1, 0, 0, 0, 0, 0), (0,) * 4): 1}
    return _tensor(e, wedge), [i + 1]


def vanishing_sweep(name: str, lo: int | None = None, hi: int | None = None,
                    budget_seconds: float | None = None) -> SweepReport:
    """Run one of the Bott-vanishing sweeps over an index range.

    ``F_tensor_wedge``: H^i(G(6,10), F (x) wedge^i F^*) for i in [lo, hi].
    ``S6dual_tensor_wedge``: H^{i+1}(G(6,10), E (x) wedge^i F^*).
    ``omega_twists``: H^{>0}(G(3,10), Omega^j(t)) for all j and t in [lo, hi].
    Indices not reached within the time budget are listed as skipped.
    """
    import time
    start = time.perf_counter()
    idx = list(sweep_indices(name, lo, hi))
    first, last = (idx[0], idx[-1]) if idx else (None, None)
    if name == "omega_twists" and idx:
        first, last = first[1], last[1]
    report = SweepReport(name, (first, last))
    for n_done, i in enumerate(idx):
        if budget_seconds is not None and time.perf_counter() - start > budget_seconds:
            report.skipped.extend(idx[n_done:])
            break
        terms, degrees = _sweep_term(name, i)
        coh = cohomology_of_decomp(terms)
        for d in degrees:
            if coh[d]:
                report.nonzero.append((i, d, coh[d]))
        report.covered.append(i)
    return report
