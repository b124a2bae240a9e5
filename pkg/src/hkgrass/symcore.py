"""Partitions, Littlewood-Richardson products, dimensions and plethysm.

Everything here is exact integer arithmetic.  Characters of GL(n)
representations are handled as weight-multiplicity tables; Schur coefficients
are read off with the Weyl alternant (multiply by the Vandermonde and look at
strictly decreasing exponents).
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping

import numpy as np


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def fits_in_box(self, rows: int, cols: int) -> bool:
        return len(self) <= rows and (not self or self[0] <= cols)

    def complement(self, rows: int, cols: int) -> "Partition":
        """Complement inside the ``rows x cols`` box."""
        if not self.fits_in_box(rows, cols):
            raise ValueError(f"{self} does not fit in a {rows}x{cols} box")
        p = self.padded(rows)
        return Partition(cols - p[rows - 1 - i] for i in range(rows))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def partitions(n: int, max_part: int | None = None,
               max_length: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order (largest first)."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            if first * slots < rest:
                break
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    for p in rec(n, max_part, max_length):
        yield Partition(p)


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    out = []
    for n in range(rows * cols + 1):
        out.extend(partitions(n, cols, rows))
    return out


class SchurVector:
    """Formal integer combination of partitions of a common weight."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms: Mapping | Iterable = (), degree: int | None = None):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        clean: dict[Partition, int] = {}
        for lam, c in items:
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            c = int(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
                if clean[lam] == 0:
                    del clean[lam]
        weights = {lam.weight for lam in clean}
        if len(weights) > 1:
            raise ValueError(f"inhomogeneous SchurVector (weights {sorted(weights)})")
        if weights:
            w = weights.pop()
            if degree is not None and degree != w:
                raise ValueError(f"degree {degree} does not match weight {w}")
            degree = w
        self.terms = dict(sorted(clean.items(), reverse=True))
        self.degree = degree

    @classmethod
    def single(cls, lam) -> "SchurVector":
        return cls({Partition(lam): 1})

    def __getitem__(self, lam) -> int:
        return self.terms.get(Partition(lam), 0)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __add__(self, other: "SchurVector") -> "SchurVector":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SchurVector(out)

    def __neg__(self) -> "SchurVector":
        return SchurVector({lam: -c for lam, c in self.terms.items()}, self.degree)

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        return self + (-other)

    def __rmul__(self, k: int) -> "SchurVector":
        return SchurVector({lam: k * c for lam, c in self.terms.items()}, self.degree)

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        out: dict[Partition, int] = {}
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                for nu, c in lr_multiply(lam, mu).terms.items():
                    out[nu] = out.get(nu, 0) + a * b * c
        return SchurVector(out)

    def dimension(self, n: int) -> int:
        return sum(c * schur_dimension(lam, n) for lam, c in self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "SchurVector(0)"
        return " + ".join(f"{c}*s{tuple(lam)}" for lam, c in self.terms.items())


# ---------------------------------------------------------------------------
# Littlewood-Richardson rule


def _lr_fill(outer, label, mu, counts_prev, max_rows, max_cols, acc):
    # counts_prev[r]: number of entries equal to label-1 in rows 0..r-1
    # (cumulative), used for the lattice-word condition.
    if label > len(mu):
        key = Partition(outer)
        acc[key] = acc.get(key, 0) + 1
        return
    need = mu[label - 1]
    base = list(outer) + [0]
    nrows = len(base)
    if max_rows is not None:
        nrows = min(nrows, max_rows)
    added = [0] * len(base)

    def place(r, left, cum):
        # distribute `left` boxes of `label` into rows r.. (top to bottom)
        if left == 0:
            new = [base[i] + added[i] for i in range(len(base))]
            # cumulative counts of `label` per row for the next letter
            cnt, running = [], 0
            for i in range(len(base)):
                cnt.append(running)
                running += added[i]
            cnt.append(running)
            _lr_fill(tuple(x for x in new if x), label + 1, mu, cnt,
                     max_rows, max_cols, acc)
            return
        if r >= nrows:
            return
        # label may not sit above row label-1
        if r < label - 1:
            place(r + 1, left, cum)
            return
        cap = (base[r - 1] if r > 0 else 10 ** 9) - base[r]
        if max_cols is not None:
            cap = min(cap, max_cols - base[r])
        # lattice: cum + x <= (# of label-1 strictly above row r)
        if label > 1:
            cap = min(cap, counts_prev[r] - cum)
        for x in range(min(cap, left), -1, -1):
            added[r] = x
            place(r + 1, left - x, cum + x)
        added[r] = 0

    place(0, need, 0)


@lru_cache(maxsize=None)
def _lr_cached(lam: Partition, mu: Partition, max_rows, max_cols) -> tuple:
    acc: dict[Partition, int] = {}
    # label 1 has no lattice constraint; counts_prev unused for it
    _lr_fill(tuple(lam), 1, tuple(mu), None, max_rows, max_cols, acc)
    return tuple(sorted(acc.items(), reverse=True))


def lr_multiply(lam, mu, max_rows: int | None = None,
                max_cols: int | None = None) -> SchurVector:
    """Product s_lam * s_mu in the Schur basis.

    ``max_rows``/``max_cols`` drop every constituent leaving that box, which
    is how products are truncated in the cohomology of a Grassmannian.
    """
    lam, mu = Partition(lam), Partition(mu)
    if len(mu) > len(lam) or (len(mu) == len(lam) and mu > lam):
        lam, mu = mu, lam
    if max_rows is not None and (len(lam) > max_rows):
        return SchurVector({}, lam.weight + mu.weight)
    if max_cols is not None and lam and lam[0] > max_cols:
        return SchurVector({}, lam.weight + mu.weight)
    return SchurVector(dict(_lr_cached(lam, mu, max_rows, max_cols)),
                       lam.weight + mu.weight)


def lr_coefficient(lam, mu, nu) -> int:
    return lr_multiply(lam, mu)[nu]


# ---------------------------------------------------------------------------
# dimensions


def schur_dimension(lam, n: int) -> int:
    """dim S_lam(C^n) by the hook-content formula."""
    lam = Partition(lam)
    if len(lam) > n:
        return 0
    num, den = 1, 1
    conj = lam.conjugate()
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + j - i
            den *= (row - j) + (conj[j] - i) - 1
    return num // den


def weyl_dimension(weight: Iterable[int]) -> int:
    """Weyl dimension formula for a dominant GL(n) weight (entries may be negative)."""
    w = tuple(weight)
    n = len(w)
    num, den = 1, 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= w[i] - w[j] + j - i
            den *= j - i
    return num // den


# ---------------------------------------------------------------------------
# characters


def alternant_coefficients(char: np.ndarray, candidates: np.ndarray,
                           offset: int = 0) -> np.ndarray:
    """Schur coefficients of a symmetric character given as a dense table.

    ``char[v]`` is the multiplicity of weight ``v - offset`` (one axis per
    variable).  For each row ``lam`` of ``candidates`` the coefficient of
    s_lam is sum over permutations w of sign(w) * char[lam + delta - w(delta)].
    """
    n = char.ndim
    cands = np.asarray(candidates, dtype=np.int64).reshape(-1, n)
    if cands.size == 0:
        return np.zeros(0, dtype=object)
    delta = np.arange(n - 1, -1, -1)
    total = np.zeros(len(cands), dtype=object)
    shape = np.array(char.shape)
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        idx = cands + offset + (delta - delta[list(perm)])
        ok = np.all((idx >= 0) & (idx < shape), axis=1)
        if not ok.any():
            continue
        vals = np.zeros(len(cands), dtype=object)
        vals[ok] = char[tuple(idx[ok].T)].astype(object)
        total = total + sign * vals if sign > 0 else total - vals
    return total


def _perm_sign(perm) -> int:
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _wedge3_character(n: int) -> np.ndarray:
    """Dense table: entry v counts subsets of 3-subsets of [n] with weight v."""
    cap = comb(n - 1, 2)
    char = np.zeros((cap + 1,) * n, dtype=np.int64)
    char[(0,) * n] = 1
    for triple in itertools.combinations(range(n), 3):
        src = [slice(None)] * n
        dst = [slice(None)] * n
        for a in triple:
            src[a] = slice(0, cap)
            dst[a] = slice(1, cap + 1)
        shifted = char[tuple(src)].copy()
        char[tuple(dst)] += shifted
    char.setflags(write=False)
    return char


@lru_cache(maxsize=None)
def wedge_plethysm(i: int, n: int) -> SchurVector:
    """Decomposition of the i-th exterior power of the 3rd exterior power of C^n."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    if i > comb(n, 3):
        raise ValueError(f"i={i} exceeds rank {comb(n, 3)} of the third exterior power")
    if i == 0:
        return SchurVector.single(())
    cap = comb(n - 1, 2)
    cands = [lam.padded(n) for lam in partitions(3 * i, cap, n)]
    coeffs = alternant_coefficients(_wedge3_character(n), np.array(cands))
    return SchurVector({lam: int(c) for lam, c in zip(cands, coeffs) if c})


def cauchy_wedge(j: int, max_rows_a: int | None = None,
                 max_rows_b: int | None = None) -> list[tuple[Partition, Partition]]:
    """Summands (lam, lam') of the j-th exterior power of A (x) B.

    With the optional rank bounds, pairs whose Schur functor vanishes on A
    (more than rank A rows) or on B are dropped.
    """
    out = []
    for lam in partitions(j):
        conj = lam.conjugate()
        if max_rows_a is not None and len(lam) > max_rows_a:
            continue
        if max_rows_b is not None and len(conj) > max_rows_b:
            continue
        out.append((lam, conj))
    return out


def cauchy_sym(j: int, max_rows_a: int | None = None,
               max_rows_b: int | None = None) -> list[tuple[Partition, Partition]]:
    """Summands (lam, lam) of the j-th symmetric power of A (x) B."""
    return [(lam, lam) for lam in partitions(j)
            if (max_rows_a is None or len(lam) <= max_rows_a)
            and (max_rows_b is None or len(lam) <= max_rows_b)]


# ---------------------------------------------------------------------------
# generic characters for small plethysms (sparse)


def schur_weights(lam, n: int) -> dict[tuple[int, ...], int]:
    """Weight multiplicities of S_lam(C^n), i.e. Kostka numbers by content."""
    lam = Partition(lam)
    out: dict[tuple[int, ...], int] = {}
    if len(lam) > n:
        return out

    # fill letters 1..n as successive horizontal strips
    def rec(shape, letter, content):
        if letter == n:
            if shape == tuple(lam):
                out[content] = out.get(content, 0) + 1
            return
        target = lam.padded(len(lam))
        cur = shape + (0,) * (len(lam) - len(shape))
        if letter == n - 1:
            # last letter must complete the shape
            added = [target[r] - cur[r] for r in range(len(lam))]
            if all(a >= 0 for a in added) and all(
                    target[r] <= (cur[r - 1] if r else 10 ** 9) for r in range(len(lam))):
                out_c = content + (sum(added),)
                out[out_c] = out.get(out_c, 0) + 1
            return

        def strips(r, new):
            if r == len(lam):
                nxt = tuple(x for x in new if x)
                rec(nxt, letter + 1, content + (sum(new) - sum(cur),))
                return
            hi = min(target[r], cur[r - 1] if r else target[r])
            for x in range(cur[r], hi + 1):
                new.append(x)
                strips(r + 1, new)
                new.pop()

        strips(0, [])

    rec((), 0, ())
    return out


def character_decompose(char: Mapping[tuple[int, ...], int], n: int) -> dict[tuple[int, ...], int]:
    """Decompose a GL(n) character {weight: mult} into dominant weights."""
    if not char:
        return {}
    arr = np.array(list(char.keys()), dtype=np.int64).reshape(-1, n)
    lo = arr.min(axis=0).min()
    hi = arr.max(axis=0).max()
    size = int(hi - lo) + 1
    table = np.zeros((size,) * n, dtype=object)
    for w, m in char.items():
        table[tuple(x - lo for x in w)] += m
    dom = sorted({w for w in char if all(a >= b for a, b in zip(w, w[1:]))},
                 reverse=True)
    coeffs = alternant_coefficients(table, np.array(dom), offset=-lo)
    return {w: int(c) for w, c in zip(dom, coeffs) if c}


def exterior_power_character(weights: Mapping[tuple[int, ...], int], p: int) -> dict:
    """Character of the p-th exterior power of a representation with given weights."""
    n = len(next(iter(weights)))
    states = {(0, (0,) * n): 1}
    for w, m in weights.items():
        new: dict = {}
        for (cnt, vec), mult in states.items():
            for s in range(0, min(m, p - cnt) + 1):
                key = (cnt + s, tuple(a + s * b for a, b in zip(vec, w)))
                new[key] = new.get(key, 0) + mult * comb(m, s)
        states = new
    return {vec: mult for (cnt, vec), mult in states.items() if cnt == p and mult}


def symmetric_power_character(weights: Mapping[tuple[int, ...], int], p: int) -> dict:
    n = len(next(iter(weights)))
    states = {(0, (0,) * n): 1}
    for w, m in weights.items():
        new: dict = {}
        for (cnt, vec), mult in states.items():
            for s in range(0, p - cnt + 1):
                key = (cnt + s, tuple(a + s * b for a, b in zip(vec, w)))
                new[key] = new.get(key, 0) + mult * comb(m + s - 1, s)
        states = new
    return {vec: mult for (cnt, vec), mult in states.items() if cnt == p and mult}


def character_product(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for wa, ma in a.items():
        for wb, mb in b.items():
            w = tuple(x + y for x, y in zip(wa, wb))
            out[w] = out.get(w, 0) + ma * mb
    return {w: m for w, m in out.items() if m}


def dominant_weights_of(weight: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Character of the irreducible GL(n) representation with a dominant weight."""
    n = len(weight)
    shift = weight[-1] if weight else 0
    lam = Partition(w - shift for w in weight)
    return {tuple(a + shift for a in w): m for w, m in schur_weights(lam, n).items()}


def total_dimension(decomp: Mapping[tuple[int, ...], int]) -> int:
    return sum(m * weyl_dimension(w) for w, m in decomp.items())
