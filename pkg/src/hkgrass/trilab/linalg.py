"""Row reduction and subspaces over an exact field."""
from __future__ import annotations

from typing import Iterable, Sequence


def rref(rows: Sequence[Sequence], F) -> tuple[list[list], list[int]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    m = [[F(x) for x in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F(x * inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [F(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], F) -> int:
    return len(rref(rows, F)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence], F, ncols: int | None = None) -> list[list]:
    """Basis of {x : M x = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[F.one if i == j else F.zero for i in range(ncols)] for j in range(ncols)]
    red, piv = rref(rows, F)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [F.zero] * ncols
        x[f] = F.one
        for row, pc in zip(red, piv):
            x[pc] = F(-row[f])
        basis.append(x)
    return basis


def solve_affine(rows: Sequence[Sequence], rhs: Sequence, F):
    """Solutions of M x = b: (particular solution or None, kernel basis)."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, piv = rref(aug, F)
    if ncols in piv:
        return None, nullspace(rows, F, ncols)
    x = [F.zero] * ncols
    for row, pc in zip(red, piv):
        x[pc] = row[ncols]
    return x, nullspace(rows, F, ncols)


def mat_vec(rows, v, F) -> list:
    return [F(sum(a * b for a, b in zip(r, v))) for r in rows]


class Subspace:
    """A linear subspace of F^n, stored in canonical reduced echelon form."""

    __slots__ = ("F", "n", "basis", "pivots")

    def __init__(self, F, vectors: Iterable[Sequence], n: int | None = None):
        vectors = [list(v) for v in vectors]
        if n is None:
            if not vectors:
                raise ValueError("ambient dimension needed for the zero subspace")
            n = len(vectors[0])
        if any(len(v) != n for v in vectors):
            raise ValueError("vectors of inconsistent length")
        self.F = F
        self.n = n
        self.basis, self.pivots = rref(vectors, F) if vectors else ([], [])
        self.basis = [tuple(r) for r in self.basis]

    @classmethod
    def coordinate(cls, F, indices: Iterable[int], n: int = 10) -> "Subspace":
        """Span of e_i for 1-based indices."""
        return cls(F, [[F.one if j == i - 1 else F.zero for j in range(n)] for i in indices], n)

    @classmethod
    def whole(cls, F, n: int) -> "Subspace":
        return cls.coordinate(F, range(1, n + 1), n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return rank(self.basis + [tuple(v)], self.F) == self.dim if self.dim else not any(
            self.F(x) for x in v)

    def contains_subspace(self, other: "Subspace") -> bool:
        return (self + other).dim == self.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.F, list(self.basis) + list(other.basis), self.n)

    def intersect(self, other: "Subspace") -> "Subspace":
        if not self.dim or not other.dim:
            return Subspace(self.F, [], self.n)
        # a.U = b.V  <=>  (a, b) in kernel of [U^T | -V^T]
        cols = [list(u) for u in self.basis] + [[self.F(-x) for x in v] for v in other.basis]
        mat = [[c[i] for c in cols] for i in range(self.n)]
        ker = nullspace(mat, self.F, len(cols))
        vecs = [[self.F(sum(k[j] * self.basis[j][i] for j in range(self.dim)))
                 for i in range(self.n)] for k in ker]
        return Subspace(self.F, vecs, self.n)

    __and__ = intersect

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.n == other.n
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.n, tuple(self.basis)))

    def key(self) -> tuple:
        return tuple(self.basis)

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(self.F.format(x) for x in r) for r in self.basis)
        return f"Subspace(dim={self.dim}, [{rows}])"


def random_vector(F, rng, n: int) -> list:
    return [F.random(rng) for _ in range(n)]


def random_subspace(F, rng, d: int, n: int, inside: Subspace | None = None) -> Subspace:
    """Uniformly random-ish d-dimensional subspace (of ``inside`` if given)."""
    amb = inside.basis if inside is not None else None
    while True:
        if amb is None:
            vecs = [random_vector(F, rng, n) for _ in range(d)]
        else:
            vecs = []
            for _ in range(d):
                c = [F.random(rng) for _ in amb]
                vecs.append([F(sum(ci * b[i] for ci, b in zip(c, amb))) for i in range(n)])
        s = Subspace(F, vecs, n)
        if s.dim == d:
            return s
