"""Alternating 3-forms and the incidence predicates they define."""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .fields import field_from_header
from .linalg import Subspace

# signs of the six orderings of (a, b, c), a < b < c
_PERMS = (((0, 1, 2), 1), ((0, 2, 1), -1), ((1, 0, 2), -1),
          ((1, 2, 0), 1), ((2, 0, 1), 1), ((2, 1, 0), -1))


def _det3(u, v, w, a, b, c):
    return (u[a] * (v[b] * w[c] - v[c] * w[b])
            - u[b] * (v[a] * w[c] - v[c] * w[a])
            + u[c] * (v[a] * w[b] - v[b] * w[a]))


class Trivector:
    """sigma = sum over i<j<k of c_ijk e_i^* ^ e_j^* ^ e_k^* (indices 0-based)."""

    __slots__ = ("F", "n", "coords")

    def __init__(self, F, n: int = 10, coords: Mapping[tuple, object] = ()):
        self.F = F
        self.n = n
        clean = {}
        for idx, v in dict(coords).items():
            a, b, c = idx
            if not (0 <= a < b < c < n):
                raise ValueError(f"index {idx} is not an increasing triple in 0..{n - 1}")
            v = F(v)
            if v != 0:
                clean[(a, b, c)] = v
        self.coords = clean

    @classmethod
    def elementary(cls, F, i: int, j: int, k: int, n: int = 10, value=1) -> "Trivector":
        """value * e_i^* ^ e_j^* ^ e_k^* for 1-based indices in any order."""
        idx = [i - 1, j - 1, k - 1]
        if len(set(idx)) < 3:
            return cls(F, n)
        order = sorted(range(3), key=lambda t: idx[t])
        sign = dict(_PERMS)[tuple(order)]
        return cls(F, n, {tuple(sorted(idx)): sign * F(value)})

    def __getitem__(self, idx) -> object:
        return self.coords.get(tuple(idx), self.F.zero)

    def __add__(self, other: "Trivector") -> "Trivector":
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, self.F.zero) + v
        return Trivector(self.F, self.n, out)

    def __rmul__(self, s) -> "Trivector":
        return Trivector(self.F, self.n, {k: s * v for k, v in self.coords.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, Trivector) and self.F == other.F and self.n == other.n
                and self.coords == other.coords)

    def is_zero(self) -> bool:
        return not self.coords

    def __call__(self, u: Sequence, v: Sequence, w: Sequence):
        F = self.F
        return F(sum(s * _det3(u, v, w, a, b, c) for (a, b, c), s in self.coords.items()))

    def contract(self, u: Sequence) -> list[list]:
        """The 2-form Int_u sigma as an antisymmetric n x n matrix."""
        F = self.F
        m = [[0] * self.n for _ in range(self.n)]
        for (a, b, c), s in self.coords.items():
            t = (a, b, c)
            for perm, sign in _PERMS:
                r, j, k = t[perm[0]], t[perm[1]], t[perm[2]]
                if u[r]:
                    m[j][k] += sign * s * u[r]
        return [[F(x) for x in row] for row in m]

    def contract2(self, u: Sequence, v: Sequence) -> list:
        """The linear form sigma(u, v, .)."""
        m = self.contract(u)
        F = self.F
        return [F(sum(v[j] * m[j][k] for j in range(self.n))) for k in range(self.n)]

    def restrict(self, W: Subspace | Sequence[Sequence]) -> "Trivector":
        """Pullback along the given basis (rows of ``W``)."""
        basis = W.basis if isinstance(W, Subspace) else [list(b) for b in W]
        d = len(basis)
        return Trivector(self.F, d, {(a, b, c): self(basis[a], basis[b], basis[c])
                                     for a, b, c in combinations(range(d), 3)})

    def to_text(self) -> str:
        lines = [self.F.header()]
        if self.n != 10:
            lines.append(f"dim {self.n}")
        for (a, b, c), v in sorted(self.coords.items()):
            lines.append(f"{a + 1} {b + 1} {c + 1} : {self.F.format(v)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Trivector":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines:
            raise ValueError("empty trivector file")
        F = field_from_header(lines[0])
        n = 10
        body = lines[1:]
        if body and body[0].startswith("dim "):
            n = int(body[0].split()[1])
            body = body[1:]
        coords = {}
        for ln in body:
            left, _, right = ln.partition(":")
            i, j, k = (int(x) - 1 for x in left.split())
            if not (i < j < k):
                raise ValueError(f"indices must be increasing: {ln!r}")
            coords[(i, j, k)] = F.parse(right.strip())
        return cls(F, n, coords)

    def __repr__(self) -> str:
        return f"Trivector(over {self.F}, n={self.n}, {len(self.coords)} nonzero coordinates)"


def random_trivector(F, rng, n: int = 10, fixed: Mapping[tuple, object] | None = None) -> Trivector:
    """All coordinates random except those given (0-based increasing triples)."""
    fixed = fixed or {}
    coords = {}
    for t in combinations(range(n), 3):
        coords[t] = fixed[t] if t in fixed else F.random(rng)
    return Trivector(F, n, coords)


def _check_dim(W: Subspace, d: int, what: str) -> None:
    if W.dim != d:
        raise ValueError(f"{what} must have dimension {d}, got {W.dim}")


def in_F(sigma: Trivector, W3: Subspace) -> bool:
    _check_dim(W3, 3, "W3")
    return sigma.restrict(W3).is_zero()


def in_Y(sigma: Trivector, W6: Subspace) -> bool:
    _check_dim(W6, 6, "W6")
    return sigma.restrict(W6).is_zero()


def vanishes_on_pairs(sigma: Trivector, A: Subspace, B: Iterable[Sequence]) -> bool:
    """sigma(a1, a2, b) = 0 for a1, a2 in A and b in B."""
    for x, y in combinations(A.basis, 2):
        form = sigma.contract2(x, y)
        for b in B:
            if sigma.F(sum(f * bi for f, bi in zip(form, b))):
                return False
    return True


def singular_at(sigma: Trivector, W3: Subspace) -> bool:
    """sigma vanishes on wedge^2 W ^ V: F_sigma is singular at [W]."""
    _check_dim(W3, 3, "W")
    return all(not any(sigma.contract2(x, y)) for x, y in combinations(W3.basis, 2))


def line_in_Y(sigma: Trivector, V5: Subspace, V7: Subspace) -> bool:
    """Every W6 with V5 in W6 in V7 lies in Y_sigma."""
    _check_dim(V5, 5, "V5")
    _check_dim(V7, 7, "V7")
    if not V7.contains_subspace(V5):
        raise ValueError("V5 is not contained in V7")
    return sigma.restrict(V5).is_zero() and vanishes_on_pairs(sigma, V5, V7.basis)


def g27_test(sigma: Trivector, V8: Subspace, x: Sequence) -> bool:
    """Int_x sigma vanishes on V8, i.e. all W3 with x in W3 in V8 lie in F_sigma."""
    _check_dim(V8, 8, "V8")
    F = sigma.F
    x = [F(t) for t in x]
    if not any(x):
        raise ValueError("x must be nonzero")
    if not V8.contains(x):
        raise ValueError("x is not in V8")
    m = sigma.contract(x)
    for u, v in combinations(V8.basis, 2):
        if F(sum(u[j] * m[j][k] * v[k] for j in range(sigma.n) for k in range(sigma.n))):
            return False
    return True
