"""Chow rings of Grassmannians in the Schubert basis.

Convention: classes are indexed by partitions in the k x (n-k) box and
sigma_(1^i) = c_i(E), where E = S^* is the dual of the tautological
subbundle; sigma_(i) = c_i(Q).  Under this convention the Chow ring is the
ring of symmetric polynomials in the Chern roots x_1..x_k of E modulo the
Schur polynomials that leave the box, and s_lam(x) maps to sigma_lam.

Chern classes of bundle expressions are computed with the splitting
principle: the (virtual) root multiset of the bundle is expanded as a
polynomial in x, truncated at exponent n-1 in every variable and at the
wanted total degree, then read off in the Schur basis with the bialternant
formula.  A symmetric polynomial in (x_i^n) has no Schur coefficient inside
the box, so the truncation is harmless.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from . import bundles as bx
from .symcore import Partition, alternant_coefficients, lr_multiply, partitions

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GrassCtx:
    """G(k, n): k-dimensional subspaces of an n-dimensional space."""

    k: int
    n: int

    def __post_init__(self):
        if not (0 < self.k < self.n):
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def cols(self) -> int:
        return self.n - self.k

    @property
    def point(self) -> Partition:
        return Partition((self.cols,) * self.k)

    def basis(self, degree: int | None = None) -> list[Partition]:
        degrees = range(self.dim + 1) if degree is None else [degree]
        return [lam for d in degrees for lam in partitions(d, self.cols, self.k)]

    def sigma(self, lam=(), coeff: int = 1) -> "ChowClass":
        lam = Partition(lam)
        if not lam.fits_in_box(self.k, self.cols):
            return ChowClass(self, {})
        return ChowClass(self, {lam: coeff})

    def one(self) -> "ChowClass":
        return self.sigma(())

    def chern(self, i: int, bundle: str = "E") -> "ChowClass":
        """c_i of a tautological bundle: 'E' (=S^*), 'S', 'Q' or 'Qdual'."""
        if i == 0:
            return self.one()
        if bundle == "E":
            return self.sigma((1,) * i)
        if bundle == "S":
            return self.sigma((1,) * i, (-1) ** i)
        if bundle == "Q":
            return self.sigma((i,))
        if bundle == "Qdual":
            return self.sigma((i,), (-1) ** i)
        raise ValueError(f"unknown tautological bundle {bundle!r}")

    def __str__(self) -> str:
        return f"G({self.k},{self.n})"


@lru_cache(maxsize=None)
def _box_product(ctx: GrassCtx, lam: Partition, mu: Partition) -> tuple:
    return tuple(lr_multiply(lam, mu, ctx.k, ctx.cols).terms.items())


class ChowClass:
    """An element of the Chow ring of a Grassmannian (possibly inhomogeneous)."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: GrassCtx, terms: Mapping = ()):
        self.ctx = ctx
        clean = {}
        for lam, c in dict(terms).items():
            lam = Partition(lam)
            if c and lam.fits_in_box(ctx.k, ctx.cols):
                clean[lam] = clean.get(lam, 0) + c
        self.terms = {lam: c for lam, c in clean.items() if c}

    def degrees(self) -> set[int]:
        return {lam.weight for lam in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def part(self, d: int) -> "ChowClass":
        return ChowClass(self.ctx, {lam: c for lam, c in self.terms.items()
                                    if lam.weight == d})

    def truncate(self, d: int) -> "ChowClass":
        return ChowClass(self.ctx, {lam: c for lam, c in self.terms.items()
                                    if lam.weight <= d})

    def __getitem__(self, lam) -> int:
        return self.terms.get(Partition(lam), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ctx.sigma((), other)
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ctx.sigma((), other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return ChowClass(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.ctx, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.ctx, {lam: other * c for lam, c in self.terms.items()})
        if self.ctx != other.ctx:
            raise ValueError("classes live on different Grassmannians")
        out: dict = {}
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                if lam.weight + mu.weight > self.ctx.dim:
                    continue
                for nu, c in _box_product(self.ctx, lam, mu):
                    out[nu] = out.get(nu, 0) + a * b * c
        return ChowClass(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = self.ctx.one()
        for _ in range(e):
            out = out * self
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return f"0 on {self.ctx}"
        body = " + ".join(f"{c}*s{tuple(lam)}" for lam, c in
                          sorted(self.terms.items(), key=lambda t: (t[0].weight, t[0])))
        return f"{body} on {self.ctx}"


def schubert_integrate(x: ChowClass) -> int:
    """Degree of the top-dimensional part of ``x``."""
    return x[x.ctx.point]


def integrate_product(*factors: ChowClass) -> int:
    """Integral of a product, with a diagnostic when degrees do not add up."""
    ctx = factors[0].ctx
    total = sum(max(f.degrees(), default=0) for f in factors)
    if all(f.is_homogeneous() for f in factors) and total != ctx.dim:
        log.warning("product of degree %d on %s (dim %d) integrates to zero",
                    total, ctx, ctx.dim)
        return 0
    out = ctx.one()
    for f in factors:
        out = out * f
    return schubert_integrate(out)


def giambelli_reduce(ctx: GrassCtx, monomial: Mapping[int, int] | Iterable[int],
                     bundle: str = "E") -> ChowClass:
    """Schubert expansion of a monomial in the Chern classes of a tautological bundle.

    ``monomial`` maps i to the exponent of c_i, or is a sequence of indices
    (``[1, 1, 1]`` is c_1^3).
    """
    if not isinstance(monomial, Mapping):
        exps: dict[int, int] = {}
        for i in monomial:
            exps[i] = exps.get(i, 0) + 1
        monomial = exps
    degree = sum(i * e for i, e in monomial.items())
    if degree > ctx.dim:
        return ChowClass(ctx, {})
    out = ctx.one()
    for i, e in sorted(monomial.items()):
        for _ in range(e):
            out = out * ctx.chern(i, bundle)
    return out


# ---------------------------------------------------------------------------
# splitting principle


def _shift(p: np.ndarray, axis: int) -> np.ndarray:
    out = np.zeros_like(p)
    src = [slice(None)] * p.ndim
    dst = [slice(None)] * p.ndim
    src[axis] = slice(0, p.shape[axis] - 1)
    dst[axis] = slice(1, None)
    out[tuple(dst)] = p[tuple(src)]
    return out


def _times_linear(p: np.ndarray, root: tuple[int, ...]) -> np.ndarray:
    out = np.zeros_like(p)
    for axis, a in enumerate(root):
        if a:
            out = out + a * _shift(p, axis)
    return out


def _degree_mask(k: int, cap: int, max_degree: int) -> np.ndarray:
    grids = np.indices((cap + 1,) * k).sum(axis=0)
    return grids <= max_degree


def root_polynomial(rts: Mapping, k: int, cap: int, max_degree: int,
                    top_only: bool = False) -> np.ndarray:
    """Dense truncated expansion of prod (1 + r)^m (or prod r^m if ``top_only``)."""
    mask = _degree_mask(k, cap, max_degree)
    p = np.zeros((cap + 1,) * k, dtype=object)
    p[(0,) * k] = 1
    for root, mult in sorted(rts.items()):
        if not any(root):
            if top_only and mult > 0:
                return np.zeros_like(p)
            continue
        if top_only:
            if mult < 0:
                raise ValueError("top Chern class of a virtual bundle is not defined")
            for _ in range(mult):
                p = _times_linear(p, root)
            continue
        if mult > 0:
            for _ in range(mult):
                p = p + _times_linear(p, root)
                p[~mask] = 0
        else:
            for _ in range(-mult):
                # q = p / (1 + r): iterate q <- p - r q; r is nilpotent here
                q = p.copy()
                for _ in range(max_degree + 1):
                    q = p - _times_linear(q, root)
                    q[~mask] = 0
                p = q
    p[~mask] = 0
    return p


def polynomial_to_class(ctx: GrassCtx, p: np.ndarray,
                        degrees: Iterable[int] | None = None) -> ChowClass:
    """Read a symmetric polynomial in the roots of E in the Schubert basis."""
    basis = ctx.basis() if degrees is None else [
        lam for d in degrees for lam in ctx.basis(d)]
    if not basis:
        return ChowClass(ctx, {})
    cands = np.array([lam.padded(ctx.k) for lam in basis])
    coeffs = alternant_coefficients(p, cands)
    return ChowClass(ctx, {lam: int(c) for lam, c in zip(basis, coeffs) if c})


def chern_of_bundle(ctx: GrassCtx, b: bx.BundleExpr,
                    up_to_degree: int | None = None) -> ChowClass:
    """Total Chern class of ``b`` truncated at ``up_to_degree`` (default: dim)."""
    d = ctx.dim if up_to_degree is None else min(up_to_degree, ctx.dim)
    rts = bx.roots(b, ctx.k, ctx.n)
    p = root_polynomial(rts, ctx.k, min(ctx.n - 1, d), d)
    return polynomial_to_class(ctx, p, range(d + 1))


def top_chern(ctx: GrassCtx, b: bx.BundleExpr) -> ChowClass:
    """c_r(b) for a genuine bundle of rank r, as the product of its roots."""
    rts = bx.roots(b, ctx.k, ctx.n)
    r = bx.virtual_rank(rts)
    if r > ctx.dim:
        return ChowClass(ctx, {})
    p = root_polynomial(rts, ctx.k, min(ctx.n - 1, r), r, top_only=True)
    return polynomial_to_class(ctx, p, [r])


def chern_class(ctx: GrassCtx, b: bx.BundleExpr, i: int) -> ChowClass:
    return chern_of_bundle(ctx, b, i).part(i)


def tangent_chern(ctx: GrassCtx, up_to_degree: int | None = None) -> ChowClass:
    return chern_of_bundle(ctx, bx.tangent(), up_to_degree)


def inverse_class(x: ChowClass, up_to_degree: int | None = None) -> ChowClass:
    """Inverse of a class with constant term 1."""
    ctx = x.ctx
    d = ctx.dim if up_to_degree is None else up_to_degree
    if x[()] != 1:
        raise ValueError("constant term must be 1")
    nil = (x - 1).truncate(d)
    out, term = ctx.one(), ctx.one()
    for _ in range(d):
        term = (-(term * nil)).truncate(d)
        if not term.terms:
            break
        out = out + term
    return out


# ---------------------------------------------------------------------------
# the fourfold Y in G(6,10)

G610 = GrassCtx(6, 10)


def wedge3_E() -> bx.BundleExpr:
    return bx.taut_dual().wedge(3)


@lru_cache(maxsize=None)
def y_class() -> ChowClass:
    """c_20 of the third exterior power of E_6 on G(6,10): the class of Y."""
    return top_chern(G610, wedge3_E())


@dataclass(frozen=True)
class C2Result:
    c2: ChowClass
    coefficients: tuple[int, int]  # over (c1^2, c2) of E_6


def restricted_c2_of_Y() -> C2Result:
    """c_2 of the tangent bundle of Y from c(T_G) = c(T_Y) c(wedge^3 E_6)."""
    ctx = G610
    c_t = tangent_chern(ctx, 2)
    c_f = chern_of_bundle(ctx, wedge3_E(), 2)
    c_ty = (c_t * inverse_class(c_f, 2)).truncate(2)
    if c_ty.part(1).terms:
        raise ArithmeticError(f"c_1(T_Y) should vanish, got {c_ty.part(1)}")
    c2 = c_ty.part(2)
    # c1^2 = s(2) + s(1,1), c2 = s(1,1)
    a = c2[(2,)]
    b = c2[(1, 1)] - a
    return C2Result(c2, (a, b))


TAUTOLOGICAL_MONOMIALS = {
    "c1c3": (1, 3),
    "c4": (4,),
    "c1^2c2": (1, 1, 2),
    "c2^2": (2, 2),
    "c1^4": (1, 1, 1, 1),
}


def tautological_numbers() -> dict[str, int]:
    """Degrees of c_20(wedge^3 E_6) times degree-4 monomials in c_i(E_6)."""
    y = y_class()
    return {name: integrate_product(y, giambelli_reduce(G610, mono))
            for name, mono in TAUTOLOGICAL_MONOMIALS.items()}


def c2_pairing() -> int:
    """Degree of c_2(T_Y) c_1^2 on Y."""
    c2 = restricted_c2_of_Y().c2
    return integrate_product(y_class(), c2, giambelli_reduce(G610, (1, 1)))


class RationalPolynomial:
    """Univariate polynomial with exact rational coefficients."""

    def __init__(self, coeffs: Mapping[int, Fraction | int] = ()):
        self.coeffs = {int(e): Fraction(c) for e, c in dict(coeffs).items() if c}

    def __call__(self, x) -> Fraction:
        return sum((c * Fraction(x) ** e for e, c in self.coeffs.items()), Fraction(0))

    def coeff(self, e: int) -> Fraction:
        return self.coeffs.get(e, Fraction(0))

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            mono = "" if e == 0 else ("k" if e == 1 else f"k^{e}")
            if e == 0:
                parts.append(str(c))
            else:
                parts.append(f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def riemann_roch_hilbert(chi_o: int | None = None) -> RationalPolynomial:
    """chi(Y, O(k)) = chi(O) + (c2(T) c1^2 / 24) k^2 + (c1^4 / 24) k^4.

    The constant term comes from the Koszul/Bott computation unless given.
    """
    if chi_o is None:
        from .bwb import koszul_euler
        chi_o = koszul_euler(0)
    nums = tautological_numbers()
    return RationalPolynomial({0: chi_o,
                               2: Fraction(c2_pairing(), 24),
                               4: Fraction(nums["c1^4"], 24)})


# ---------------------------------------------------------------------------
# dual varieties and the K3 model


def class_formula_degree(c_tangent: ChowClass, h: ChowClass, dim: int | None = None) -> int:
    """|sum_i (-1)^i (i+1) int c_{m-i}(T) h^i| for an embedded smooth variety."""
    ctx = c_tangent.ctx
    m = ctx.dim if dim is None else dim
    total = 0
    hp = ctx.one()
    for i in range(m + 1):
        total += (-1) ** i * (i + 1) * schubert_integrate(c_tangent.part(m - i) * hp)
        hp = hp * h
    return abs(total)


def dual_variety_degree(ctx: GrassCtx, hyperplane_multiple: int = 1) -> int:
    """Degree of the dual of G(k,n) embedded by O(hyperplane_multiple)."""
    return class_formula_degree(tangent_chern(ctx), ctx.sigma((1,), hyperplane_multiple))


def companion_class_degree() -> int:
    """Degree of c_3(wedge^2 E_3)^3 on G(3,6)."""
    ctx = GrassCtx(3, 6)
    c3 = top_chern(ctx, bx.taut_dual().wedge(2))
    return schubert_integrate(c3 ** 3)


@dataclass(frozen=True)
class K3Model:
    degree: int
    expected_dimension: int
    determinant: ChowClass
    canonical: ChowClass = field(repr=False)

    @property
    def determinant_identity(self) -> bool:
        return self.determinant == self.canonical


def k3_model() -> K3Model:
    """Zero locus of a section of O(1) + (wedge^2 E_3)^3 on G(3,7)."""
    ctx = GrassCtx(3, 7)
    w2 = bx.taut_dual().wedge(2)
    bundle = bx.line(1) + 3 * w2
    rank = bundle.rank(ctx.k, ctx.n)
    det = chern_of_bundle(ctx, bundle, 1).part(1)
    canonical = tangent_chern(ctx, 1).part(1)
    c3 = top_chern(ctx, w2)
    cls = ctx.sigma((1,)) * c3 ** 3
    degree = schubert_integrate(cls * ctx.sigma((1,)) ** 2)
    return K3Model(degree, ctx.dim - rank, det, canonical)


def k3_model_degree() -> int:
    return k3_model().degree
