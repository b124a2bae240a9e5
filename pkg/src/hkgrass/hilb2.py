"""Lattice and intersection arithmetic on the Hilbert square of a degree-22 K3.

H^2(S^[2], Z) contains Z h_S + Z delta with q(h_S) = 22, q(delta) = -2 and
h_S orthogonal to delta.  Intersection numbers on S^[2] are computed upstairs
on the blow-up of S x S along the diagonal, which maps 2:1 onto S^[2].

Symbols on the blow-up: l1, l2 (pullbacks of the polarization from the two
factors, degree 1), o1, o2 (pullbacks of the point class, degree 2) and e
(the exceptional divisor, degree 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping

from .chow import RationalPolynomial

GENUS = 12
H2 = 2 * GENUS - 2  # h_S^2 on the surface
EULER_S = 24  # c_2(T_S)


@dataclass(frozen=True)
class BBVector:
    """a * h_S + d * delta."""

    a: int
    d: int

    def __add__(self, other: "BBVector") -> "BBVector":
        return BBVector(self.a + other.a, self.d + other.d)

    def __rmul__(self, m: int) -> "BBVector":
        return BBVector(m * self.a, m * self.d)

    def __str__(self) -> str:
        return f"{self.a}h + {self.d}delta" if self.d >= 0 else f"{self.a}h - {-self.d}delta"


def bb_eval(x: BBVector, y: BBVector) -> int:
    return H2 * x.a * y.a - 2 * x.d * y.d


def bb_square(x: BBVector) -> int:
    return bb_eval(x, x)


@dataclass(frozen=True)
class PolarizationType:
    d: int
    split: bool
    divisibility: int


def divisibility(x: BBVector) -> int:
    """gcd of q(x, y) over y in Z h_S + Z delta (h_S is primitive of square 22
    in the unimodular H^2(S), so only gcd(a, 2d) survives in the full lattice)."""
    return gcd(x.a, 2 * x.d)


def polarization_type(x: BBVector) -> PolarizationType:
    """Square 2d and split / nonsplit type of a primitive positive class.

    The nonsplit type is the orbit of divisibility 2, which exists only when
    d = -1 mod 4.
    """
    q = bb_square(x)
    if q <= 0:
        raise ValueError(f"q({x}) = {q} is not positive")
    if gcd(x.a, x.d) != 1:
        raise ValueError(f"{x} is not primitive")
    div = divisibility(x)
    d = q // 2
    if div == 2 and d % 4 != 3:
        raise ArithmeticError("divisibility 2 forces d = -1 mod 4")
    return PolarizationType(d, div == 1, div)


# ---------------------------------------------------------------------------
# polynomial classes on the blown-up product

VARS = ("l1", "l2", "o1", "o2", "e")
_DEG = (1, 1, 2, 2, 1)


class BlowupClass:
    """Polynomial in l1, l2, o1, o2, e with integer (or rational) coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, int] = ()):
        out: dict = {}
        for mono, c in dict(terms).items():
            mono = tuple(mono)
            if len(mono) != 5:
                raise ValueError("monomials have five exponents (l1, l2, o1, o2, e)")
            if c:
                out[mono] = out.get(mono, 0) + c
        self.terms = {m: c for m, c in out.items() if c}

    @classmethod
    def var(cls, name: str) -> "BlowupClass":
        mono = [0] * 5
        mono[VARS.index(name)] = 1
        return cls({tuple(mono): 1})

    @classmethod
    def const(cls, c) -> "BlowupClass":
        return cls({(0,) * 5: c})

    def degrees(self) -> set[int]:
        return {sum(e * g for e, g in zip(m, _DEG)) for m in self.terms}

    def __add__(self, other):
        other = other if isinstance(other, BlowupClass) else BlowupClass.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return BlowupClass(out)

    __radd__ = __add__

    def __neg__(self):
        return BlowupClass({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BlowupClass):
            return BlowupClass({m: c * other for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return BlowupClass(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = BlowupClass.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, BlowupClass) and self.terms == other.terms

    def coefficient(self, **exps) -> int:
        mono = tuple(exps.get(v, 0) for v in VARS)
        return self.terms.get(mono, 0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for m, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, m) if e)
            body = (mono if abs(c) == 1 else f"{abs(c)}*{mono}") if mono else str(abs(c))
            sign = "-" if c < 0 else "+"
            out = (f"-{body}" if c < 0 else body) if not out else f"{out} {sign} {body}"
        return out


l1, l2, o1, o2, e = (BlowupClass.var(v) for v in VARS)


def _surface_integral(h_exp: int, pt_exp: int) -> int:
    """int_S h^a pt^b on the K3 surface."""
    if 2 * pt_exp + h_exp != 2:
        return 0
    return H2 if h_exp == 2 else 1


def segre_N(i: int) -> int:
    """Segre classes of N = T_S restricted to the diagonal (c1 = 0, c2 = 24):
    s = 1 / c(N) = 1 - 24 pt, as numbers of points in degree 2."""
    return {0: 1, 1: 0, 2: -EULER_S}.get(i, 0)


def _monomial_integral(m: tuple) -> int:
    a1, a2, b1, b2, j = m
    if 2 * (b1 + b2) + a1 + a2 + j != 4:
        raise ValueError(f"monomial {m} is not of degree 4")
    if j == 0:
        return _surface_integral(a1, b1) * _surface_integral(a2, b2)
    if j == 1:
        # E -> Delta has 1-dimensional fibres, so e . pi^*(degree 3) = 0
        return 0
    # e^j . pi^*alpha = (-1)^(j-1) int_Delta s_{j-2}(N) . alpha|_Delta,
    # with l_i -> h and o_i -> pt on the diagonal
    h_exp, pt_exp = a1 + a2, b1 + b2
    if j == 2:
        val = _surface_integral(h_exp, pt_exp)
    elif j == 3:
        val = 0  # s_1(N) = -c_1(T_S) = 0
    else:
        val = segre_N(2)
    return (-1) ** (j - 1) * val


def blowup_integrate(x: BlowupClass) -> int:
    """Degree of a class of total degree 4 on the blown-up product."""
    if x.degrees() - {4}:
        raise ValueError(f"class has parts in degrees {sorted(x.degrees() - {4})}, need 4")
    return sum(c * _monomial_integral(m) for m, c in x.terms.items())


def _degree(m: tuple) -> int:
    return sum(a * g for a, g in zip(m, _DEG))


def _truncate(x: BlowupClass, top: int) -> BlowupClass:
    return BlowupClass({m: c for m, c in x.terms.items() if _degree(m) <= top})


def _part(x: BlowupClass, d: int) -> BlowupClass:
    return BlowupClass({m: c for m, c in x.terms.items() if _degree(m) == d})


def _inverse(x: BlowupClass, top: int) -> BlowupClass:
    nil = x - 1
    out = term = BlowupClass.const(1)
    for _ in range(top):
        term = _truncate(-(term * nil), top)
        out = out + term
    return out


def chern_of_exceptional_sheaf(m: int, top: int = 4) -> BlowupClass:
    """c(O_E(mE)) = (1 + m e) / (1 + (m - 1) e), from O((m-1)E) -> O(mE) -> O_E(mE)."""
    return _truncate((1 + m * e) * _inverse(1 + (m - 1) * e, top), top)


def upstairs_total_chern(top: int = 2) -> BlowupClass:
    """r^*c(T_{S^[2]}) on the blow-up, truncated at degree ``top``.

    Blow-up along the diagonal (codimension 2, c1(N) = 0):
        0 -> T_blowup -> pi^*T_{SxS} -> O_E(-E) -> 0.
    Double cover r ramified along E:
        0 -> T_blowup -> r^*T_{S^[2]} -> O_E(2E) -> 0.
    """
    base = (1 + EULER_S * o1) * (1 + EULER_S * o2)
    t_blowup = base * _inverse(chern_of_exceptional_sheaf(-1, top), top)
    return _truncate(t_blowup * chern_of_exceptional_sheaf(2, top), top)


def derive_c2_upstairs() -> BlowupClass:
    """r^*c_2(T_{S^[2]}) expressed in o1, o2, e^2."""
    return _part(upstairs_total_chern(2), 2)


def polarization_upstairs() -> BlowupClass:
    """r^* of 10h - 33delta: 10(l1 + l2) - 33e (since r^*delta = e)."""
    return 10 * (l1 + l2) - 33 * e


def hilb2_degree_upstairs() -> int:
    return blowup_integrate(polarization_upstairs() ** 4)


def hilb2_c2_pairing() -> int:
    """int on the blow-up of (10(l1+l2) - 33e)^2 . r^*c_2."""
    return blowup_integrate(polarization_upstairs() ** 2 * derive_c2_upstairs())


COVER_DEGREE = 2


def hilb2_hilbert_polynomial(chi_o: int = 3) -> RationalPolynomial:
    """chi(S^[2], L^k) by Riemann-Roch on a hyper-Kaehler fourfold:
    chi(O) + (c2 . L^2 / 24) k^2 + (L^4 / 24) k^4, with numbers taken upstairs
    and divided by the degree of the double cover."""
    c2l2 = Fraction(hilb2_c2_pairing(), COVER_DEGREE)
    l4 = Fraction(hilb2_degree_upstairs(), COVER_DEGREE)
    return RationalPolynomial({0: chi_o, 2: c2l2 / 24, 4: l4 / 24})


def fujiki_check(x: BBVector = BBVector(10, -33)) -> tuple[int, int]:
    """(L^4 on S^[2], 3 q(L)^2); these agree for S^[2]."""
    up = (x.a * (l1 + l2) + x.d * e) ** 4
    return Fraction(blowup_integrate(up), COVER_DEGREE), 3 * bb_square(x) ** 2
