"""Exact scalar fields: the rationals and prime fields."""
from __future__ import annotations

import random
from fractions import Fraction


class Rationals:
    name = "Q"
    is_finite = False
    characteristic = 0

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    zero = Fraction(0)
    one = Fraction(1)

    def inv(self, x) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def random(self, rng: random.Random, nonzero: bool = False) -> Fraction:
        while True:
            x = Fraction(rng.randint(-9, 9))
            if x or not nonzero:
                return x

    def format(self, x) -> str:
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def parse(self, s: str) -> Fraction:
        return Fraction(s)

    def header(self) -> str:
        return "Q"

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self) -> str:
        return "Q"


class PrimeField:
    is_finite = True

    def __init__(self, p: int):
        p = int(p)
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    @property
    def name(self) -> str:
        return f"F{self.p}"

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return x.numerator * self.inv(x.denominator % self.p) % self.p
        return int(x) % self.p

    def inv(self, x) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(x, -1, self.p)

    def random(self, rng: random.Random, nonzero: bool = False) -> int:
        return rng.randrange(1, self.p) if nonzero else rng.randrange(self.p)

    def format(self, x) -> str:
        return str(int(x) % self.p)

    def parse(self, s: str) -> int:
        return self(Fraction(s))

    def header(self) -> str:
        return f"Fp {self.p}"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self) -> str:
        return f"F_{self.p}"


QQ = Rationals()


def field_from_header(line: str):
    parts = line.split()
    if parts == ["Q"]:
        return QQ
    if len(parts) == 2 and parts[0] == "Fp":
        return PrimeField(int(parts[1]))
    raise ValueError(f"bad field header {line!r}")


def make_field(prime: int | None):
    """F_p for a prime, the rationals for None or 0."""
    return QQ if not prime else PrimeField(prime)
