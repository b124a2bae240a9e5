"""Slow, independent reference implementations used only by the tests."""
from __future__ import annotations

import itertools
from collections import Counter
from math import comb


def horizontal_strips(lam: tuple, a: int):
    """Partitions nu containing lam with nu/lam a horizontal strip of size a."""
    lam = tuple(lam) + (0,)

    def rec(i, left, acc):
        if i == len(lam):
            if not left:
                yield tuple(x for x in acc if x)
            return
        cap = left if i == 0 else min(left, lam[i - 1] - lam[i])
        for add in range(cap, -1, -1):
            yield from rec(i + 1, left - add, acc + [lam[i] + add])

    yield from rec(0, a, [])


def _sign(perm) -> int:
    inv = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def lr_by_pieri(lam, mu) -> Counter:
    """s_lam * s_mu via Jacobi-Trudi for s_mu and repeated Pieri rules."""
    lam, mu = tuple(lam), tuple(mu)
    ell = len(mu)
    out: Counter = Counter()
    for perm in itertools.permutations(range(ell)):
        parts = [mu[i] - i + perm[i] for i in range(ell)]
        if any(a < 0 for a in parts):
            continue
        cur = Counter({lam: 1})
        for a in parts:
            nxt: Counter = Counter()
            for nu, c in cur.items():
                for rho in horizontal_strips(nu, a):
                    nxt[rho] += c
            cur = nxt
        for nu, c in cur.items():
            out[nu] += _sign(perm) * c
    return Counter({nu: c for nu, c in out.items() if c})


def ssyt_count(lam, n: int) -> int:
    """Number of semistandard tableaux of shape lam with entries in 1..n (brute force)."""
    lam = tuple(lam)
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    fill: dict = {}

    def rec(k):
        if k == len(cells):
            return 1
        i, j = cells[k]
        lo = 1
        if j:
            lo = max(lo, fill[(i, j - 1)])
        if i:
            lo = max(lo, fill[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, n + 1):
            fill[(i, j)] = v
            total += rec(k + 1)
        fill.pop((i, j), None)
        return total

    return rec(0)


def wedge3_dimension(i: int, n: int) -> int:
    return comb(comb(n, 3), i)
