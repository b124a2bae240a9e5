"""One test per acceptance criterion; each prints a PASS/FAIL line."""
import random
import time
from math import comb

import pytest

from hkgrass import bwb, chow, hilb2
from hkgrass.bwb import WeightVector, bott_resolve
from hkgrass.chow import GrassCtx, schubert_integrate
from hkgrass.hilb2 import BBVector, e, o1, o2
from hkgrass.symcore import lr_multiply, partitions, wedge_plethysm
from hkgrass.trilab import (QQ, PrimeField, build_configuration, companion_instance,
                            count_companions, line_in_Y, z_intersect)
from oracles import lr_by_pieri


@pytest.fixture
def verdict(capsys):
    def emit(number: int, ok: bool, detail: str, elapsed: float | None = None):
        tail = f" ({elapsed:.1f} s)" if elapsed is not None else ""
        with capsys.disabled():
            print(f"\n[criterion {number:2d}] {'PASS' if ok else 'FAIL'}: {detail}{tail}")
        return ok
    return emit


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def test_01_intersection_numbers(verdict):
    nums, dt = timed(chow.tautological_numbers)
    want = {"c1c3": 330, "c4": 105, "c1^2c2": 825, "c2^2": 477, "c1^4": 1452}
    ok = nums == want and dt <= 120
    assert verdict(1, ok, f"{nums}", dt)


def test_02_tangent_c2(verdict):
    chow.y_class()
    (res, pairing), dt = timed(lambda: (chow.restricted_c2_of_Y(), chow.c2_pairing()))
    ok = res.coefficients == (5, -8) and pairing == 660 and dt <= 10
    assert verdict(2, ok, f"c2(T_Y) = {res.coefficients[0]}c1^2 + ({res.coefficients[1]})c2, "
                          f"pairing {pairing}", dt)


def test_03_hilbert_polynomial(verdict):
    a, b = chow.riemann_roch_hilbert(), hilb2.hilb2_hilbert_polynomial()
    ok = str(a) == "3 + (55/2)*k^2 + (121/2)*k^4" and a == b
    assert verdict(3, ok, f"chow: {a}; hilb2: {b}")


def test_04_koszul_euler(verdict):
    poly = chow.riemann_roch_hilbert(3)
    vals, dt = timed(lambda: {t: bwb.koszul_euler(t) for t in range(-3, 4)})
    ok = ([vals[t] for t in (0, 1, 2)] == [3, 91, 1081]
          and all(vals[t] == poly(t) for t in vals) and dt <= 600)
    assert verdict(4, ok, f"chi(O_Y(t)), t=-3..3: {[vals[t] for t in range(-3, 4)]}", dt)


def test_05_hodge_bound(verdict):
    bound = [bwb.koszul_hodge_bound(q) for q in range(5)]
    assert verdict(5, bound == [1, 0, 1, 0, 1], f"bound vector {bound}")


@pytest.mark.xfail(strict=True, reason="H^1(G(3,10), Omega^3(2)) has dimension 2310; "
                                       "Bott vanishing fails on G(3,10)")
def test_06_bott_vanishing_sweep(verdict):
    rep, dt = timed(lambda: bwb.vanishing_sweep("omega_twists", 1, 10))
    ok = rep.complete and rep.clean and dt <= 300
    sample = ", ".join(f"(j={j},k={t}) H^{d}={m}" for (j, t), d, m in rep.nonzero[:3])
    verdict(6, ok, f"{len(rep.nonzero)} nonzero groups H^i(Omega^j(k)), i>0; e.g. {sample}",
            dt)
    assert ok


def test_07_griffiths_count(verdict):
    g = bwb.griffiths_hodge_F()
    ok = (g.h_9_11, g.h_10_10_van, g.sections_o1, g.sections_tangent) == (1, 20, 120, 99)
    assert verdict(7, ok, f"{{{g.h_9_11}, {g.h_10_10_van}}} from "
                          f"{g.sections_o1} - 1 - {g.sections_tangent}")


def test_08_dual_degree(verdict):
    deg, dt = timed(lambda: chow.dual_variety_degree(GrassCtx(3, 10)))
    assert verdict(8, deg == 640 and dt <= 60, f"degree {deg}", dt)


def test_09_companion_class_and_k3(verdict):
    (two, model), dt = timed(lambda: (chow.companion_class_degree(), chow.k3_model()))
    ok = two == 2 and model.degree == 22 and model.determinant_identity and dt <= 10
    assert verdict(9, ok, f"c3^3 = {two}, K3 degree {model.degree}, "
                          f"det identity {model.determinant_identity}", dt)


def test_10_lattice(verdict):
    h = BBVector(10, -33)
    t = hilb2.polarization_type(h)
    q = hilb2.bb_eval(h, h)
    ok = (q, t.d, t.split) == (22, 11, False)
    assert verdict(10, ok, f"q = {q}, d = {t.d}, {'split' if t.split else 'nonsplit'}")


def test_11_blowup_numbers(verdict):
    deg, pair, c2 = (hilb2.hilb2_degree_upstairs(), hilb2.hilb2_c2_pairing(),
                     hilb2.derive_c2_upstairs())
    ok = deg == 2904 and pair == 1320 and c2 == 24 * o1 + 24 * o2 - 3 * e ** 2
    assert verdict(11, ok, f"{deg}, {pair}, c2 = {c2}")


def test_12_configurations(verdict):
    def sweep():
        bad = []
        for F in (PrimeField(101), QQ):
            for seed in range(20):
                a = build_configuration("A", F, seed)
                b = build_configuration("B", F, seed)
                zb = z_intersect(b)
                good = (z_intersect(a) == []
                        and zb == [(b.V5 & b.V7p) + (b.V5p & b.V7)]
                        and all(line_in_Y(c.sigma, v5, v7) for c in (a, b)
                                for v5, v7 in ((c.V5, c.V7), (c.V5p, c.V7p))))
                if not good:
                    bad.append((F, seed))
        return bad
    bad, dt = timed(sweep)
    assert verdict(12, not bad and dt <= 30, f"40 seeds x 2 configurations, failures {bad}", dt)


def test_13_companion_count(verdict):
    F = PrimeField(5)

    def sweep():
        misses = []
        for seed in range(50):
            inst = companion_instance(F, seed)
            res = count_companions(inst.sigma, inst.W, inst.W6)
            if not (res.count == 2 and res.spans_W6):
                misses.append((seed, res.count))
        return misses
    misses, dt = timed(sweep)
    good = 50 - len(misses)
    ok = good >= 45 and dt <= 300
    assert verdict(13, ok, f"{good}/50 instances with two companions spanning W6; "
                           f"counterexample seeds {misses}", dt)


def test_14_property_suites(verdict):
    def suites():
        small = [lam for n in range(7) for lam in partitions(n)]
        lr = all({tuple(k): v for k, v in lr_multiply(a, b).terms.items()} == dict(lr_by_pieri(a, b))
                 for a in small for b in small)
        pd = True
        for k, n in ((3, 6), (2, 5)):
            ctx = GrassCtx(k, n)
            for lam in ctx.basis():
                for mu in ctx.basis(ctx.dim - lam.weight):
                    val = schubert_integrate(ctx.sigma(lam) * ctx.sigma(mu))
                    pd &= val == int(mu == lam.complement(k, n - k))
        pl = all(wedge_plethysm(i, 6).dimension(6) == comb(20, i) for i in range(21))
        rng = random.Random(2024)
        serre = True
        for _ in range(100):
            n = rng.randint(2, 8)
            k = rng.randint(1, n - 1)
            block = lambda m: tuple(sorted((rng.randint(-6, 6) for _ in range(m)), reverse=True))
            w = WeightVector(block(k), block(n - k))
            h, hs = bott_resolve(w), bott_resolve(w.serre())
            serre &= h.is_zero == hs.is_zero and (
                h.is_zero or (hs.degree == k * (n - k) - h.degree and hs.dimension == h.dimension))
        return {"LR": lr, "Poincare": pd, "plethysm": pl, "Serre": serre}
    res, dt = timed(suites)
    ok = all(res.values()) and dt <= 600
    assert verdict(14, ok, f"{res}", dt)
