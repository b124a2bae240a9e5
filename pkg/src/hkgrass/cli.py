"""Command-line front end: ``hkgrass <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable


@dataclass
class Entry:
    label: str
    computed: Any
    expected: Any = None
    elapsed_ms: float | None = None

    @property
    def match(self) -> bool:
        return self.expected is None or self.expected == self.computed


@dataclass
class Report:
    title: str
    entries: list[Entry] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, label: str, fn: Callable[[], Any], expected: Any = None) -> Any:
        start = time.perf_counter()
        value = fn()
        self.entries.append(Entry(label, value, expected,
                                  (time.perf_counter() - start) * 1000.0))
        return value

    @property
    def ok(self) -> bool:
        return all(e.match for e in self.entries)

    def to_json(self, timings: bool = True) -> str:
        rows = [{"label": e.label,
                 "expected": _jsonable(e.expected),
                 "computed": _jsonable(e.computed),
                 "match": e.match,
                 "elapsed_ms": round(e.elapsed_ms, 3) if timings and e.elapsed_ms is not None
                 else None}
                for e in self.entries]
        return json.dumps({"report": self.title, "entries": rows, "notes": self.notes,
                           "all_match": self.ok}, indent=2)

    def to_table(self, timings: bool = True) -> str:
        head = ["label", "expected", "computed", "match"] + (["ms"] if timings else [])
        body = []
        for e in self.entries:
            row = [e.label, "" if e.expected is None else _text(e.expected), _text(e.computed),
                   "yes" if e.match else "NO"]
            if timings:
                row.append(f"{e.elapsed_ms:.0f}" if e.elapsed_ms is not None else "")
            body.append(row)
        widths = [max(len(str(r[i])) for r in [head] + body) for i in range(len(head))]
        line = lambda r: "  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip()
        out = [self.title, line(head), line(["-" * w for w in widths])]
        out += [line(r) for r in body]
        out += [f"note: {n}" for n in self.notes]
        out.append("all match" if self.ok else "MISMATCH")
        return "\n".join(out)


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


def _text(x) -> str:
    j = _jsonable(x)
    return j if isinstance(j, str) else json.dumps(j)


# ---------------------------------------------------------------------------
# reports


def reference_numbers_report() -> Report:
    from . import bwb, chow, hilb2
    from .hilb2 import BBVector

    rep = Report("reference numbers")
    nums: dict = {}
    start = time.perf_counter()
    nums.update(chow.tautological_numbers())
    elapsed = (time.perf_counter() - start) * 1000.0
    for name, val in (("c1c3", 330), ("c4", 105), ("c1^2c2", 825), ("c2^2", 477),
                      ("c1^4", 1452)):
        rep.entries.append(Entry(f"int_Y {name}", nums[name], val, elapsed))
        elapsed = 0.0
    rep.add("c2(T_Y) over (c1^2, c2)", lambda: chow.restricted_c2_of_Y().coefficients, (5, -8))
    rep.add("int_Y c2(T_Y) c1^2", chow.c2_pairing, 660)
    rep.add("chi(O_Y) by Koszul and Bott", lambda: bwb.koszul_euler(0), 3)
    rep.add("Hilbert polynomial of O_Y(1)", lambda: str(chow.riemann_roch_hilbert()),
            "3 + (55/2)*k^2 + (121/2)*k^4")
    rep.add("h^{10,10}_van(F)", lambda: bwb.griffiths_hodge_F().h_10_10_van, 20)
    rep.add("degree of the dual of G(3,10)",
            lambda: chow.dual_variety_degree(chow.GrassCtx(3, 10)), 640)
    rep.add("int_G(3,6) c3(wedge^2 E3)^3", chow.companion_class_degree, 2)
    rep.add("degree of the K3 model in G(3,7)", chow.k3_model_degree, 22)
    rep.add("q(10h - 33delta), type",
            lambda: _bb_summary(BBVector(10, -33)), [22, 11, "nonsplit"])
    rep.notes.append("hilbert polynomial from S^[2] side: "
                     + str(hilb2.hilb2_hilbert_polynomial()))
    return rep


def _bb_summary(x) -> list:
    from .hilb2 import bb_square, polarization_type
    t = polarization_type(x)
    return [bb_square(x), t.d, "split" if t.split else "nonsplit"]


def chow_report(what: str, k: int, n: int) -> Report:
    from . import chow
    rep = Report(f"chow {what}")
    if what == "intersections":
        nums = chow.tautological_numbers()
        expected = {"c1c3": 330, "c4": 105, "c1^2c2": 825, "c2^2": 477, "c1^4": 1452}
        for name, val in nums.items():
            rep.entries.append(Entry(f"int_Y {name}", val, expected[name]))
        rep.add("c2(T_Y) over (c1^2, c2)", lambda: chow.restricted_c2_of_Y().coefficients,
                (5, -8))
        rep.add("int_Y c2(T_Y) c1^2", chow.c2_pairing, 660)
    elif what == "dual-degree":
        ctx = chow.GrassCtx(k, n)
        exp = 640 if (k, n) == (3, 10) else None
        rep.add(f"degree of the dual of G({k},{n})", lambda: chow.dual_variety_degree(ctx), exp)
    elif what == "k3-degree":
        model = chow.k3_model()
        rep.entries.append(Entry("degree", model.degree, 22))
        rep.entries.append(Entry("expected dimension", model.expected_dimension, 2))
        rep.entries.append(Entry("det = c1(T)", model.determinant_identity, True))
        rep.add("int_G(3,6) c3(wedge^2 E3)^3", chow.companion_class_degree, 2)
    return rep


def _parse_range(text: str | None) -> tuple[int | None, int | None]:
    if not text:
        return None, None
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("range must look like A..B")
    return int(lo), int(hi)


def bwb_report(what: str, twist: int, name: str | None, rng_text: str | None,
               budget: float | None) -> Report:
    from . import bwb
    rep = Report(f"bwb {what}")
    if what == "euler":
        from .chow import riemann_roch_hilbert
        rep.add(f"chi(Y, O({twist})) by Koszul", lambda: bwb.koszul_euler(twist),
                riemann_roch_hilbert(3)(twist))
        res = bwb.koszul_resolution()
        rep.entries.append(Entry("sum with wedge^i F^* at t=0", res.dual_sum, 3))
        rep.entries.append(Entry("sum with wedge^i F at t=0", res.plain_sum))
        rep.notes.append(f"the dual reading matches chi(O_Y) ({res.matching})")
    elif what == "hodge-bound":
        rep.add("Koszul bounds for h^q(O_Y), q=0..4",
                lambda: [bwb.koszul_hodge_bound(q) for q in range(5)], [1, 0, 1, 0, 1])
        g = bwb.griffiths_hodge_F()
        rep.entries.append(Entry("h^{9,11}(F)", g.h_9_11, 1))
        rep.entries.append(Entry("h^{10,10}_van(F)", g.h_10_10_van, 20))
        rep.entries.append(Entry("h^0(G(3,10), O(1))", g.sections_o1, 120))
        rep.entries.append(Entry("h^0(G(3,10), T)", g.sections_tangent, 99))
    elif what == "sweep":
        lo, hi = _parse_range(rng_text)
        sw = rep.add(f"sweep {name}", lambda: bwb.vanishing_sweep(name, lo, hi, budget))
        rep.entries[-1] = Entry(f"nonzero groups in sweep {name}", len(sw.nonzero), 0,
                                rep.entries[-1].elapsed_ms)
        rep.entries.append(Entry("indices covered", len(sw.covered)))
        rep.entries.append(Entry("indices skipped (budget)", len(sw.skipped)))
        for idx, deg, dim in sw.nonzero[:50]:
            rep.notes.append(f"index {idx}: H^{deg} has dimension {dim}")
        if len(sw.nonzero) > 50:
            rep.notes.append(f"... {len(sw.nonzero) - 50} more")
    return rep


def plethysm_report(i: int, n: int) -> Report:
    from math import comb
    from .symcore import schur_dimension, wedge_plethysm
    rep = Report(f"wedge^{i}(wedge^3 C^{n})")
    dec = rep.add("number of irreducible summands", lambda: wedge_plethysm(i, n))
    rep.entries[-1] = Entry("number of irreducible summands", len(dec.terms), None,
                            rep.entries[-1].elapsed_ms)
    for lam, c in dec.terms.items():
        rep.notes.append(f"{c} x S_{tuple(lam)}  (dim {schur_dimension(lam, n)})")
    rep.entries.append(Entry("dimension sum", dec.dimension(n), comb(comb(n, 3), i)))
    return rep


def hilb2_report(what: str) -> Report:
    from . import hilb2
    from .chow import riemann_roch_hilbert
    from .hilb2 import BBVector
    rep = Report(f"hilb2 {what}")
    if what == "bb":
        h = BBVector(10, -33)
        rep.add("q(10h - 33delta)", lambda: hilb2.bb_square(h), 22)
        t = hilb2.polarization_type(h)
        rep.entries.append(Entry("d", t.d, 11))
        rep.entries.append(Entry("type", "split" if t.split else "nonsplit", "nonsplit"))
        rep.add("q(delta)", lambda: hilb2.bb_square(BBVector(0, 1)), -2)
        rep.add("q(h_S)", lambda: hilb2.bb_square(BBVector(1, 0)), 22)
    elif what == "blowup":
        rep.add("(10(l1+l2) - 33e)^4", hilb2.hilb2_degree_upstairs, 2904)
        rep.add("r^*c2 over (o1, o2, e^2)", lambda: _c2_vector(hilb2.derive_c2_upstairs()),
                (24, 24, -3))
        rep.add("(10(l1+l2) - 33e)^2 r^*c2", hilb2.hilb2_c2_pairing, 1320)
    elif what == "hilbert":
        a = hilb2.hilb2_hilbert_polynomial()
        b = riemann_roch_hilbert()
        rep.entries.append(Entry("from S^[2]", str(a), "3 + (55/2)*k^2 + (121/2)*k^4"))
        rep.entries.append(Entry("from G(6,10)", str(b), "3 + (55/2)*k^2 + (121/2)*k^4"))
        rep.entries.append(Entry("agree", a == b, True))
        rep.entries.append(Entry("value at k=1", a(1), 91))
        rep.entries.append(Entry("value at k=2", a(2), 1081))
    return rep


def _c2_vector(c) -> tuple:
    return (c.coefficient(o1=1), c.coefficient(o2=1), c.coefficient(e=2))


def trilab_report(what: str, prime: int, seed: int, instances: int,
                  sigma_file: str | None) -> Report:
    from . import trilab as tl
    F = tl.make_field(prime)
    rep = Report(f"trilab {what} over {F} (seed {seed})")
    if what in ("config-a", "config-b"):
        which = what[-1].upper()
        cfg = rep.add(f"build configuration {which}",
                      lambda: tl.build_configuration(which, F, seed))
        rep.entries[-1].computed = "ok"
        z = rep.add("|Z & Z'|", lambda: len(tl.z_intersect(cfg)), 0 if which == "A" else 1)
        rep.entries.append(Entry("line C in Y", tl.line_in_Y(cfg.sigma, cfg.V5, cfg.V7), True))
        rep.entries.append(Entry("line C' in Y", tl.line_in_Y(cfg.sigma, cfg.V5p, cfg.V7p),
                                 True))
        if which == "B" and z == 1:
            pt = tl.z_intersect(cfg)[0]
            rep.entries.append(Entry("point = V50 + V'50",
                                     pt == (cfg.V5 & cfg.V7p) + (cfg.V5p & cfg.V7), True))
            rep.entries.append(Entry("point in F_sigma", tl.in_F(cfg.sigma, pt), True))
    elif what == "companions":
        if not prime:
            raise SystemExit("companions needs --prime")
        good, bad = 0, []
        start = time.perf_counter()
        for s in range(seed, seed + instances):
            inst = tl.companion_instance(F, s)
            res = tl.count_companions(inst.sigma, inst.W, inst.W6)
            if res.count == 2 and res.spans_W6:
                good += 1
            else:
                bad.append((s, res.count))
        rep.entries.append(Entry("instances with exactly 2 companions spanning W6",
                                 good, None, (time.perf_counter() - start) * 1000.0))
        rep.entries.append(Entry("fraction >= 0.9", good >= 0.9 * instances, True))
        for s, c in bad:
            rep.notes.append(f"seed {s}: {c} companions")
    elif what == "scan":
        if sigma_file:
            with open(sigma_file) as fh:
                sigma = tl.Trivector.from_text(fh.read())
            pts = rep.add("singular points", lambda: tl.scan_singular_points(sigma))
            rep.entries[-1].computed = len(pts)
        else:
            rng = random.Random(seed)
            sigma = tl.singular_trivector(F, rng)
            W = tl.Subspace.coordinate(F, [1, 2, 3])
            pts = rep.add("singular points", lambda: tl.scan_singular_points(sigma))
            rep.entries[-1].computed = len(pts)
            rep.entries.append(Entry("designated W found", W in pts, True))
        rep.entries.append(Entry("all verified by singular_at",
                                 all(tl.singular_at(sigma, p) for p in pts), True))
        for p in pts:
            rep.notes.append(repr(p))
    elif what == "g27":
        rng = random.Random(seed)
        sigma, V8, x = _g27_instance(F, rng)
        rep.add("crafted sigma: Int_x sigma vanishes on V8",
                lambda: tl.g27_test(sigma, V8, x), True)
        generic = tl.random_trivector(F, rng)
        rep.add("random sigma", lambda: tl.g27_test(generic, V8, x), False)
    return rep


def _g27_instance(F, rng):
    """sigma with sigma(e1, e_j, e_k) = 0 for 1 < j < k <= 8."""
    from .trilab import Subspace, random_trivector
    from itertools import combinations
    fixed = {(0, j, k): 0 for j, k in combinations(range(1, 8), 2)}
    sigma = random_trivector(F, rng, 10, fixed)
    V8 = Subspace.coordinate(F, range(1, 9))
    x = [F.one] + [F.zero] * 9
    return sigma, V8, x


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--no-timings", action="store_true",
                        help="omit elapsed times (byte-stable output)")
    common.add_argument("--budget-seconds", type=float, default=None)

    p = argparse.ArgumentParser(prog="hkgrass", parents=[common],
                                description="Exact computations on G(6,10) and friends.")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("paper-numbers", parents=[common],
                   help="recompute every reference value in one report")

    c = sub.add_parser("chow", parents=[common], help="Schubert calculus")
    c.add_argument("what", choices=("intersections", "dual-degree", "k3-degree"))
    c.add_argument("--k", type=int, default=3)
    c.add_argument("--n", type=int, default=10)

    b = sub.add_parser("bwb", parents=[common], help="Borel-Weil-Bott")
    b.add_argument("what", choices=("euler", "hodge-bound", "sweep"))
    b.add_argument("name", nargs="?", default=None)
    b.add_argument("--twist", type=int, default=0)
    b.add_argument("--range", dest="range_", default=None, metavar="A..B")

    pl = sub.add_parser("plethysm", parents=[common], help="wedge^i(wedge^3 C^n)")
    pl.add_argument("--i", type=int, required=True)
    pl.add_argument("--n", type=int, default=6)

    h = sub.add_parser("hilb2", parents=[common], help="Hilbert square arithmetic")
    h.add_argument("what", choices=("bb", "blowup", "hilbert"))

    t = sub.add_parser("trilab", parents=[common], help="trivector experiments")
    t.add_argument("what", choices=("config-a", "config-b", "companions", "scan", "g27"))
    t.add_argument("--prime", type=int, default=None, help="0 or omitted: rationals")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--instances", type=int, default=50)
    t.add_argument("--sigma", default=None, help="trivector file (scan)")
    return p


def run(argv: list[str] | None = None) -> tuple[Report, int]:
    args = build_parser().parse_args(argv)
    cmd = args.command
    if cmd == "paper-numbers":
        rep = reference_numbers_report()
    elif cmd == "chow":
        rep = chow_report(args.what, args.k, args.n)
    elif cmd == "bwb":
        if args.what == "sweep" and not args.name:
            raise SystemExit("bwb sweep needs a sweep name: " + ", ".join(_sweeps()))
        rep = bwb_report(args.what, args.twist, args.name, args.range_, args.budget_seconds)
    elif cmd == "plethysm":
        rep = plethysm_report(args.i, args.n)
    elif cmd == "hilb2":
        rep = hilb2_report(args.what)
    else:
        prime = args.prime
        if prime is None:
            prime = {"companions": 5, "scan": 2}.get(args.what, 0)
        rep = trilab_report(args.what, prime, args.seed, args.instances, args.sigma)
    return rep, 0 if rep.ok else 1


def _sweeps():
    from .bwb import SWEEPS
    return SWEEPS


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rep, status = run(argv)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    timings = not args.no_timings
    print(rep.to_json(timings) if args.format == "json" else rep.to_table(timings))
    return status


if __name__ == "__main__":
    sys.exit(main())
