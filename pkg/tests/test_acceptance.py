"""Acceptance criteria 1-10, each checked at its stated tolerance.

Every criterion prints one PASS/FAIL line (also collected into the terminal
summary). Run directly with ``python tests/test_acceptance.py`` or via pytest.
"""
import itertools
import json
import math
import random
import subprocess
import sys

import numpy as np

from minkowski_balls import ball, cli, covering, curves, lattice, matroid, packing, report
from minkowski_balls.numerics import pnorm

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = {}

SQ3 = math.sqrt(3)
GRID = (1.2, 1.5, 2.0, 2.3, 2.5725, 3.0, 5.0)


class Checks:
    def __init__(self):
        self.failed = []
        self.count = 0

    def close(self, name, value, target, tol):
        self.count += 1
        if not abs(value - target) <= tol:
            self.failed.append(f"{name}={value:.10g} vs {target:.10g} (tol {tol:g})")

    def true(self, name, cond):
        self.count += 1
        if not cond:
            self.failed.append(name)


def finish(number, title, c):
    status = "PASS" if not c.failed else "FAIL"
    line = f"criterion {number:>2} {status}  {title} ({c.count - len(c.failed)}/{c.count} checks)"
    if c.failed:
        line += ": " + "; ".join(c.failed)
    ACCEPTANCE_LINES[number] = line
    print(line)
    assert not c.failed, line


def test_criterion_01_disk_anchors():
    c = Checks()
    c.close("delta0(2)", ball.delta0(2), SQ3 / 2, 1e-9)
    c.close("delta1(2)", ball.delta1(2), SQ3 / 2, 1e-9)
    c.close("packing density", packing.packing_density(2, 0), math.pi / (2 * SQ3), 1e-6)
    h = covering.max_inscribed_hexagon(2).area
    c.close("max inscribed hexagon", h, 3 * SQ3 / 2, 1e-6)
    c.close("covering density", covering.covering_density(2, h), 1.2092, 1e-4)
    c.close("tau_2", ball.tau(2), 2 - SQ3, 1e-10)
    finish(1, "disk anchors at p=2", c)


def test_criterion_02_published_values():
    c = Checks()
    c.close("tau_3", ball.tau(3), 0.20406, 5e-5)
    p0 = ball.davis_constant()
    c.true("p0 in (2.57, 2.58)", 2.57 < p0 < 2.58)
    c.close("p0", p0, 2.5725, 1e-3)
    c.close("min A(H_3)", covering.min_area(3), 2.859, 5e-4)
    c.close("i-min A(H_3)", covering.i_min_area(3), 2.870, 5e-4)
    c.close("sigma_(2,3)", covering.sigma_alpha(3, 2), 1.3830, 1e-4)
    c.close("hexagon area p=1.02", covering.max_inscribed_hexagon(1.02).area, 2.0, 0.05)
    c.close("hexagon area p=50", covering.max_inscribed_hexagon(50).area, 4.0, 0.05)
    finish(2, "published values", c)


def test_criterion_03_lattice1_p2():
    c = Checks()
    lat = lattice.critical_lattice_1(2)
    c.close("v.x", lat.v.x, (math.sqrt(6) - math.sqrt(2)) / 4, 1e-9)
    c.close("v.y", lat.v.y, (math.sqrt(6) + math.sqrt(2)) / 4, 1e-9)
    c.close("|det|", lat.abs_det, SQ3 / 2, 1e-9)
    finish(3, "Lambda1 at p=2 reproduces the quoted basis", c)


def test_criterion_04_oracle_equivalence():
    c = Checks()
    for p in GRID:
        for kind, lat in (("0", lattice.critical_lattice_0(p)), ("1", lattice.critical_lattice_1(p))):
            tag = f"p={p} L{kind}"
            c.true(f"{tag} admissible", lattice.is_admissible(p, 1.0, lat))
            try:
                sh = lattice.shell(p, lat)
            except Exception as exc:  # a shell failure is a criterion failure, not a crash
                c.true(f"{tag} shell: {exc}", False)
                continue
            c.true(f"{tag} shell size 6", len(sh) == 6)
            hexagon = covering.HexagonReport.from_half(sh.representatives(), "inscribed-al")
            c.close(f"{tag} shell hexagon / det", hexagon.area, 3 * lat.abs_det, 1e-9)
            c.close(f"{tag} tangent hexagon", covering.circumscribed_hexagon(p, sh).area,
                    4 * lat.abs_det, 1e-6)
        c.true(f"p={p} kissing 6", packing.kissing_number(p, 0) == 6)
    finish(4, "oracle equivalence on the p grid", c)


def test_criterion_05_moduli_surface():
    c = Checks()
    for p in GRID:
        c.close(f"p={p} delta(p,1)", covering.moduli_point(p, 1.0).delta, ball.delta1(p), 1e-9)
        sp = ball.sigma(p)
        c.close(f"p={p} delta(p,sigma_p)", covering.moduli_point(p, sp).delta, ball.delta0(p), 1e-9)
        areas = [covering.moduli_area(p, float(s)) for s in np.linspace(1, sp, 101)]
        lo = min(areas)
        c.close(f"p={p} endpoint minimum", min(areas[0], areas[-1]), lo, 1e-9)
        c.close(f"p={p} grid minimum", lo, 3 * ball.critical_determinant(p), 1e-9)
    flat = max(abs(covering.moduli_area(2, float(s)) - 3 * SQ3 / 2) for s in np.linspace(1, SQ3, 100))
    c.close("p=2 flatness", flat, 0.0, 1e-8)
    finish(5, "moduli surface properties", c)


def test_criterion_06_scaling():
    c = Checks()
    for p in GRID:
        d = ball.critical_determinant(p)
        dens = packing.packing_density(p, 0)
        for m in range(4):
            c.close(f"p={p} m={m} Delta", ball.scaled_critical_determinant(p, m) / 4 ** m, d, 1e-12)
            c.close(f"p={p} m={m} density", packing.packing_density(p, m), dens, 1e-12)
            c.close(f"p={p} m={m} inscribed step", covering.inscribed_min_area(p, m + 1)
                    / covering.inscribed_min_area(p, m), 4.0, 1e-12)
            c.close(f"p={p} m={m} circumscribed step", covering.circumscribed_min_area(p, m + 1)
                    / covering.circumscribed_min_area(p, m), 4.0, 1e-12)
    finish(6, "scaling laws", c)


def test_criterion_07_covering_density_claim():
    c = Checks()
    c.close("3.5200 / 3.3310", 3.5200 / 3.3310, 1.0567, 1e-4)
    free = covering.moduli_area_free(3, covering.sigma_alpha(3, 2), 0.12)
    c.true(f"|A(7^(1/6), 3; tau=0.12) - 3.331| = {abs(free - 3.331):.4f} > 0.1", abs(free - 3.331) > 0.1)
    r = report.discrepancy_report()
    c.close("report: published ratio", r["covering_density_D3"]["published_inputs_ratio"], 1.0567, 1e-4)
    c.close("report: area at published inputs", r["covering_constant_D3"]["area_at_published_inputs"],
            free, 1e-12)
    c.true("report: published constant present", r["covering_constant_D3"]["published"] == 3.331)
    finish(7, "published covering density is not reproducible from its inputs", c)


def test_criterion_08_matroids():
    c = Checks()

    def axioms(M, tag):
        c.true(f"{tag} IM", not matroid.independence_violations(M.ground, M.independents))
        c.true(f"{tag} CM", not matroid.circuit_violations(M.ground, matroid.circuits(M)))
        c.true(f"{tag} FM", not matroid.flat_violations(M.ground, matroid.flats(M)))

    for n in range(7):
        for k in range(n + 1):
            axioms(matroid.uniform(k, n), f"U({k},{n})")
    rng = random.Random(2024)
    for i in range(50):
        n, d = rng.randint(1, 6), rng.randint(1, 3)
        vecs = {j: tuple(float(rng.randint(-2, 2)) for _ in range(d)) for j in range(n)}
        axioms(matroid.from_vectors(vecs), f"linear#{i}")
    for reading in matroid.SHELL_READINGS:
        for dim in (2, 3):
            mm = matroid.shell_matroid(3, dim, reading)
            axioms(mm.matroid, f"shell {reading} d{dim}")
            c.true(f"shell {reading} d{dim} consistent", mm.consistent())
    mm = matroid.shell_matroid(3, 2, "basis")
    (b,) = mm.matroid.bases()
    c.close("basis metric", mm.metric[b], 0.5 * 7 ** (1 / 3), 1e-10)
    full = matroid.shell_matroid(3, 2, "pairs").matroid
    c.true("full shell matroid ~ U(2,3)", matroid.is_isomorphic(full, matroid.uniform(2, 3)))
    finish(8, "matroid suite", c)


def test_criterion_09_curves():
    c = Checks()
    c.true("genus(2) = 3", curves.genus(2) == 3)
    rng = random.Random(9)
    for _ in range(100):
        deg, g = rng.randint(-100, 100), rng.randint(0, 50)
        c.true(f"antisymmetry deg={deg} g={g}",
               curves.rr_euler(deg, g) + curves.rr_euler(2 * g - 2 - deg, g) == 0)
    for x in (0.5, 1.5, 2.5):
        c.true(f"ceil'({x})", curves.ceil_prime(x) == math.ceil(x))
        c.true(f"ceil'(-{x})", curves.ceil_prime(-x) == -math.ceil(x))
    for n in range(-4, 5):
        c.true(f"right-continuous at {n}",
               all(curves.ceil_prime(n) == curves.ceil_prime(n + e) for e in (1e-12, 1e-6, 0.25, 0.75)))
    finish(9, "curves arithmetic", c)


CLI_RECORDS = [
    ["constants", "--p", "3"],
    ["constants", "--grid", "1.5:3:4"],
    ["lattice", "--p", "3", "--kind", "1"],
    ["packing", "--p", "2.3", "--m", "1"],
    ["covering", "--p", "3"],
    ["covering", "--p", "3", "--sweep", "sigma"],
    ["covering", "--sweep", "alpha", "--grid", "2:3:3"],
    ["covering", "--sweep", "max", "--grid", "2:3:2"],
    ["matroid", "--p", "3", "--reading", "pairs"],
    ["curves", "--n", "3", "--deg", "4", "--arakelov-deg", "1.0"],
    ["report"],
    ["export", "shells", "--p", "3"],
    ["export", "hexagons", "--p", "2"],
    ["export", "points", "--n", "3", "--c", "2", "--m", "1"],
]


def test_criterion_10_determinism():
    c = Checks()
    base = [sys.executable, "-m", "minkowski_balls"]
    for argv, fmt in itertools.product(CLI_RECORDS, ("json", "csv")):
        cmd = base + ["--format", fmt] + argv
        a = subprocess.run(cmd, capture_output=True)
        b = subprocess.run(cmd, capture_output=True)
        tag = f"{fmt} {' '.join(argv)}"
        c.true(f"{tag} exit 0", a.returncode == 0 and b.returncode == 0)
        c.true(f"{tag} byte-identical", a.stdout == b.stdout and a.stdout)
        if fmt == "json" and a.returncode == 0:
            doc = json.loads(a.stdout)
            c.true(f"{tag} round trip", cli.normalize(doc) == doc
                   and (json.dumps(doc, indent=2) + "\n").encode() == a.stdout)
    finish(10, "CLI determinism and JSON round trip", c)


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
