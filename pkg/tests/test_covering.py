import math

import numpy as np
import pytest

from minkowski_balls import ball, covering
from minkowski_balls.errors import DomainError
from minkowski_balls.lattice import critical_lattice_0, critical_lattice_1, shell
from minkowski_balls.numerics import pnorm, shoelace_area

SQ3 = math.sqrt(3)
HEX2 = 3 * SQ3 / 2


def hexagon_oracle(p, n=181, rounds=6):
    """Max area of a centrally symmetric hexagon inscribed in D_p.

    For fixed w1, w3 the area w1 x w2 + w2 x w3 + w1 x w3 is linear in w2, so
    the best w2 contributes the dual (q-)norm of w3 - w1. What remains is a
    two-angle search, done on a zooming grid in polar angles.
    """
    q = p / (p - 1)

    def pt(phi):
        c, s = np.cos(phi), np.sin(phi)
        r = (np.abs(c) ** p + np.abs(s) ** p) ** (-1 / p)
        return r * c, r * s

    def area(f1, f3):
        x1, y1 = pt(f1)
        x3, y3 = pt(f3)
        dual = (np.abs(x3 - x1) ** q + np.abs(y3 - y1) ** q) ** (1 / q)
        return x1 * y3 - y1 * x3 + dual

    c1, c3, w = math.pi / 2, math.pi, math.pi
    best = -1.0
    for _ in range(rounds):
        f1, f3 = np.meshgrid(np.linspace(c1 - w, c1 + w, n), np.linspace(c3 - w, c3 + w, n))
        a = area(f1, f3)
        k = np.unravel_index(np.argmax(a), a.shape)
        best, c1, c3 = float(a[k]), float(f1[k]), float(f3[k])
        w *= 8.0 / n * 2
    return best


def scan_section_area(p, s, n=200001):
    """A(s, p) by a dense angle scan for u with u + v on the curve."""
    v = np.array([-1.0, s]) * (1 + s ** p) ** (-1 / p)
    phi = np.linspace(0, math.pi / 2, n)
    r = (np.cos(phi) ** p + np.sin(phi) ** p) ** (-1 / p)
    ux, uy = r * np.cos(phi), r * np.sin(phi)
    g = (np.abs(ux + v[0]) ** p + np.abs(uy + v[1]) ** p) ** (1 / p) - 1
    i = np.nonzero(np.sign(g[:-1]) != np.sign(g[1:]))[0][0]
    lo, hi = phi[i], phi[i + 1]
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        rm = (math.cos(mid) ** p + math.sin(mid) ** p) ** (-1 / p)
        gm = pnorm(p, (rm * math.cos(mid) + v[0], rm * math.sin(mid) + v[1])) - 1
        if np.sign(gm) == np.sign(g[i]):
            lo = mid
        else:
            hi = mid
    rm = (math.cos(lo) ** p + math.sin(lo) ** p) ** (-1 / p)
    return 3 * abs(rm * math.cos(lo) * v[1] - rm * math.sin(lo) * v[0])


def test_tau_of_sigma_endpoints(p_grid):
    p = p_grid
    assert covering.tau_of_sigma(p, ball.sigma(p)) == pytest.approx(0.0, abs=1e-12)
    assert covering.tau_of_sigma(p, 1.0) == pytest.approx(ball.tau(p), abs=1e-10)


def test_tau_of_sigma_domain():
    with pytest.raises(DomainError):
        covering.tau_of_sigma(3, 0.9)
    with pytest.raises(DomainError):
        covering.tau_of_sigma(3, 2.0)


def test_p2_flat_section():
    for s in np.linspace(1, SQ3, 100):
        mp = covering.moduli_point(2, float(s))
        assert abs(mp.area - HEX2) <= 1e-8
        assert mp.delta == pytest.approx(SQ3 / 2, abs=1e-9)


def test_moduli_invariants(p_grid):
    p = p_grid
    sp = ball.sigma(p)
    crit = ball.critical_determinant(p)
    for s in np.linspace(1, sp, 41):
        mp = covering.moduli_point(p, float(s))
        assert mp.third_point_residual <= 1e-9
        assert abs(mp.delta - covering.moduli_delta(p, mp.sigma, mp.tau)) <= 1e-12
        assert mp.delta >= crit - 1e-12
        u, v = mp.basis()
        for w in (u, v, u + v):
            assert abs(pnorm(p, w) - 1) <= 1e-9
    assert covering.moduli_point(p, 1.0).delta == pytest.approx(ball.delta1(p), abs=1e-9)
    assert covering.moduli_point(p, sp).delta == pytest.approx(ball.delta0(p), abs=1e-9)


def test_grid_minimum_at_endpoint(p_grid):
    p = p_grid
    grid = np.linspace(1, ball.sigma(p), 101)
    areas = [covering.moduli_area(p, float(s)) for s in grid]
    lo = min(areas)
    assert lo >= covering.min_area(p) - 1e-9
    assert min(areas[0], areas[-1]) == pytest.approx(lo, abs=1e-12)
    assert lo == pytest.approx(3 * ball.critical_determinant(p), abs=1e-9)


def test_moduli_area_p3_values():
    assert covering.moduli_area(3, 1.0) == pytest.approx(2.859, abs=5e-4)
    assert covering.moduli_area(3, 1.0) == pytest.approx(3 * ball.delta1(3), abs=1e-9)
    # 1.5 * 7^(1/3) = 2.869397, which rounds to 2.869
    assert covering.moduli_area(3, ball.sigma(3)) == pytest.approx(1.5 * 7 ** (1 / 3), abs=1e-12)


def test_al_hexagon_shoelace(p_grid):
    for s in np.linspace(1, ball.sigma(p_grid), 7):
        h = covering.al_hexagon(p_grid, float(s))
        assert h.area == pytest.approx(covering.moduli_area(p_grid, float(s)), abs=1e-9)
        assert abs(shoelace_area(h.vertices)) == pytest.approx(h.area, abs=1e-12)
        for w in h.vertices:
            assert abs(pnorm(p_grid, w) - 1) <= 1e-9


def test_moduli_area_free():
    s = covering.sigma_alpha(3, 2)
    t = covering.tau_of_sigma(3, s)
    assert covering.moduli_area_free(3, s, t) == pytest.approx(covering.moduli_area(3, s), abs=1e-14)
    assert covering.moduli_area_free(2, 1.0, 2 - SQ3) == pytest.approx(HEX2, abs=1e-12)
    assert abs(covering.third_point_residual(3, s, 0.12)) > 1e-3
    with pytest.raises(DomainError):
        covering.moduli_area_free(3, 0.5, 0.1)


def test_sigma_alpha():
    assert covering.sigma_alpha(3, 2) == pytest.approx(1.3830, abs=1e-4)
    assert covering.sigma_alpha(3, 2) == pytest.approx(7 ** (1 / 6), abs=1e-14)
    assert covering.sigma_alpha(2.5, 1) == pytest.approx(ball.sigma(2.5), abs=1e-14)
    assert covering.sigma_alpha(3, 1e6) == pytest.approx(1.0, abs=1e-5)
    with pytest.raises(DomainError):
        covering.sigma_alpha(3, 0.5)


def test_section_curve():
    assert covering.section_curve(3, 1) == pytest.approx(1.5 * ball.sigma(3), abs=1e-10)
    assert covering.section_curve(2, 2) == pytest.approx(HEX2, abs=1e-10)
    a = covering.section_curve(3, 2)
    assert a == pytest.approx(2.86463, abs=1e-5)
    assert a == pytest.approx(scan_section_area(3, 7 ** (1 / 6)), abs=1e-9)


def test_min_and_i_min():
    assert covering.min_area(3) == pytest.approx(2.859, abs=5e-4)
    assert covering.i_min_area(3) == pytest.approx(2.869397, abs=1e-6)
    assert covering.min_area(2) == pytest.approx(HEX2, abs=1e-12)
    assert covering.i_min_area(2) == pytest.approx(HEX2, abs=1e-12)
    p0 = ball.davis_constant()
    assert covering.min_area(p0) == pytest.approx(covering.i_min_area(p0), abs=1e-9)
    for p in (1.2, 1.5, 2.0, 2.3, 2.5, p0, 3.0, 5.0, 10.0):
        assert covering.min_area(p) <= covering.i_min_area(p) + 1e-12
        assert covering.min_area(p) == pytest.approx(3 * ball.critical_determinant(p), abs=1e-12)


def test_covering_bounds():
    b = covering.covering_bounds(2)
    assert b.sas_lower == pytest.approx(HEX2, abs=1e-12)
    assert b.i_min_lower == pytest.approx(HEX2, abs=1e-12)
    assert b.trivial_upper == pytest.approx(math.pi)
    b3 = covering.covering_bounds(3)
    assert b3.sas_lower == pytest.approx(covering.SAS_FACTOR * 3.5332775005709, abs=1e-12)
    assert b3.sas_lower > b3.i_min_lower  # the Sas bound is the better one at p=3
    for p in (1.2, 1.5, 2.3, 3.0, 5.0):
        b = covering.covering_bounds(p)
        assert b.sas_lower <= b.trivial_upper and b.i_min_lower <= b.trivial_upper


def test_max_hexagon_p2_regular():
    h = covering.max_inscribed_hexagon(2)
    assert h.area == pytest.approx(HEX2, abs=1e-9)
    v = h.vertices
    order = sorted(v, key=lambda w: w.angle())
    sides = [math.dist(tuple(a), tuple(b)) for a, b in zip(order, order[1:] + order[:1])]
    assert max(sides) - min(sides) < 1e-4


@pytest.mark.parametrize("p", [1.2, 1.5, 2.3, 3.0, 5.0, 8.0])
def test_max_hexagon_against_oracle(p):
    h = covering.max_inscribed_hexagon(p)
    assert h.area == pytest.approx(hexagon_oracle(p), abs=1e-8)
    b = covering.covering_bounds(p)
    assert h.area >= max(b.sas_lower, b.i_min_lower) - 1e-6
    assert h.area <= ball.volume(p)
    for w in h.vertices:
        assert abs(pnorm(p, w) - 1) <= 1e-9


def test_free_hexagon_beats_al_hexagons(p_grid):
    best_al = max(covering.moduli_area(p_grid, float(s))
                  for s in np.linspace(1, ball.sigma(p_grid), 41))
    assert covering.max_inscribed_hexagon(p_grid).area >= best_al - 1e-6


def test_covering_density():
    assert covering.covering_density(2, HEX2) == pytest.approx(2 * math.pi / (3 * SQ3), abs=1e-12)
    assert covering.covering_density(3, ball.volume(3)) == pytest.approx(1.0)
    assert 3.52 / 3.331 == pytest.approx(1.0567, abs=1e-4)
    with pytest.raises(DomainError):
        covering.covering_density(2, 0.0)
    for p in (1.2, 1.5, 2.0, 2.3, 2.5725, 3.0, 5.0):
        d = covering.covering_density(p, covering.max_inscribed_hexagon(p).area)
        assert 1 <= d <= covering.SAS_DOWKER_CAP + 1e-6


def test_inscribed_and_circumscribed_minima():
    assert covering.inscribed_min_area(2) == pytest.approx(HEX2)
    assert covering.circumscribed_min_area(2) == pytest.approx(2 * SQ3)
    assert covering.inscribed_min_area(3) == pytest.approx(2.85890, abs=1e-4)
    assert covering.circumscribed_min_area(3) == pytest.approx(3.81186, abs=1e-4)
    for p in (1.5, 2.3, 3.0):
        for m in range(4):
            a, c = covering.inscribed_min_area(p, m), covering.circumscribed_min_area(p, m)
            assert a / 3 == pytest.approx(c / 4, rel=1e-15)
            assert covering.inscribed_min_area(p, m + 1) == pytest.approx(4 * a, rel=1e-15)


def test_circumscribed_hexagon(p_grid):
    for lat in (critical_lattice_0(p_grid), critical_lattice_1(p_grid)):
        h = covering.circumscribed_hexagon(p_grid, shell(p_grid, lat))
        assert h.area == pytest.approx(4 * lat.abs_det, abs=1e-6)
        for w in h.vertices:
            assert any(r.close_to(-w, 1e-9) for r in h.vertices)
            assert pnorm(p_grid, w) >= 1 - 1e-12
    h = covering.circumscribed_hexagon(2, shell(2, critical_lattice_0(2)))
    assert h.area == pytest.approx(2 * SQ3, abs=1e-12)


def test_max_area_curve():
    rows = covering.max_area_curve([2.0, 3.0], sigma_samples=11)
    assert [r.p for r in rows] == [2.0, 3.0]
    assert rows[0].al_max == pytest.approx(HEX2)
    assert all(r.free_max >= r.al_max - 1e-9 for r in rows)
