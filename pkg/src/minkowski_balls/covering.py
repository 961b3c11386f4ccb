"""Hexagon moduli surface, covering-constant bounds and extremal hexagons.

An admissible lattice of D_p with three boundary pairs has a basis

    u = (1 + tau^p)^(-1/p) (1, tau),   v = (1 + sigma^p)^(-1/p) (-1, sigma)

with u + v also on the boundary. Its determinant is
delta(p, sigma) = (tau + sigma)(1 + tau^p)^(-1/p)(1 + sigma^p)^(-1/p), and the
hexagon +-u, +-v, +-(u + v) has area A(sigma, p) = 3 delta. Fixing sigma in
[1, sigma_p] determines tau in [0, tau_p]: sigma = 1 gives the lattice
Lambda^(1) (tau = tau_p), sigma = sigma_p gives Lambda^(0) (tau = 0).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from ._backend import hexagon_grid_max
from .ball import (Regime, critical_data, davis_constant, regime,
                   scaled_critical_determinant, sigma as sigma_p_of, tau as tau_p_of, volume)
from .errors import DomainError, ShellError
from .lattice import ShellSet
from .numerics import (TIGHT, Vec2, boundary_point, check_exponent, pnorm, shoelace_area,
                       solve_bracketed)

SEAM_TOL = 1e-9
SAS_FACTOR = 3.0 * math.sqrt(3.0) / (2.0 * math.pi)
SAS_DOWKER_CAP = 2.0 * math.pi / (3.0 * math.sqrt(3.0))


@dataclass(frozen=True)
class ModuliPoint:
    p: float
    sigma: float
    tau: float
    delta: float
    third_point_residual: float

    @property
    def area(self) -> float:
        return 3.0 * self.delta

    def basis(self) -> tuple[Vec2, Vec2]:
        return _moduli_vectors(self.p, self.sigma, self.tau)


@dataclass(frozen=True)
class HexagonReport:
    vertices: tuple[Vec2, ...]
    area: float
    kind: str  # "inscribed-al", "inscribed-free" or "circumscribed"

    @classmethod
    def from_half(cls, half, kind: str) -> HexagonReport:
        verts = tuple(half) + tuple(-w for w in half)
        return cls(verts, abs(shoelace_area(verts)), kind)


class CoveringBounds(NamedTuple):
    sas_lower: float
    i_min_lower: float
    trivial_upper: float


def _moduli_vectors(p: float, sigma: float, tau: float) -> tuple[Vec2, Vec2]:
    nu = (1.0 + tau ** p) ** (-1.0 / p)
    nv = (1.0 + sigma ** p) ** (-1.0 / p)
    return Vec2(nu, nu * tau), Vec2(-nv, nv * sigma)


def moduli_delta(p: float, sigma: float, tau: float) -> float:
    return (tau + sigma) * (1.0 + tau ** p) ** (-1.0 / p) * (1.0 + sigma ** p) ** (-1.0 / p)


def third_point_residual(p: float, sigma: float, tau: float) -> float:
    """How far u + v is from the unit Minkowski curve."""
    u, v = _moduli_vectors(p, sigma, tau)
    return pnorm(p, u + v) - 1.0


def _check_sigma(p: float, sigma: float) -> float:
    hi = sigma_p_of(p)
    if not (1.0 - 1e-12 <= sigma <= hi + 1e-12):
        raise DomainError(f"sigma={sigma} outside the moduli domain [1, {hi}] for p={p}")
    return min(max(sigma, 1.0), hi)


def tau_of_sigma(p: float, sigma: float) -> float:
    """The companion parameter that puts the third lattice pair on the boundary."""
    p = check_exponent(p, strict=True)
    sigma = _check_sigma(p, sigma)
    return solve_bracketed(lambda t: third_point_residual(p, sigma, t), 0.0, tau_p_of(p), TIGHT)


def moduli_point(p: float, sigma: float) -> ModuliPoint:
    t = tau_of_sigma(p, sigma)
    sigma = _check_sigma(p, sigma)
    return ModuliPoint(p, sigma, t, moduli_delta(p, sigma, t),
                       abs(third_point_residual(p, sigma, t)))


def moduli_area(p: float, sigma: float) -> float:
    return moduli_point(p, sigma).area


def moduli_area_free(p: float, sigma: float, tau_free: float) -> float:
    """The area formula at an arbitrary tau, with no boundary constraint enforced.

    Use ``third_point_residual`` to see how far the input is from the surface.
    """
    p = check_exponent(p, strict=True)
    if sigma < 1 or not 0 <= tau_free < 1:
        raise DomainError(f"need sigma >= 1 and 0 <= tau < 1, got {sigma}, {tau_free}")
    return 3.0 * moduli_delta(p, sigma, tau_free)


def al_hexagon(p: float, sigma: float) -> HexagonReport:
    u, v = moduli_point(p, sigma).basis()
    return HexagonReport.from_half((u, u + v, v), "inscribed-al")


def sigma_alpha(p: float, alpha: float) -> float:
    """(2^p - 1)^(1/(alpha p))."""
    p = check_exponent(p, strict=True)
    if alpha < 1:
        raise DomainError(f"alpha must be >= 1, got {alpha}")
    return sigma_p_of(p) ** (1.0 / alpha)


def section_curve(p: float, alpha: float) -> float:
    return moduli_area(p, sigma_alpha(p, alpha))


def _area_branches(p: float) -> tuple[float, float]:
    """(3 delta1, 3 delta0), i.e. the tau_p branch and the sigma_p branch."""
    cd = critical_data(p)
    a1, a0 = 3.0 * cd.delta1, 1.5 * cd.sigma_p
    for seam in (2.0, davis_constant()):
        if abs(p - seam) <= SEAM_TOL and abs(a1 - a0) > 1e-8:
            raise ArithmeticError(f"area branches disagree at seam p={p}: {a1} vs {a0}")
    return a1, a0


def min_area(p: float) -> float:
    """Minimum al-hexagon area: 3 delta1 off the Davis range, (3/2) sigma_p on it."""
    a1, a0 = _area_branches(p)
    return a0 if regime(p) is Regime.DAVIS else a1


def i_min_area(p: float) -> float:
    """The inverse minimum: same two formulas with the ranges swapped."""
    a1, a0 = _area_branches(p)
    return a1 if regime(p) is Regime.DAVIS else a0


def covering_bounds(p: float) -> CoveringBounds:
    v = volume(p)
    return CoveringBounds(SAS_FACTOR * v, i_min_area(p), v)


def _free_hexagon_area(p: float, thetas) -> float:
    w1, w2, w3 = (boundary_point(p, t) for t in thetas)
    return w1.cross(w2) + w2.cross(w3) + w1.cross(w3)


def max_inscribed_hexagon(p: float, steps: int = 360, theta_tol: float = 1e-10) -> HexagonReport:
    """Largest centrally symmetric hexagon with vertices on the boundary of D_p.

    1-degree grid search, then compass search in the three angles.
    """
    p = check_exponent(p, strict=True)
    if p == math.inf:
        raise DomainError("max_inscribed_hexagon needs a finite exponent")
    _, i, j, k = hexagon_grid_max(p, steps)
    h = 2.0 * math.pi / steps
    best_t = [i * h, j * h, k * h]
    best = _free_hexagon_area(p, best_t)
    step = h
    while step > theta_tol:
        improved = False
        for axis in range(3):
            for sgn in (1.0, -1.0):
                trial = list(best_t)
                trial[axis] += sgn * step
                a = _free_hexagon_area(p, trial)
                if a > best:
                    best, best_t, improved = a, trial, True
        if not improved:
            step *= 0.5
    return HexagonReport.from_half([boundary_point(p, t) for t in best_t], "inscribed-free")


def covering_density(p: float, gamma: float) -> float:
    """V(D_p) / gamma for a covering constant gamma."""
    if not gamma > 0:
        raise DomainError(f"covering constant must be positive, got {gamma}")
    return volume(p) / gamma


def inscribed_min_area(p: float, m: int = 0) -> float:
    return 3.0 * scaled_critical_determinant(p, m)


def circumscribed_min_area(p: float, m: int = 0) -> float:
    return 4.0 * scaled_critical_determinant(p, m)


def _tangent(p: float, q: Vec2) -> tuple[float, float, float]:
    nx = math.copysign(abs(q.x) ** (p - 1.0), q.x)
    ny = math.copysign(abs(q.y) ** (p - 1.0), q.y)
    return nx, ny, nx * q.x + ny * q.y


def circumscribed_hexagon(p: float, shell: ShellSet) -> HexagonReport:
    """Hexagon cut out by the tangent lines at the six shell points."""
    p = check_exponent(p, strict=True)
    pts = sorted(shell.points, key=Vec2.angle)
    lines = [_tangent(p, q) for q in pts]
    verts = []
    for (a1, b1, c1), (a2, b2, c2) in zip(lines, lines[1:] + lines[:1]):
        det = a1 * b2 - a2 * b1
        if abs(det) < 1e-12:
            raise ShellError("parallel tangent lines at consecutive shell points")
        verts.append(Vec2((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det))
    return HexagonReport(tuple(verts), abs(shoelace_area(verts)), "circumscribed")


class MaxCurvePoint(NamedTuple):
    p: float
    sigma_argmax: float
    al_max: float
    free_max: float


def max_area_curve(ps, sigma_samples: int = 41) -> list[MaxCurvePoint]:
    """Exploratory sweep: the maximum of A(., p) over a sigma grid, per p.

    Reported alongside the unconstrained inscribed-hexagon maximum; nothing is
    asserted about the shape of the curve.
    """
    out = []
    for p in ps:
        hi = sigma_p_of(p)
        grid = [1.0 + (hi - 1.0) * i / (sigma_samples - 1) for i in range(sigma_samples)]
        areas = [(moduli_area(p, s), s) for s in grid]
        a, s = max(areas)
        out.append(MaxCurvePoint(p, s, a, max_inscribed_hexagon(p).area))
    return out

