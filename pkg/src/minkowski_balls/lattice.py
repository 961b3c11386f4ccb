"""Plane lattices: the two critical lattices of D_p, sublattices, shells and
a brute-force admissibility oracle."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from ._backend import min_lattice_norm
from .ball import sigma
from .errors import DegenerateError, DomainError, MinkowskiError, ShellError
from .numerics import (INF, TIGHT, Tolerance, Vec2, boundary_point, check_exponent,
                       pnorm, solve_bracketed)

BOUNDARY_TOL = 1e-9
SHELL_RANGE = 3


@dataclass(frozen=True)
class LatticeBasis:
    u: Vec2
    v: Vec2
    det: float = field(init=False)

    def __post_init__(self):
        d = self.u.cross(self.v)
        if d == 0.0 or not math.isfinite(d):
            raise DegenerateError(f"degenerate basis u={self.u}, v={self.v}")
        object.__setattr__(self, "det", d)

    @property
    def abs_det(self) -> float:
        return abs(self.det)

    def point(self, a: int, b: int) -> Vec2:
        return Vec2(a * self.u.x + b * self.v.x, a * self.u.y + b * self.v.y)

    def scaled(self, k: float) -> LatticeBasis:
        return LatticeBasis(self.u * k, self.v * k)

    def coefficient_bound(self, radius: float) -> int:
        """Bound B with |a|, |b| <= B for every a*u + b*v of sup-norm <= radius."""
        inv = 1.0 / self.det
        row1 = abs(self.v.y * inv) + abs(self.v.x * inv)
        row2 = abs(self.u.y * inv) + abs(self.u.x * inv)
        return max(1, math.ceil(max(row1, row2) * radius))


@dataclass(frozen=True)
class ShellSet:
    p: float
    points: tuple[Vec2, ...]

    def __post_init__(self):
        if len(self.points) != 6:
            raise ShellError(f"a shell has 6 points, got {len(self.points)}")

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def representatives(self) -> tuple[Vec2, Vec2, Vec2]:
        """One point per antipodal pair, taken from the upper half plane."""
        reps = [q for q in self.points
                if q.y > BOUNDARY_TOL or (abs(q.y) <= BOUNDARY_TOL and q.x > 0)]
        return tuple(sorted(reps, key=Vec2.angle))


def critical_lattice_0(p: float) -> LatticeBasis:
    """The lattice through (1, 0) and (1/2, sigma_p / 2)."""
    p = check_exponent(p, strict=True)
    return LatticeBasis(Vec2(1.0, 0.0), Vec2(0.5, 0.5 * sigma(p)))


def critical_lattice_1(p: float) -> LatticeBasis:
    """The lattice through u = (-2^(-1/p), 2^(-1/p)).

    v is the first-quadrant boundary point with v - u also on the boundary,
    found by scanning and bisecting; no closed form is used.
    """
    p = check_exponent(p, strict=True)
    if p == INF:
        raise DomainError("critical_lattice_1 needs a finite exponent")
    a = 2.0 ** (-1.0 / p)
    u = Vec2(-a, a)
    candidates = [q for q in boundary_intersections(p, u) if q.x > 0 and q.y > 0]
    if len(candidates) != 1:
        raise ShellError(f"expected one first-quadrant companion of u, got {candidates}")
    return LatticeBasis(u, candidates[0])


def _graph_point(p: float, q: Vec2, t: float) -> Vec2:
    """Boundary point near q, parametrized by its smaller coordinate t."""
    t = min(max(t, -1.0), 1.0)
    w = (1.0 - abs(t) ** p) ** (1.0 / p)
    if abs(q.y) <= abs(q.x):
        return Vec2(math.copysign(w, q.x), t)
    return Vec2(t, math.copysign(w, q.y))


def _polish(p: float, G, q: Vec2, width: float = 1e-4) -> Vec2:
    """Refine a root q of G on the curve in a chart that is regular near the axes.

    The angle parametrization flattens like |theta|^(2/p) at the axes, so an
    angle accurate to 1e-16 can still leave a coordinate off by 1e-7.
    """
    t0 = q.y if abs(q.y) <= abs(q.x) else q.x
    def h(t):
        return G(_graph_point(p, q, t))
    a, b = max(t0 - width, -1.0), min(t0 + width, 1.0)
    try:
        return _graph_point(p, q, solve_bracketed(h, a, b, TIGHT))
    except MinkowskiError:
        return q


def boundary_intersections(p: float, shift: Vec2, samples: int = 720) -> list[Vec2]:
    """Boundary points q with q - shift also on the boundary."""
    def G(q):
        return pnorm(p, q - shift) - 1.0
    return [_polish(p, G, boundary_point(p, th))
            for th in _scan_roots(lambda th: G(boundary_point(p, th)), samples)]


def _scan_roots(g, samples: int, tol: Tolerance = TIGHT) -> list[float]:
    step = 2.0 * math.pi / samples
    roots = []
    prev_t, prev = 0.0, g(0.0)
    for i in range(1, samples + 1):
        t = i * step
        cur = g(t)
        if prev == 0.0:
            roots.append(prev_t)
        elif prev * cur < 0:
            roots.append(solve_bracketed(g, prev_t, t, tol))
        prev_t, prev = t, cur
    return roots


def boundary_lattice_points(p: float, basis: LatticeBasis, radius: float = 1.0,
                            tol: float = BOUNDARY_TOL, span: int = SHELL_RANGE) -> list[Vec2]:
    """Lattice points a*u + b*v, |a|, |b| <= span, with p-norm equal to radius."""
    pts = []
    for a in range(-span, span + 1):
        for b in range(-span, span + 1):
            if a == 0 and b == 0:
                continue
            q = basis.point(a, b)
            if abs(pnorm(p, q) / radius - 1.0) <= tol:
                pts.append(q)
    return sorted(pts, key=Vec2.angle)


def shell(p: float, basis: LatticeBasis, tol: float = BOUNDARY_TOL) -> ShellSet:
    """The six lattice points on the unit Minkowski curve, sorted by angle.

    ``tol`` is the relative boundary-membership tolerance.
    """
    p = check_exponent(p, strict=True)
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    pts = boundary_lattice_points(p, basis, tol=tol)
    if len(pts) != 6:
        raise ShellError(f"shell of {basis} for p={p} has {len(pts)} points, expected 6")
    d = basis.abs_det
    for i, q in enumerate(pts):
        for r in pts[i + 1:]:
            c = abs(q.cross(r))
            if c > tol and abs(c - d) > max(tol, BOUNDARY_TOL):
                raise ShellError(f"shell points {q}, {r} span area {c}, lattice det {d}")
    return ShellSet(p, tuple(pts))


def solve_companion_point(p: float, P: Vec2, d: float, samples: int = 3600) -> list[Vec2]:
    """All boundary points Q with |P.x Q.y - P.y Q.x| = d.

    An empty list means no solution exists.
    """
    p = check_exponent(p, strict=True)
    if abs(pnorm(p, P) - 1.0) > BOUNDARY_TOL:
        raise DomainError(f"P={P} is not on the boundary of D_{p}")
    if not d > 0:
        raise DomainError(f"d must be positive, got {d}")
    found: list[Vec2] = []
    for sign in (1.0, -1.0):
        def G(q, sign=sign):
            return P.cross(q) - sign * d
        for th in _scan_roots(lambda th: G(boundary_point(p, th)), samples):
            q = _polish(p, G, boundary_point(p, th))
            if not any(q.close_to(r, 1e-9) for r in found):
                found.append(q)
    return sorted(found, key=Vec2.angle)


def admissibility_bound(p: float, scale: float, basis: LatticeBasis) -> int:
    return basis.coefficient_bound(scale * 2.0 ** (1.0 - (0.0 if p == INF else 1.0 / p)))


def shortest_vector(p: float, basis: LatticeBasis, scale: float = 1.0) -> tuple[float, int, int]:
    """(norm, a, b) of the p-shortest nonzero point within the admissibility window."""
    p = check_exponent(p)
    bound = admissibility_bound(p, scale, basis)
    return min_lattice_norm(p, basis.u.x, basis.u.y, basis.v.x, basis.v.y, bound)


def is_admissible(p: float, scale: float, basis: LatticeBasis) -> bool:
    """True iff no nonzero lattice point lies in the interior of scale * D_p."""
    if not scale > 0:
        raise DomainError(f"scale must be positive, got {scale}")
    norm, _, _ = shortest_vector(p, basis, scale)
    return norm >= scale * (1.0 - BOUNDARY_TOL)


def sublattice(basis: LatticeBasis, M) -> LatticeBasis:
    """Sublattice spanned by (M11 u + M12 v, M21 u + M22 v) for an integer matrix M."""
    (m11, m12), (m21, m22) = M
    if any(int(x) != x for x in (m11, m12, m21, m22)):
        raise DomainError(f"sublattice matrix must be integral, got {M}")
    if m11 * m22 - m12 * m21 == 0:
        raise DegenerateError(f"singular sublattice matrix {M}")
    return LatticeBasis(basis.u * m11 + basis.v * m12, basis.u * m21 + basis.v * m22)
