"""Numeric kernels: gamma function, bracketed root finding, p-norms and
the boundary parametrization of Minkowski circles.

The exponent ``p = math.inf`` is accepted as a flag value for the limiting
sup-norm ball wherever the operation is defined there.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import BracketError, ConvergenceError, DomainError

INF = math.inf
EPS = sys.float_info.epsilon

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class Tolerance:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self):
        if not self.abs_tol > 0 or not self.rel_tol > 0:
            raise DomainError("tolerances must be positive")
        if self.max_iter < 1:
            raise DomainError("max_iter must be >= 1")


#: Tight tolerance used for the defining equations of tau_p, p0 and friends.
TIGHT = Tolerance(abs_tol=1e-15, rel_tol=1e-15, max_iter=300)


@dataclass(frozen=True, slots=True)
class Vec2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"non-finite coordinates ({self.x}, {self.y})")

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def __mul__(self, k: float) -> Vec2:
        return Vec2(k * self.x, k * self.y)

    __rmul__ = __mul__

    def cross(self, other: Vec2) -> float:
        return self.x * other.y - self.y * other.x

    def angle(self) -> float:
        """Polar angle in [0, 2*pi)."""
        a = math.atan2(self.y, self.x)
        return a + 2.0 * math.pi if a < 0 else a

    def close_to(self, other: Vec2, tol: float = 1e-9) -> bool:
        return abs(self.x - other.x) <= tol and abs(self.y - other.y) <= tol


def check_exponent(p: float, *, strict: bool = False) -> float:
    """Validate an exponent; ``strict`` demands p > 1 instead of p >= 1."""
    p = float(p)
    if math.isnan(p) or p < 1 or (strict and p == 1):
        bound = "> 1" if strict else ">= 1"
        raise DomainError(f"exponent p must be {bound}, got {p}")
    return p


def gamma(x: float) -> float:
    """Gamma function for real x > 0 (Lanczos, relative error ~1e-15)."""
    x = float(x)
    if not math.isfinite(x) or x <= 0:
        raise DomainError(f"gamma is defined here only for finite x > 0, got {x}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    z = x - 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * math.exp((z + 0.5) * math.log(t) - t) * acc


def solve_bracketed(f: Callable[[float], float], a: float, b: float,
                    tol: Tolerance = Tolerance()) -> float:
    """Brent's method on a bracket [a, b] with f(a)*f(b) <= 0.

    Inverse quadratic / secant steps with a bisection safeguard. The result
    always lies inside the original bracket.
    """
    fa, fb = f(a), f(b)
    if abs(fa) <= tol.abs_tol and abs(fa) <= abs(fb):
        return a
    if abs(fb) <= tol.abs_tol:
        return b
    if fa * fb > 0:
        raise BracketError(f"no sign change on [{a}, {b}]: f(a)={fa}, f(b)={fb}")

    c, fc = a, fa
    d = e = b - a
    for _ in range(tol.max_iter):
        if fb * fc > 0:
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * EPS * abs(b) + 0.5 * (tol.abs_tol + tol.rel_tol * abs(b))
        xm = 0.5 * (c - b)
        if abs(xm) <= tol1 or fb == 0.0:
            return b
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                pp = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                pp = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if pp > 0:
                q = -q
            pp = abs(pp)
            if 2.0 * pp < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e, d = d, pp / q
            else:
                d = e = xm
        else:
            d = e = xm
        a, fa = b, fb
        b += d if abs(d) > tol1 else math.copysign(tol1, xm)
        fb = f(b)
    raise ConvergenceError(f"no convergence within {tol.max_iter} iterations")


def pnorm(p: float, v) -> float:
    """Minkowski p-norm of a plane vector; ``p = inf`` gives the sup-norm."""
    p = check_exponent(p)
    x, y = v
    x, y = abs(x), abs(y)
    if p == INF:
        return max(x, y)
    if p == 1.0:
        return x + y
    m = max(x, y)
    if m == 0.0:
        return 0.0
    # scaled to avoid under/overflow for large p
    return m * ((x / m) ** p + (y / m) ** p) ** (1.0 / p)


def boundary_point(p: float, theta: float) -> Vec2:
    """Point of |x|^p + |y|^p = 1 with |x|^p = cos^2(theta), |y|^p = sin^2(theta)."""
    p = check_exponent(p, strict=True)
    if p == INF:
        raise DomainError("boundary_point needs a finite exponent")
    c, s = math.cos(theta), math.sin(theta)
    e = 2.0 / p
    return Vec2(math.copysign(abs(c) ** e, c), math.copysign(abs(s) ** e, s))


def shoelace_area(points) -> float:
    """Signed area of a polygon given by its vertices in order."""
    pts = list(points)
    s = 0.0
    for i, (x0, y0) in enumerate(pts):
        x1, y1 = pts[(i + 1) % len(pts)]
        s += x0 * y1 - y0 * x1
    return 0.5 * s
