"""Minkowski balls D_p = {|x|^p + |y|^p < 1} and the dyadic domains 2^m D_p.

Two candidate critical lattices compete for every p. Their determinants are

    delta0 = sigma_p / 2,                       sigma_p = (2^p - 1)^(1/p)
    delta1 = 4^(-1/p) (1 + tau_p) / (1 - tau_p), 2 (1 - tau_p)^p = 1 + tau_p^p

and the critical determinant is the smaller one: delta1 for 1 < p <= 2 and
p >= p0, delta0 for 2 <= p <= p0, where p0 ~ 2.5725 is the Davis constant.
"""
from __future__ import annotations

import enum
import functools
import itertools
import math
from dataclasses import dataclass

from ._backend import count_level_set
from .errors import DomainError
from .numerics import INF, TIGHT, check_exponent, gamma, solve_bracketed


class Regime(str, enum.Enum):
    MINKOWSKI = "Minkowski"
    DAVIS = "Davis"
    CHEBYSHEV_MORDELL = "ChebyshevMordell"
    LIMIT_P1 = "LimitP1"
    LIMIT_PINF = "LimitPInf"


@dataclass(frozen=True)
class Ball:
    """The domain 2^m D_p."""

    p: float
    m: int = 0

    def __post_init__(self):
        check_exponent(self.p)
        if int(self.m) != self.m or self.m < 0:
            raise DomainError(f"dyadic scale m must be a non-negative integer, got {self.m}")

    @property
    def scale(self) -> float:
        return float(2 ** self.m)

    def volume(self) -> float:
        return 4.0 ** self.m * volume(self.p)

    def critical_determinant(self) -> float:
        return scaled_critical_determinant(self.p, self.m)

    def regime(self) -> Regime:
        return regime(self.p)


@dataclass(frozen=True)
class CriticalData:
    p: float
    sigma_p: float
    tau_p: float
    delta0: float
    delta1: float
    delta_crit: float
    regime: Regime


def volume(p: float) -> float:
    """Area of D_p: 4 Gamma(1 + 1/p)^2 / Gamma(1 + 2/p)."""
    p = check_exponent(p)
    if p == INF:
        return 4.0
    return 4.0 * gamma(1.0 + 1.0 / p) ** 2 / gamma(1.0 + 2.0 / p)


def sigma(p: float) -> float:
    p = check_exponent(p)
    if p == INF:
        return 2.0
    # (2^p - 1)^(1/p) written to stay finite for large p
    return 2.0 * (1.0 - 2.0 ** -p) ** (1.0 / p)


def _tau_equation(p: float):
    return lambda t: 2.0 * (1.0 - t) ** p - 1.0 - t ** p


def tau(p: float) -> float:
    """Root in [0, 1) of 2(1 - t)^p = 1 + t^p."""
    p = check_exponent(p)
    if p == INF:
        return 0.0
    return solve_bracketed(_tau_equation(p), 0.0, 1.0, TIGHT)


def delta0(p: float) -> float:
    return 0.5 * sigma(p)


def delta1(p: float) -> float:
    if check_exponent(p) == INF:
        return 1.0
    t = tau(p)
    return 4.0 ** (-1.0 / p) * (1.0 + t) / (1.0 - t)


@functools.lru_cache(maxsize=None)
def davis_constant() -> float:
    """The exponent p0 in (2.57, 2.58) where delta0(p0) == delta1(p0)."""
    return solve_bracketed(lambda p: delta0(p) - delta1(p), 2.57, 2.58, TIGHT)


def regime(p: float) -> Regime:
    p = check_exponent(p)
    if p == 1.0:
        return Regime.LIMIT_P1
    if p == INF:
        return Regime.LIMIT_PINF
    if p < 2.0:
        return Regime.MINKOWSKI
    if p < davis_constant():
        return Regime.DAVIS
    return Regime.CHEBYSHEV_MORDELL


def critical_data(p: float) -> CriticalData:
    p = check_exponent(p)
    if p == INF:
        raise DomainError("critical_data needs a finite exponent")
    s, t = sigma(p), tau(p)
    d0 = 0.5 * s
    d1 = 4.0 ** (-1.0 / p) * (1.0 + t) / (1.0 - t)
    reg = regime(p)
    crit = d0 if reg is Regime.DAVIS else d1
    return CriticalData(p=p, sigma_p=s, tau_p=t, delta0=d0, delta1=d1,
                        delta_crit=crit, regime=reg)


def critical_determinant(p: float) -> float:
    if check_exponent(p) == INF:
        return 1.0
    return critical_data(p).delta_crit


def scaled_critical_determinant(p: float, m: int) -> float:
    """Critical determinant of 2^m D_p; planar determinants scale by 4 per doubling."""
    if int(m) != m or m < 0:
        raise DomainError(f"m must be a non-negative integer, got {m}")
    return 4.0 ** int(m) * critical_determinant(p)


def _min_box(c: float, m: int) -> int:
    # largest |x| with floor(|x|^c) <= m
    b = int(math.floor((m + 1) ** (1.0 / c)))
    while b > 0 and b ** c >= m + 1:
        b -= 1
    while (b + 1) ** c < m + 1:
        b += 1
    return b


def _check_sphere_args(n: int, c: float, m: int, box: int | None) -> int:
    if n not in (2, 3, 4):
        raise DomainError(f"dimension n must be 2, 3 or 4, got {n}")
    if not c > 1:
        raise DomainError(f"exponent c must be > 1, got {c}")
    if int(m) != m or m < 0:
        raise DomainError(f"level m must be a non-negative integer, got {m}")
    need = max(_min_box(c, m), 1)
    if box is None:
        box = need
    if box < need:
        raise DomainError(f"box={box} too small for m={m}, c={c}; need box >= {need}")
    if (2 * box + 1) ** n > 10 ** 9:
        raise DomainError("enumeration too large")
    return box


def count_arithmetic_sphere(n: int, c: float, m: int, box: int | None = None) -> int:
    """Number of integer vectors x with sum(floor(|x_i|^c)) == m."""
    box = _check_sphere_args(n, c, m, box)
    return int(count_level_set(n, float(c), int(m), int(box)))


def arithmetic_sphere_points(n: int, c: float, m: int, box: int | None = None) -> list[tuple[int, ...]]:
    box = _check_sphere_args(n, c, m, box)
    rng = range(-box, box + 1)
    return [x for x in itertools.product(rng, repeat=n)
            if sum(math.floor(abs(t) ** c) for t in x) == m]


def project_to_unit_sphere(points, c: float, lam: int) -> list[tuple[float, ...]]:
    """Scale each point by lam^(-1/c); order is preserved, nothing is filtered."""
    if not c > 1:
        raise DomainError(f"exponent c must be > 1, got {c}")
    if int(lam) != lam or lam < 1:
        raise DomainError(f"lambda must be an integer >= 1, got {lam}")
    k = float(lam) ** (-1.0 / c)
    return [tuple(k * t for t in x) for x in points]
