"""Riemann-Roch bookkeeping for the Fermat-type curves x^(2n) + y^(2n) = 1
and the arithmetic Riemann-Roch right-hand side with the modified ceiling."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class CurveGenus:
    n: int
    genus: int


@dataclass(frozen=True)
class ArakelovDegree:
    deg: float
    deg2: float


def genus(n: int) -> int:
    """Genus (2n - 1)(n - 1) of the smooth plane curve of degree 2n."""
    if int(n) != n or n < 1:
        raise DomainError(f"n must be an integer >= 1, got {n}")
    n = int(n)
    return (2 * n - 1) * (n - 1)


def curve_genus(n: int) -> CurveGenus:
    return CurveGenus(int(n), genus(n))


def rr_euler(deg: int, g: int) -> int:
    """l(D) - l(K - D) = deg D + 1 - g."""
    if g < 0:
        raise DomainError(f"genus must be non-negative, got {g}")
    return deg + 1 - g


def ceil_prime(x: float) -> int:
    """Right-continuous ceiling: ceil(x) for x > 0, -ceil(-x) for x < 0.

    At integers the right limit is taken, so ceil_prime(n) = n + 1 for n >= 0
    and ceil_prime(n) = n for n < 0.
    """
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x}")
    f = math.floor(x)
    return f + 1 if x >= 0 else f


def arakelov_degree(deg: float) -> ArakelovDegree:
    return ArakelovDegree(deg, deg / math.log(2.0))


def rr_arakelov_rhs(deg: float) -> int:
    return ceil_prime(arakelov_degree(deg).deg2)
