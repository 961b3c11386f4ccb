"""Lattice packings of 2^m D_p, their optimal lattices and kissing numbers."""
from __future__ import annotations

from dataclasses import dataclass

from .ball import Ball, Regime, critical_determinant, regime, volume
from .errors import DomainError
from .lattice import (LatticeBasis, boundary_lattice_points, critical_lattice_0,
                      critical_lattice_1, is_admissible)
from .numerics import check_exponent


@dataclass(frozen=True)
class PackingReport:
    ball: Ball
    lattice: LatticeBasis
    density: float
    optimal: bool
    kissing: int


def _check_m(m: int) -> int:
    if int(m) != m or m < 0:
        raise DomainError(f"m must be a non-negative integer, got {m}")
    return int(m)


def is_packing_lattice(p: float, m: int, basis: LatticeBasis) -> bool:
    """Translates of 2^m D_p by the lattice are disjoint iff it is admissible for 2^(m+1) D_p."""
    return is_admissible(p, 2.0 ** (_check_m(m) + 1), basis)


def critical_lattice(p: float) -> LatticeBasis:
    """The critical lattice of D_p: Lambda^(0) on the Davis range, Lambda^(1) elsewhere."""
    p = check_exponent(p, strict=True)
    if regime(p) is Regime.DAVIS:
        return critical_lattice_0(p)
    return critical_lattice_1(p)


def optimal_packing_lattice(p: float, m: int) -> LatticeBasis:
    """2^(m+1) times the critical lattice; its determinant is Delta(2^(m+1) D_p)."""
    return critical_lattice(p).scaled(2.0 ** (_check_m(m) + 1))


def packing_density(p: float, m: int = 0) -> float:
    """V(2^m D_p) / Delta(2^(m+1) D_p), which does not depend on m."""
    m = _check_m(m)
    return (4.0 ** m * volume(p)) / (4.0 ** (m + 1) * critical_determinant(p))


def kissing_number(p: float, m: int = 0) -> int:
    """Number of optimal-packing translates touching the central copy of 2^m D_p."""
    lat = optimal_packing_lattice(p, m)
    return len(boundary_lattice_points(p, lat, radius=2.0 ** (m + 1)))


def packing_report(p: float, m: int = 0) -> PackingReport:
    lat = optimal_packing_lattice(p, m)
    return PackingReport(ball=Ball(p, m), lattice=lat, density=packing_density(p, m),
                         optimal=is_packing_lattice(p, m, lat), kissing=kissing_number(p, m))
