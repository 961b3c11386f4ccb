"""Side-by-side audit of published figures against what the formulas give.

Every section holds the published value, the recomputed value(s) and a
verdict string; nothing here is used by the rest of the library.
"""
from __future__ import annotations

from . import covering
from .ball import critical_data, critical_determinant, davis_constant, sigma, tau, volume
from .lattice import shortest_vector, sublattice
from .packing import critical_lattice, is_packing_lattice, optimal_packing_lattice

PUBLISHED_VOLUME_D3 = 3.5200
PUBLISHED_GAMMA_D3 = 3.3310
PUBLISHED_DENSITY_D3 = 1.0567
PUBLISHED_TAU_FREE = 0.1200

INDEX_TWO = {
    "(2u, v)": ((2, 0), (0, 1)),
    "(u, 2v)": ((1, 0), (0, 2)),
    "(u+v, 2v)": ((1, 1), (0, 2)),
}


def volume_section() -> dict:
    v = volume(3.0)
    return {"published": PUBLISHED_VOLUME_D3, "formula": v,
            "difference": v - PUBLISHED_VOLUME_D3}


def covering_constant_section() -> dict:
    s = covering.sigma_alpha(3.0, 2.0)
    free = covering.moduli_area_free(3.0, s, PUBLISHED_TAU_FREE)
    mp = covering.moduli_point(3.0, s)
    hexmax = covering.max_inscribed_hexagon(3.0).area
    return {
        "published": PUBLISHED_GAMMA_D3,
        "sigma": s,
        "tau_published": PUBLISHED_TAU_FREE,
        "area_at_published_inputs": free,
        "third_point_residual_at_published_inputs": covering.third_point_residual(3.0, s, PUBLISHED_TAU_FREE),
        "tau_constrained": mp.tau,
        "area_constrained": mp.area,
        "max_inscribed_hexagon": hexmax,
        "volume": volume(3.0),
        "published_minus_area_at_inputs": PUBLISHED_GAMMA_D3 - free,
        "published_exceeds_max_hexagon": PUBLISHED_GAMMA_D3 > hexmax,
    }


def density_section() -> dict:
    hexmax = covering.max_inscribed_hexagon(3.0).area
    return {
        "published": PUBLISHED_DENSITY_D3,
        "published_inputs_ratio": PUBLISHED_VOLUME_D3 / PUBLISHED_GAMMA_D3,
        "formula_volume_over_max_hexagon": covering.covering_density(3.0, hexmax),
        "formula_volume_over_constrained_section": covering.covering_density(
            3.0, covering.section_curve(3.0, 2.0)),
    }


def index_two_section(p: float = 3.0) -> dict:
    lat = critical_lattice(p)
    rows = []
    for name, M in INDEX_TWO.items():
        sub = sublattice(lat, M)
        norm, a, b = shortest_vector(p, sub, 2.0)
        rows.append({"sublattice": name, "det": sub.abs_det, "packs_D_p": is_packing_lattice(p, 0, sub),
                     "witness_norm": norm, "witness": [a, b]})
    dil = optimal_packing_lattice(p, 0)
    return {
        "p": p,
        "critical_det": lat.abs_det,
        "required_det": 4.0 * critical_determinant(p),
        "index_two": rows,
        "dilated": {"det": dil.abs_det, "packs_D_p": is_packing_lattice(p, 0, dil)},
        "index_2^m_vs_critical_det_of_2^(m-1)D": [
            {"m": m, "index_sublattice_det": 2 ** m * lat.abs_det,
             "critical_det_2^(m-1)D": 4.0 ** (m - 1) * lat.abs_det,
             "match": abs(2 ** m - 4.0 ** (m - 1)) < 1e-12}
            for m in range(1, 5)
        ],
    }


def branch_section() -> list[dict]:
    """Which candidate determinant is the minimum, per regime."""
    out = []
    for p in (1.5, 2.3, 3.0):
        cd = critical_data(p)
        out.append({"p": p, "regime": cd.regime.value, "delta0": cd.delta0, "delta1": cd.delta1,
                    "minimum": "delta0" if cd.delta0 < cd.delta1 else "delta1",
                    "delta_crit": cd.delta_crit})
    return out


def bound_comparison_section(ps=(2.3, 2.5725, 3.0, 5.0, 10.0)) -> list[dict]:
    out = []
    for p in ps:
        b = covering.covering_bounds(p)
        out.append({"p": p, "sas_lower": b.sas_lower, "i_min_lower": b.i_min_lower,
                    "i_min_better": b.i_min_lower > b.sas_lower})
    return out


def limit_section() -> list[dict]:
    out = []
    for p, target in ((1.02, 2.0), (50.0, 4.0)):
        a = covering.max_inscribed_hexagon(p).area
        out.append({"p": p, "limit_area": target, "max_hexagon": a, "gap": abs(a - target)})
    return out


def discrepancy_report() -> dict:
    return {
        "constants": {"tau_3": tau(3.0), "sigma_3": sigma(3.0), "davis_p0": davis_constant()},
        "volume_D3": volume_section(),
        "covering_constant_D3": covering_constant_section(),
        "covering_density_D3": density_section(),
        "index_two_sublattices": index_two_section(),
        "critical_branch": branch_section(),
        "lower_bound_comparison": bound_comparison_section(),
        "hexagon_limits": limit_section(),
    }
