"""Command-line front end.

    minkowski-balls [--format json|csv|text] [--out PATH] [--tol T] [--grid a:b:n] COMMAND ...

Commands: constants, lattice, packing, covering, matroid, curves, report,
export. JSON output is one object ``{"meta": {...}, "data": ...}``; CSV output
is a header plus rows, comma separated, LF line endings. Floats are rounded
to 12 significant digits so repeated runs are byte-identical.
"""
from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import math
import sys
from typing import Any

from . import __version__, ball, covering, curves, lattice, matroid, packing, report
from .errors import MinkowskiError
from .numerics import Vec2

SIG_DIGITS = 12

SHELL_COLUMNS = ["p", "lattice_kind", "idx", "x", "y"]
HEXAGON_COLUMNS = (["p", "kind"] + [f"v{i}{c}" for i in range(1, 7) for c in "xy"] + ["area"])
MODULI_COLUMNS = ["p", "sigma", "tau", "delta", "A", "residual"]


class CLIError(Exception):
    pass


# ---------------------------------------------------------------- formatting

def normalize(obj: Any) -> Any:
    """Round floats to 12 significant digits and turn the record into plain JSON types."""
    if isinstance(obj, enum.Enum):
        return normalize(obj.value)
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        if math.isnan(obj):
            return "nan"
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return float(f"{obj:.{SIG_DIGITS}g}")
    if isinstance(obj, Vec2):
        return [normalize(obj.x), normalize(obj.y)]
    if isinstance(obj, dict):
        return {str(k): normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [normalize(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def emit(command: str, params: dict, data: Any, fmt: str, columns: list[str] | None = None) -> str:
    data = normalize(data)
    if fmt == "json":
        doc = {"meta": {"version": __version__, "command": command, "params": normalize(params)},
               "data": data}
        return json.dumps(doc, indent=2) + "\n"
    rows = data if isinstance(data, list) else [data]
    if fmt == "csv":
        cols = columns or (list(rows[0]) if rows else [])
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r.get(c, "")) for c in cols])
        return buf.getvalue()
    lines = []
    for i, r in enumerate(rows):
        if i:
            lines.append("")
        width = max((len(k) for k in r), default=0)
        lines.extend(f"{k.ljust(width)} : {_cell(v)}" for k, v in r.items())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- argument helpers

def parse_p(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    return float(text)


def parse_grid(text: str) -> list[float]:
    try:
        start, stop, count = text.split(":")
        start, stop, n = parse_p(start), parse_p(stop), int(count)
    except ValueError:
        raise CLIError(f"grid must look like start:stop:count, got {text!r}") from None
    if n < 1:
        raise CLIError("grid needs at least one point")
    if n == 1:
        return [start]
    return [start + (stop - start) * i / (n - 1) for i in range(n)]


def _p_values(args) -> list[float]:
    if args.grid:
        ps = parse_grid(args.grid)
    elif args.p is not None:
        ps = [args.p]
    else:
        raise CLIError("give --p or --grid")
    return ps


# ---------------------------------------------------------------- commands

def cmd_constants(p: float) -> dict:
    if p == math.inf:
        # the square: critical determinant 1
        return {"p": p, "regime": ball.regime(p), "sigma_p": 2.0, "tau_p": 0.0, "delta0": 1.0,
                "delta1": 1.0, "delta_crit": 1.0, "volume": 4.0, "davis_p0": ball.davis_constant(),
                "limit": True}
    cd = ball.critical_data(p)
    return {"p": p, "regime": cd.regime, "sigma_p": cd.sigma_p, "tau_p": cd.tau_p,
            "delta0": cd.delta0, "delta1": cd.delta1, "delta_crit": cd.delta_crit,
            "volume": ball.volume(p), "davis_p0": ball.davis_constant(), "limit": p == 1.0}


def cmd_lattice(p: float, kind: str, tol: float) -> dict:
    lat = lattice.critical_lattice_0(p) if kind == "0" else lattice.critical_lattice_1(p)
    sh = lattice.shell(p, lat, tol=tol)
    return {"p": p, "kind": kind, "u_x": lat.u.x, "u_y": lat.u.y, "v_x": lat.v.x, "v_y": lat.v.y,
            "det": lat.abs_det, "admissible": lattice.is_admissible(p, 1.0, lat),
            "shell_size": len(sh), "shell_area": covering.HexagonReport.from_half(
                sh.representatives(), "inscribed-al").area,
            "tangent_area": covering.circumscribed_hexagon(p, sh).area}


def cmd_packing(p: float, m: int) -> dict:
    r = packing.packing_report(p, m)
    return {"p": p, "m": m, "regime": ball.regime(p), "det": r.lattice.abs_det,
            "u_x": r.lattice.u.x, "u_y": r.lattice.u.y, "v_x": r.lattice.v.x, "v_y": r.lattice.v.y,
            "density": r.density, "is_packing": r.optimal, "kissing": r.kissing}


def cmd_covering(p: float) -> dict:
    b = covering.covering_bounds(p)
    h = covering.max_inscribed_hexagon(p)
    return {"p": p, "min_A": covering.min_area(p), "i_min_A": covering.i_min_area(p),
            "sas_lower": b.sas_lower, "i_min_lower": b.i_min_lower, "trivial_upper": b.trivial_upper,
            "i_min_beats_sas": b.i_min_lower > b.sas_lower,
            "max_inscribed_hexagon": h.area, "covering_density": covering.covering_density(p, h.area),
            "inscribed_min_area": covering.inscribed_min_area(p, 0),
            "circumscribed_min_area": covering.circumscribed_min_area(p, 0)}


def _moduli_row(p: float, s: float) -> dict:
    mp = covering.moduli_point(p, s)
    return {"p": p, "sigma": mp.sigma, "tau": mp.tau, "delta": mp.delta, "A": mp.area,
            "residual": mp.third_point_residual}


def cmd_sweep_moduli(p: float, sigmas: list[float]) -> list[dict]:
    hi = ball.sigma(p)
    bad = [s for s in sigmas if not 1.0 - 1e-12 <= s <= hi + 1e-12]
    if bad:
        raise CLIError(f"sigma grid leaves the valid interval [1, {hi!r}] for p={p}: {bad}")
    return [_moduli_row(p, s) for s in sigmas]


def cmd_sweep_alpha(alpha: float, ps: list[float]) -> list[dict]:
    return [dict(_moduli_row(p, covering.sigma_alpha(p, alpha)), alpha=alpha) for p in ps]


def cmd_max_curve(ps: list[float]) -> list[dict]:
    return [r._asdict() for r in covering.max_area_curve(ps)]


def _fmt_set(s, ground) -> str:
    return "{" + ",".join(str(e) for e in sorted(s, key=list(ground).index)) + "}"


def cmd_matroid(p: float | None, dimension: int, reading: str, uniform: tuple[int, int] | None) -> dict:
    if uniform:
        M = matroid.uniform(*uniform)
        metric = None
        label = f"U_{{{uniform[0]},{uniform[1]}}}"
    else:
        mm = matroid.shell_matroid(p, dimension, reading)
        M, metric, label = mm.matroid, mm.metric, f"shell(p={p!r}, dim={dimension}, {reading})"
    circ, fl = matroid.circuits(M), matroid.flats(M)
    g = M.ground
    bases = sorted(M.bases(), key=lambda b: _fmt_set(b, g))
    out = {
        "matroid": label, "ground": [str(e) for e in g], "rank": M.rank(),
        "independent_sets": len(M.independents),
        "bases": [_fmt_set(b, g) for b in bases],
        "circuits": sorted(_fmt_set(c, g) for c in circ),
        "flats": len(fl),
        "im_axioms": not matroid.independence_violations(g, M.independents),
        "cm_axiom": not matroid.circuit_violations(g, circ),
        "fm_axioms": not matroid.flat_violations(g, fl),
    }
    if metric is not None:
        out["basis_metric"] = [metric[b] for b in bases]
        if len(g) <= 8:
            out["isomorphic_to_U23"] = matroid.is_isomorphic(M, matroid.uniform(2, 3))
    return out


def cmd_curves(n: int, deg: int | None, arakelov: float | None) -> dict:
    g = curves.genus(n)
    out: dict = {"n": n, "genus": g}
    if deg is not None:
        out["deg"] = deg
        out["euler_characteristic"] = curves.rr_euler(deg, g)
    if arakelov is not None:
        ad = curves.arakelov_degree(arakelov)
        out.update(arakelov_deg=ad.deg, deg2=ad.deg2, rr_rhs=curves.rr_arakelov_rhs(arakelov))
    return out


def export_shells(ps: list[float], kinds: list[str], tol: float) -> list[dict]:
    rows = []
    for p in ps:
        for kind in kinds:
            lat = lattice.critical_lattice_0(p) if kind == "0" else lattice.critical_lattice_1(p)
            for i, q in enumerate(lattice.shell(p, lat, tol=tol)):
                rows.append({"p": p, "lattice_kind": kind, "idx": i, "x": q.x, "y": q.y})
    return rows


def export_hexagons(ps: list[float], kind: str, sigma: float | None) -> list[dict]:
    rows = []
    for p in ps:
        if kind == "inscribed-max":
            h = covering.max_inscribed_hexagon(p)
        elif kind == "inscribed-al":
            h = covering.al_hexagon(p, 1.0 if sigma is None else sigma)
        else:
            sh = lattice.shell(p, packing.critical_lattice(p))
            h = covering.circumscribed_hexagon(p, sh)
        row = {"p": p, "kind": h.kind}
        for i, w in enumerate(h.vertices, 1):
            row[f"v{i}x"], row[f"v{i}y"] = w.x, w.y
        row["area"] = h.area
        rows.append(row)
    return rows


def export_points(n: int, c: float, m: int) -> tuple[list[dict], list[str]]:
    cols = ["n", "c", "m", "idx"] + [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
    pts = ball.arithmetic_sphere_points(n, c, m)
    proj = ball.project_to_unit_sphere(pts, c, m) if m >= 1 else pts
    rows = []
    for i, (x, y) in enumerate(zip(pts, proj)):
        row = {"n": n, "c": c, "m": m, "idx": i}
        row.update({f"x{j}": t for j, t in enumerate(x, 1)})
        row.update({f"y{j}": float(t) for j, t in enumerate(y, 1)})
        rows.append(row)
    return rows, cols


# ---------------------------------------------------------------- parser

def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help="boundary-membership tolerance for shells (default 1e-9)")
    common.add_argument("--grid", metavar="START:STOP:COUNT", default=argparse.SUPPRESS)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="minkowski-balls", parents=[common],
                                     description="Invariants of planar Minkowski balls D_p.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("constants", parents=[common], help="sigma_p, tau_p, critical determinants")
    sp.add_argument("--p", type=parse_p)

    sp = sub.add_parser("lattice", parents=[common], help="critical lattices and their shells")
    sp.add_argument("--p", type=parse_p)
    sp.add_argument("--kind", choices=["0", "1"], default="0")

    sp = sub.add_parser("packing", parents=[common], help="optimal packing of 2^m D_p")
    sp.add_argument("--p", type=parse_p)
    sp.add_argument("--m", type=int, default=0)

    sp = sub.add_parser("covering", parents=[common], help="covering bounds and moduli sweeps")
    sp.add_argument("--p", type=parse_p)
    sp.add_argument("--sweep", choices=["none", "sigma", "alpha", "max"], default="none",
                    help="sigma: --grid is a sigma grid at fixed --p; alpha/max: --grid is a p grid")
    sp.add_argument("--alpha", type=float, default=2.0)

    sp = sub.add_parser("matroid", parents=[common], help="shell and uniform matroids")
    sp.add_argument("--p", type=parse_p, default=3.0)
    sp.add_argument("--dimension", type=int, choices=[2, 3], default=2)
    sp.add_argument("--reading", choices=list(matroid.SHELL_READINGS), default="basis")
    sp.add_argument("--uniform", type=int, nargs=2, metavar=("K", "N"))

    sp = sub.add_parser("curves", parents=[common], help="genus and Riemann-Roch arithmetic")
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--deg", type=int)
    sp.add_argument("--arakelov-deg", type=float)

    sub.add_parser("report", parents=[common], help="published values vs recomputed values")

    sp = sub.add_parser("export", parents=[common], help="write shells, hexagons or points")
    sp.add_argument("what", choices=["shells", "hexagons", "points"])
    sp.add_argument("--p", type=parse_p)
    sp.add_argument("--kind", default=None,
                    help="shells: 0, 1 or both; hexagons: inscribed-max, inscribed-al, circumscribed")
    sp.add_argument("--sigma", type=float)
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--c", type=float, default=2.0)
    sp.add_argument("--m", type=int, default=1)
    return parser


def run(argv: list[str] | None = None) -> tuple[str, str, Any, list[str] | None]:
    """Parse arguments and compute; returns (command, params, data, csv columns)."""
    args = build_parser().parse_args(argv)
    for k, v in (("format", "json"), ("out", None), ("tol", lattice.BOUNDARY_TOL), ("grid", None)):
        if not hasattr(args, k):
            setattr(args, k, v)
    params = {k: v for k, v in vars(args).items() if k not in ("format", "out", "command") and v is not None}
    columns = None
    cmd = args.command
    if cmd == "constants":
        data = [cmd_constants(p) for p in _p_values(args)]
    elif cmd == "lattice":
        data = [cmd_lattice(p, args.kind, args.tol) for p in _p_values(args)]
    elif cmd == "packing":
        data = [cmd_packing(p, args.m) for p in _p_values(args)]
    elif cmd == "covering":
        if args.sweep == "sigma":
            if args.p is None:
                raise CLIError("--sweep sigma needs --p")
            sig = parse_grid(args.grid) if args.grid else parse_grid(f"1:{ball.sigma(args.p)!r}:5")
            data, columns = cmd_sweep_moduli(args.p, sig), MODULI_COLUMNS
        elif args.sweep == "alpha":
            data = cmd_sweep_alpha(args.alpha, _p_values(args))
            columns = ["alpha"] + MODULI_COLUMNS
        elif args.sweep == "max":
            data = cmd_max_curve(_p_values(args))
        else:
            data = [cmd_covering(p) for p in _p_values(args)]
    elif cmd == "matroid":
        data = cmd_matroid(args.p, args.dimension, args.reading,
                           tuple(args.uniform) if args.uniform else None)
    elif cmd == "curves":
        data = cmd_curves(args.n, args.deg, args.arakelov_deg)
    elif cmd == "report":
        data = report.discrepancy_report()
    else:
        if args.what == "shells":
            kinds = ["0", "1"] if args.kind in (None, "both") else [args.kind]
            ps = _p_values(args) if (args.grid or args.p is not None) else []
            data, columns = export_shells(ps, kinds, args.tol), SHELL_COLUMNS
        elif args.what == "hexagons":
            ps = _p_values(args) if (args.grid or args.p is not None) else []
            data, columns = export_hexagons(ps, args.kind or "inscribed-max", args.sigma), HEXAGON_COLUMNS
        else:
            data, columns = export_points(args.n, args.c, args.m)
    single = cmd in ("constants", "lattice", "packing") or (cmd == "covering" and args.sweep == "none")
    if single and not args.grid:
        data = data[0]
    return args, params, data, columns


def main(argv: list[str] | None = None) -> int:
    fmt = "json"
    try:
        args, params, data, columns = run(argv)
        fmt = args.format
        text = emit(args.command, params, data, fmt, columns)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except (MinkowskiError, CLIError, ValueError, OSError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
