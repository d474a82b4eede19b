"""Command-line driver: one subcommand per reproduction recipe.

Exit codes: 0 success, 1 usage error, 2 tolerance miss, 3 numeric failure.
Options resolve as explicit flag > JSON config > built-in default; the
built-in defaults are the reference configurations.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import asym, band, cross2d, refdata, symbol
from .errors import CrossbandError, NumericError, ParameterError

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_USAGE, EXIT_TOLERANCE, EXIT_NUMERIC = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


_DEFAULTS = {
    "table1": {"degrees": list(range(1, 13)), "out": "table1.csv", "quiet": False},
    "band-scan": {
        "step": 0.02, "refine": 1, "window": None, "axis_only": False,
        "full_grid": False, "out_dir": ".", "threads": 1, "quiet": False,
    },
    "kappa-ladder": {
        "lmax": 10, "l": None, "neigs": 1, "degree": cross2d.DEFAULT_DEGREE,
        "slope": False, "rasters": False, "resolution": 81, "out_dir": ".", "quiet": False,
    },
    "quasimode": {
        "epsilons": [2.0 ** -4, 2.0 ** -5, 2.0 ** -6], "omit_psi1": False,
        "out": "quasimode_report.json", "quiet": False,
    },
    "lambda-set": {
        "points": None, "n": 3, "degree": cross2d.DEFAULT_DEGREE,
        "out": "lambda_set.json", "quiet": False,
    },
    "ppstar": {"mu_list": None, "mu": 0.0, "nu": 0.0, "out": None, "quiet": False},
}


def _resolve(args: argparse.Namespace, command: str) -> dict:
    """Merge flag values, config file entries, and defaults; reject unknown keys."""
    opts = dict(_DEFAULTS[command])
    if args.config:
        with open(args.config) as fh:
            cfg = json.load(fh)
        cfg.pop("schema_version", None)
        unknown = set(cfg) - set(opts)
        if unknown:
            raise ParameterError(f"unknown config keys for {command}: {sorted(unknown)}")
        opts.update(cfg)
    for key in opts:
        flag = getattr(args, key, None)
        if flag is not None:
            opts[key] = flag
    return opts


def _floats(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def _say(opts, *msg):
    if not opts["quiet"]:
        print(*msg)


def cmd_table1(opts) -> int:
    rows = band.table1_rows(list(opts["degrees"]))
    with open(opts["out"], "w", newline="\n") as fh:
        fh.write("Q,rho1_00,alpha0,rho1_alpha0\n")
        for q, r00, aq, ra in rows:
            fh.write(f"{q},{r00:.17g},{aq:.17g},{ra:.17g}\n")
    worst = (0.0, None)
    for q, r00, _, ra in rows:
        ref00, _, refa = refdata.DEGREE_STUDY[q]
        err = max(abs(r00 - ref00) / ref00, abs(ra - refa) / refa)
        if err > worst[0]:
            worst = (err, q)
        _say(opts, f"Q={q:2d}  rho1(0,0)={r00:.15f}  rho1(alpha,0)={ra:.15f}  rel.err={err:.2e}")
    if worst[0] > 1e-11:
        _say(opts, f"FAIL: worst relative error {worst[0]:.3e} at Q={worst[1]}")
        return EXIT_TOLERANCE
    return EXIT_OK


def cmd_band_scan(opts) -> int:
    step = 0.01 if opts["full_grid"] else float(opts["step"])
    out = Path(opts["out_dir"])
    out.mkdir(parents=True, exist_ok=True)
    xi_range = (0.0, 0.0) if opts["axis_only"] else (-2.0, 2.0)
    grid = band.scan((-2.0, 2.0), xi_range, step, threads=int(opts["threads"]))
    band.write_band_csv(grid, str(out / "band_grid.csv"))
    levels = int(opts["refine"])
    window = tuple(opts["window"]) if opts["window"] else None
    if levels >= 1:
        res = band.refine_min(grid, levels, window=window)
    else:
        i, j = np.unravel_index(np.argmin(grid.rho1), grid.rho1.shape)
        res = band.MinResult(
            alpha0=abs(float(grid.alpha_values[i])), xi0=float(grid.xi_values[j]),
            S0=float(grid.rho1[i, j]),
            refinement_history=[(grid.step, (float(grid.alpha_values[i]),
                                             float(grid.xi_values[j])), float(grid.rho1[i, j]))],
        )
    band.write_min_json(res, str(out / "min_result.json"))
    _say(opts, f"alpha0={res.alpha0}  xi0={res.xi0}  S0={res.S0}")
    return EXIT_OK


def cmd_kappa_ladder(opts) -> int:
    out = Path(opts["out_dir"])
    out.mkdir(parents=True, exist_ok=True)
    levels = [int(opts["l"])] if opts["l"] is not None else list(range(int(opts["lmax"]) + 1))
    n_eigs, degree = int(opts["neigs"]), int(opts["degree"])
    rows, failures, miss = [], 0, 0.0
    for l in levels:
        eps = cross2d.epsilon_of_level(l)
        try:
            spec = cross2d.ladder_spec(l, degree=degree)
            res = cross2d.solve_sparse(cross2d.assemble_cross(spec), n_eigs)
            kappas = [float(v) for v in res.eigenvalues]
            rows.append((l, eps, kappas, None))
            if l in refdata.KAPPA1:
                miss = max(miss, abs(kappas[0] - refdata.KAPPA1[l]))
            _say(opts, f"l={l:2d}  eps={eps:.6f}  kappa1={kappas[0]:.6f}")
            if opts["rasters"]:
                sg, tg, field = cross2d.modulus_field(
                    res, spec, 0,
                    (spec.mesh_s.interval_lo, spec.mesh_s.interval_hi,
                     spec.mesh_t.interval_lo, spec.mesh_t.interval_hi),
                    int(opts["resolution"]),
                )
                cross2d.write_raster_csv(sg, tg, field, str(out / f"modulus_{l}.csv"))
        except CrossbandError as exc:
            rows.append((l, eps, None, str(exc)))
            failures += 1
            _say(opts, f"l={l:2d}  FAILED: {exc}")
    cross2d.write_ladder_csv(rows, str(out / "kappa_ladder.csv"))
    if opts["slope"]:
        s0 = _refined_s0()
        pts = [(eps, k[0] - s0) for l, eps, k, _ in rows if k is not None and 6 <= l <= 10]
        report = {"S0": s0, "points": pts}
        if len(pts) >= 2:
            report["slope"] = asym.residual_slope([p[0] for p in pts], [p[1] for p in pts])
            _say(opts, f"convergence slope {report['slope']:.4f}")
        with open(out / "convergence_report.json", "w") as fh:
            json.dump(report, fh, indent=2)
    if failures:
        return EXIT_NUMERIC
    if miss > 5e-4:
        _say(opts, f"FAIL: worst kappa1 deviation {miss:.2e} above 5e-4")
        return EXIT_TOLERANCE
    return EXIT_OK


def _refined_s0(return_alpha: bool = False):
    """Minimize the discrete band function along the axis to full precision."""
    from scipy.optimize import minimize_scalar

    solver = band._QuadrantSolver(symbol.default_mesh())
    opt = minimize_scalar(lambda a: solver.rho1(a, 0.0), bracket=(0.70, 0.786, 0.87))
    return (float(opt.x), float(opt.fun)) if return_alpha else float(opt.fun)


def cmd_quasimode(opts) -> int:
    epsilons = [float(e) for e in opts["epsilons"]]
    if not epsilons:
        print("usage: at least one epsilon is required", file=sys.stderr)
        return EXIT_USAGE
    alpha0, s0 = _refined_s0(return_alpha=True)
    residuals = [
        asym.quasimode_residual(e, alpha0, omit_psi1=bool(opts["omit_psi1"])) for e in epsilons
    ]
    report = {
        "alpha0": alpha0,
        "S0": s0,
        "omit_psi1": bool(opts["omit_psi1"]),
        "epsilons": epsilons,
        "residual_ratios": residuals,
    }
    if len(epsilons) >= 2:
        report["slope"] = asym.residual_slope(epsilons, residuals)
        _say(opts, f"residual slope {report['slope']:.4f}")
    asym.write_quasimode_json(report, opts["out"])
    return EXIT_OK


def cmd_lambda_set(opts) -> int:
    if not opts["points"]:
        print("usage: lambda-set requires --points <json file>", file=sys.stderr)
        return EXIT_USAGE
    with open(opts["points"]) as fh:
        raw = json.load(fh)
    points = [asym.CrossingPoint(label=p["label"], epsilon=p["epsilon"], Xi=p["Xi"]) for p in raw]
    degree, n = int(opts["degree"]), int(opts["n"])

    def solver(eps: float) -> list[float]:
        spec = cross2d.spec_for_epsilon(eps, degree=degree)
        return [float(v) for v in
                cross2d.solve_sparse(cross2d.assemble_cross(spec), n).eigenvalues]

    ls = asym.build_lambda_set(points, n, solver)
    asym.write_lambda_json(ls, opts["out"])
    _say(opts, f"{len(ls.entries)} entries, leading value {ls.leading:.6f}")
    return EXIT_OK


def cmd_ppstar(opts) -> int:
    if not opts["mu_list"]:
        print("usage: ppstar requires --mu-list", file=sys.stderr)
        return EXIT_USAGE
    bounds = asym.ppstar_bound([float(x) for x in opts["mu_list"]],
                               float(opts["mu"]), float(opts["nu"]))
    payload = {"bounds": bounds}
    _say(opts, json.dumps(payload))
    if opts["out"]:
        with open(opts["out"], "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="crossband")
    parser.add_argument("--config", help="JSON config file; flags override its entries")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table1", help="degree-convergence table")
    p.add_argument("--degrees", type=lambda s: [int(x) for x in s.split(",")])
    p.add_argument("--out")
    p.add_argument("--quiet", action="store_true", default=None)

    p = sub.add_parser("band-scan", help="band-function grid and minimizer")
    p.add_argument("--step", type=float)
    p.add_argument("--refine", type=int)
    p.add_argument("--window", type=_floats, help="alpha window lo,hi for the first level")
    p.add_argument("--axis-only", dest="axis_only", action="store_true", default=None)
    p.add_argument("--full-grid", dest="full_grid", action="store_true", default=None)
    p.add_argument("--threads", type=int)
    p.add_argument("--out-dir", dest="out_dir")
    p.add_argument("--quiet", action="store_true", default=None)

    p = sub.add_parser("kappa-ladder", help="2D ground eigenvalues over the epsilon ladder")
    p.add_argument("--lmax", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--neigs", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--slope", action="store_true", default=None)
    p.add_argument("--rasters", action="store_true", default=None)
    p.add_argument("--resolution", type=int)
    p.add_argument("--out-dir", dest="out_dir")
    p.add_argument("--quiet", action="store_true", default=None)

    p = sub.add_parser("quasimode", help="small-angle quasimode residual study")
    p.add_argument("--epsilons", type=_floats)
    p.add_argument("--omit-psi1", dest="omit_psi1", action="store_true", default=None)
    p.add_argument("--out")
    p.add_argument("--quiet", action="store_true", default=None)

    p = sub.add_parser("lambda-set", help="merged scaled eigenvalues over crossing points")
    p.add_argument("--points")
    p.add_argument("--n", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--out")
    p.add_argument("--quiet", action="store_true", default=None)

    p = sub.add_parser("ppstar", help="reciprocal-quasimode eigenvalue bounds")
    p.add_argument("--mu-list", dest="mu_list", type=_floats)
    p.add_argument("--mu", type=float)
    p.add_argument("--nu", type=float)
    p.add_argument("--out")
    p.add_argument("--quiet", action="store_true", default=None)
    return parser


_HANDLERS = {
    "table1": cmd_table1,
    "band-scan": cmd_band_scan,
    "kappa-ladder": cmd_kappa_ladder,
    "quasimode": cmd_quasimode,
    "lambda-set": cmd_lambda_set,
    "ppstar": cmd_ppstar,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        opts = _resolve(args, args.command)
        return _HANDLERS[args.command](opts)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
