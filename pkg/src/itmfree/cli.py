"""Command-line front-end.

Subcommands: ``stefan`` and ``spread`` run a single solve and report the
recovered values against the available references; ``table`` reruns the
tabulated parameter sets; ``profile`` and ``reconstruct`` emit CSV data for
the similarity profile and for its physical-variable image at a given time;
``check-invariance`` prints scaling-group residuals.

Exit codes: 0 success, 2 non-convergence, 3 invalid parameters,
4 singular integration.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Optional, Sequence, TextIO

from .errors import InvalidParams, ItmFreeError, SingularRhs
from .itm import ItmConfig, ItmResult, ItmStatus, evaluate_gamma, secant_solve
from .problems import (
    SpreadingParams,
    StefanParams,
    make_spreading,
    make_stefan,
    stefan_default_guesses,
    stefan_exponents,
    spreading_exponents,
    STEFAN_GUESSES,
)
from .reference import asymptotic_eta_w, exact_spreading, neumann_eta_w
from .similarity import (
    OriginKind,
    SimilarityExponents,
    check_invariance,
    gamma_from_alpha,
    reconstruct_physical,
)
from .itm import original_profile
from .ivp import steps_for_interval

EXIT_OK = 0
EXIT_NO_CONVERGENCE = 2
EXIT_INVALID_PARAMS = 3
EXIT_SINGULAR = 4

_STATUS_EXIT = {
    ItmStatus.CONVERGED: EXIT_OK,
    ItmStatus.MAX_ITER_EXCEEDED: EXIT_NO_CONVERGENCE,
    ItmStatus.OMEGA_NON_POSITIVE: EXIT_NO_CONVERGENCE,
    ItmStatus.SINGULAR_INTEGRATION: EXIT_SINGULAR,
}


def _g9(x: float) -> str:
    """Machine-readable float: 9 significant digits."""
    return format(x, ".9g")


def _f6(x: float) -> str:
    return format(x, ".6f")


def _result_dict(result: ItmResult, with_trace: bool) -> dict[str, Any]:
    d: dict[str, Any] = {
        "status": result.status.value,
        "omega": result.omega,
        "h_star": result.h_star,
        "s": result.s,
        "w0": result.w0,
        "dw0": result.dw0,
        "iterations": result.iterations,
    }
    if with_trace:
        d["trace"] = [
            {"j": it.j, "h_star": it.h_star, "gamma": it.gamma_val,
             "omega": it.omega, "s_j": it.s_j}
            for it in result.trace
        ]
    return d


def _emit_report(report: dict[str, Any], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(report, indent=2))
        out.write("\n")
        return
    if fmt == "csv":
        flat = _flatten(report)
        out.write(",".join(flat.keys()) + "\n")
        out.write(",".join(_csv_cell(v) for v in flat.values()) + "\n")
        return
    # human table
    for key, value in report.items():
        if key == "result" and isinstance(value, dict):
            for k, v in value.items():
                if k == "trace":
                    continue
                out.write(f"  {k:<12} {_human(v)}\n")
            trace = value.get("trace")
            if trace:
                out.write("  trace:\n")
                out.write(f"    {'j':>3} {'h_star':>15} {'gamma':>15} {'s_j':>12}\n")
                for it in trace:
                    out.write(f"    {it['j']:>3} {it['h_star']:>15.6f} "
                              f"{it['gamma']:>15.6e} {it['s_j']:>12.6f}\n")
        elif isinstance(value, dict):
            out.write(f"{key}:\n")
            for k, v in value.items():
                out.write(f"  {k:<12} {_human(v)}\n")
        else:
            out.write(f"{key}: {_human(value)}\n")


def _human(v: Any) -> str:
    if isinstance(v, float):
        return _f6(v)
    return str(v)


def _csv_cell(v: Any) -> str:
    if isinstance(v, float):
        return _g9(v)
    return str(v)


def _flatten(d: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    flat: dict[str, Any] = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            flat.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            continue  # traces are not flattened into single-row CSV
        else:
            flat[key] = v
    return flat


def _open_out(path: Optional[str]):
    if path is None:
        return sys.stdout, False
    return open(path, "w"), True


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--max-iter", type=int, default=50)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--out", type=str, default=None)


def _stefan_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--S", type=float, default=1.0, help="inverse Stefan number")


def _spread_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--H", type=float, default=0.5)
    p.add_argument("--L", type=float, default=-0.5)


def _solve_flags(p: argparse.ArgumentParser) -> None:
    # defaults resolve per problem: s* = 0.5; step 1e-3 (stefan) / 5e-4
    # (spread); guesses from the tabulated runs (stefan) / (0.5, 0.1)
    p.add_argument("--s-star", type=float, default=None, dest="s_star")
    p.add_argument("--step", type=float, default=None)
    p.add_argument("--h0", type=float, default=None)
    p.add_argument("--h1", type=float, default=None)


def _solve_stefan(args: argparse.Namespace) -> tuple[ItmResult, ItmConfig]:
    params = StefanParams(S=args.S)
    problem, scaling = make_stefan(params)
    h0, h1 = args.h0, args.h1
    if h0 is None or h1 is None:
        d0, d1 = stefan_default_guesses(args.S)
        h0 = d0 if h0 is None else h0
        h1 = d1 if h1 is None else h1
    config = ItmConfig(s_star=args.s_star if args.s_star is not None else 0.5,
                       step=args.step if args.step is not None else 1e-3,
                       h0=h0, h1=h1, tol=args.tol, max_iter=args.max_iter)
    return secant_solve(problem, scaling, config), config


def _solve_spread(args: argparse.Namespace) -> tuple[ItmResult, ItmConfig]:
    params = SpreadingParams(H=args.H, L=args.L)
    problem, scaling = make_spreading(params)
    config = ItmConfig(s_star=args.s_star if args.s_star is not None else 0.5,
                       step=args.step if args.step is not None else 5e-4,
                       h0=args.h0 if args.h0 is not None else 0.5,
                       h1=args.h1 if args.h1 is not None else 0.1,
                       tol=args.tol, max_iter=args.max_iter)
    return secant_solve(problem, scaling, config), config


def cmd_stefan(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    result, config = _solve_stefan(args)
    elapsed = time.perf_counter() - t0

    references: dict[str, Any] = {}
    root = neumann_eta_w(args.S)
    references["neumann_eta_w"] = root
    references["delta_neumann"] = result.s - root
    if args.S in STEFAN_GUESSES:
        asym = asymptotic_eta_w(args.S)
        references["asymptotic_eta_w"] = asym
        references["delta_asymptotic"] = result.s - asym

    report = {
        "problem": "stefan",
        "params": {"S": args.S},
        "config": {"s_star": config.s_star, "step": config.step,
                   "h0": config.h0, "h1": config.h1, "tol": config.tol,
                   "max_iter": config.max_iter},
        "result": {**_result_dict(result, args.trace),
                   "eta_w": result.s, "dU0": result.dw0},
        "references": references,
        "wall_time_s": elapsed,
    }
    out, close = _open_out(args.out)
    try:
        _emit_report(report, args.format, out)
    finally:
        if close:
            out.close()
    return _STATUS_EXIT[result.status]


def cmd_spread(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    result, config = _solve_spread(args)
    elapsed = time.perf_counter() - t0

    references: dict[str, Any] = {}
    if (args.H, args.L) == (0.5, -0.5):
        exact0 = exact_spreading(0.0)
        references["exact_U0"] = exact0.w
        references["exact_eta_w"] = 1.0
        references["delta_U0"] = result.w0 - exact0.w
        references["delta_eta_w"] = result.s - 1.0

    report = {
        "problem": "spread",
        "params": {"H": args.H, "L": args.L},
        "config": {"s_star": config.s_star, "step": config.step,
                   "h0": config.h0, "h1": config.h1, "tol": config.tol,
                   "max_iter": config.max_iter},
        "result": {**_result_dict(result, args.trace),
                   "eta_w": result.s, "U0": result.w0},
        "references": references,
        "wall_time_s": elapsed,
    }
    out, close = _open_out(args.out)
    try:
        _emit_report(report, args.format, out)
    finally:
        if close:
            out.close()
    return _STATUS_EXIT[result.status]


def cmd_table(args: argparse.Namespace) -> int:
    out, close = _open_out(args.out)
    try:
        if args.which == "stefan":
            return _table_stefan(args, out)
        return _table_spread(args, out)
    finally:
        if close:
            out.close()


def _table_stefan(args: argparse.Namespace, out: TextIO) -> int:
    rows = []
    for S, (h0, h1) in STEFAN_GUESSES.items():
        problem, scaling = make_stefan(StefanParams(S=S))
        config = ItmConfig(s_star=0.5, step=1e-3, h0=h0, h1=h1,
                           tol=args.tol, max_iter=args.max_iter)
        result = secant_solve(problem, scaling, config)
        if not result.converged:
            return EXIT_NO_CONVERGENCE
        asym = asymptotic_eta_w(S)
        rows.append({"S": S, "h_star": result.h_star, "dU0": result.dw0,
                     "eta_w": result.s, "eta_w_asymptotic": asym,
                     "delta": result.s - asym})
    _emit_rows(rows, args.format, out)
    return EXIT_OK


def _table_spread(args: argparse.Namespace, out: TextIO) -> int:
    rows = []
    problem, scaling = make_spreading(SpreadingParams(H=0.5, L=-0.5))
    for s_star in (0.5, 1.0):
        config = ItmConfig(s_star=s_star, step=5e-4, h0=0.5, h1=0.1,
                           tol=args.tol, max_iter=args.max_iter)
        result = secant_solve(problem, scaling, config)
        if not result.converged:
            return EXIT_NO_CONVERGENCE
        rows.append({"s_star": s_star,
                     "gamma0": result.trace[0].gamma_val,
                     "gamma1": result.trace[1].gamma_val,
                     "h_star": result.h_star, "U0": result.w0,
                     "eta_w": result.s, "delta": result.s - 1.0})
    _emit_rows(rows, args.format, out)
    return EXIT_OK


def _emit_rows(rows: list[dict[str, Any]], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(rows, indent=2))
        out.write("\n")
        return
    keys = list(rows[0].keys())
    if fmt == "csv":
        out.write(",".join(keys) + "\n")
        for row in rows:
            out.write(",".join(_csv_cell(row[k]) for k in keys) + "\n")
        return
    widths = {k: max(len(k), 12) for k in keys}
    out.write(" ".join(f"{k:>{widths[k]}}" for k in keys) + "\n")
    for row in rows:
        out.write(" ".join(
            f"{_human(row[k]):>{widths[k]}}" for k in keys) + "\n")


def _profile_for(args: argparse.Namespace):
    if args.problem == "stefan":
        result, config = _solve_stefan(args)
        problem, _ = make_stefan(StefanParams(S=args.S))
        exps = stefan_exponents()
    else:
        result, config = _solve_spread(args)
        problem, _ = make_spreading(SpreadingParams(H=args.H, L=args.L))
        exps = spreading_exponents()
    if not result.converged:
        return None, None, None
    profile = original_profile(problem, result.s, args.points)
    return result, profile, exps


def cmd_profile(args: argparse.Namespace) -> int:
    result, profile, _exps = _profile_for(args)
    if result is None:
        return EXIT_NO_CONVERGENCE
    out, close = _open_out(args.out)
    try:
        out.write("eta,U,dU\n")
        for i in range(len(profile)):
            out.write(f"{_g9(profile.eta[i])},{_g9(profile.u[i])},{_g9(profile.du[i])}\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_reconstruct(args: argparse.Namespace) -> int:
    if args.t <= 0.0:
        print("error: t must be positive", file=sys.stderr)
        return EXIT_INVALID_PARAMS
    result, profile, exps = _profile_for(args)
    if result is None:
        return EXIT_NO_CONVERGENCE
    phys = reconstruct_physical(profile, exps, result.s, args.t)
    out, close = _open_out(args.out)
    try:
        out.write(f"# t={_g9(args.t)} x_w={_g9(phys.x_w)}\n")
        out.write("x,u,du_dx\n")
        for i in range(len(phys.x)):
            out.write(f"{_g9(phys.x[i])},{_g9(phys.u[i])},{_g9(phys.du_dx[i])}\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_check_invariance(args: argparse.Namespace) -> int:
    kind = OriginKind.NEUMANN if args.origin == "neumann" else OriginKind.DIRICHLET
    gamma = args.gamma if args.gamma is not None else gamma_from_alpha(args.n, args.alpha)
    exps = SimilarityExponents(n=args.n, alpha=args.alpha, gamma=gamma,
                               coefficient=args.coefficient, origin_kind=kind,
                               beta=args.beta)
    residuals = check_invariance(exps)
    report = {
        "n": args.n, "alpha": args.alpha, "beta": args.beta, "gamma": gamma,
        "pde_residual": residuals[0], "origin_residual": residuals[1],
        "invariant": all(abs(r) < 1e-12 for r in residuals),
    }
    out, close = _open_out(args.out)
    try:
        if args.format == "json":
            out.write(json.dumps(report, indent=2) + "\n")
        else:
            for k, v in report.items():
                out.write(f"{k}: {v}\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="itmfree",
        description="Free boundary ODE problems via the iterative transformation method.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stefan", help="solve the one-phase Stefan problem")
    _common_flags(p)
    _stefan_flags(p)
    _solve_flags(p)
    p.set_defaults(func=cmd_stefan)

    p = sub.add_parser("spread", help="solve the viscous spreading problem")
    _common_flags(p)
    _spread_flags(p)
    _solve_flags(p)
    p.set_defaults(func=cmd_spread)

    p = sub.add_parser("table", help="rerun the tabulated parameter sets")
    _common_flags(p)
    p.add_argument("which", choices=["stefan", "spread"])
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("profile", help="emit the similarity profile as CSV")
    _common_flags(p)
    p.add_argument("--problem", choices=["stefan", "spread"], default="stefan")
    p.add_argument("--points", type=int, default=100)
    _stefan_flags(p)
    _spread_flags(p)
    _solve_flags(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("reconstruct", help="emit the physical profile at time t as CSV")
    _common_flags(p)
    p.add_argument("--problem", choices=["stefan", "spread"], default="stefan")
    p.add_argument("--points", type=int, default=100)
    p.add_argument("--t", type=float, required=True)
    _stefan_flags(p)
    _spread_flags(p)
    _solve_flags(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("check-invariance", help="scaling-group residuals")
    _common_flags(p)
    p.add_argument("--n", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--coefficient", type=float, default=1.0)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--origin", choices=["dirichlet", "neumann"], default="dirichlet")
    p.set_defaults(func=cmd_check_invariance)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_PARAMS
    except SingularRhs as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except ItmFreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
