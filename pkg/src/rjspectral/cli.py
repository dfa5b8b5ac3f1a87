"""Command-line front end emitting machine-readable CSV/JSON solve data."""

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .eyring_powell import FluidParams
from .shooting import ShootingConfig, shoot
from .solver import RationalJacobiSolver

__all__ = ["RunRecord", "build_parser", "main"]

_PROFILE_DEGREES = (10, 15, 25, 50)


def _fmt(value: float) -> str:
    return f"{float(value):.10f}"


def _eval_points(x_max: float) -> np.ndarray:
    """0 to x_max in steps of 0.5 (exact binary halves)."""
    if x_max <= 0:
        raise ValueError("--x-max-eval must be positive")
    return 0.5 * np.arange(int(round(2.0 * x_max)) + 1)


@dataclass
class RunRecord:
    """One solve: config snapshot, coefficients, profile rows, reports.

    Timing lives in the meta block so that the data portion of two identical
    runs compares equal.
    """

    config: dict
    coefficients: list
    rows: list
    reports: list
    meta: dict

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "coefficients": self.coefficients,
            "rows": self.rows,
            "reports": self.reports,
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunRecord":
        return cls(
            config=data["config"],
            coefficients=data["coefficients"],
            rows=data["rows"],
            reports=data["reports"],
            meta=data["meta"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        return cls.from_dict(json.loads(text))


def _solver_from_args(args, **overrides) -> RationalJacobiSolver:
    kwargs = dict(
        n_basis=args.n_basis,
        map_scale=args.map_l,
        alpha=args.alpha,
        beta=args.beta,
        epsilon=args.epsilon,
        delta=args.delta,
        max_iter=args.iters,
        tol=args.tol,
    )
    kwargs.update(overrides)
    return RationalJacobiSolver(**kwargs)


def _record_from_solver(solver: RationalJacobiSolver, points: np.ndarray) -> RunRecord:
    solver.fit()
    f = solver.derivative(points, 0)
    fp = solver.derivative(points, 1)
    fpp = solver.derivative(points, 2)
    rows = [
        {"x": float(x), "f": float(a), "fp": float(b), "fpp": float(c)}
        for x, a, b, c in zip(points, f, fp, fpp)
    ]
    reports = [
        {"iter": r.iteration, "delta_norm": r.coeff_delta_norm, "res_norm": r.residual_norm}
        for r in solver.reports_
    ]
    config = {key: value for key, value in solver.get_params().items()}
    config["eval_points"] = [float(x) for x in points]
    return RunRecord(
        config=config,
        coefficients=[float(c) for c in solver.coefficients_],
        rows=rows,
        reports=reports,
        meta={"wall_time_s": solver.fit_time_},
    )


def _converged(solver: RationalJacobiSolver) -> bool:
    if solver.tol is None:
        return True
    return solver.reports_[-1].coeff_delta_norm < solver.tol


def _write_csv(path: str, header: list, rows: list) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)


def cmd_solve(args) -> int:
    solver = _solver_from_args(args)
    record = _record_from_solver(solver, _eval_points(args.x_max_eval))
    text = record.to_json()
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0 if _converged(solver) else 1


def cmd_tables(args) -> int:
    os.makedirs(args.out, exist_ok=True)
    points = _eval_points(args.x_max_eval)

    profiles = {}
    for degree in _PROFILE_DEGREES:
        solver = _solver_from_args(args, n_basis=degree)
        solver.fit()
        profiles[degree] = {order: solver.derivative(points, order) for order in range(3)}

    profile_path = os.path.join(args.out, "profiles_by_n.csv")
    rows = []
    for name, order in (("f", 0), ("fp", 1), ("fpp", 2)):
        for i, x in enumerate(points):
            rows.append(
                [name, _fmt(x)] + [_fmt(profiles[degree][order][i]) for degree in _PROFILE_DEGREES]
            )
    _write_csv(profile_path, ["quantity", "x"] + [f"n{d}" for d in _PROFILE_DEGREES], rows)

    model = FluidParams(args.epsilon, args.delta)
    _, trajectory = shoot(model, ShootingConfig())
    h = trajectory[1, 0] - trajectory[0, 0]
    low_degree = _PROFILE_DEGREES[0]
    integer_x = [float(k) for k in range(int(args.x_max_eval) + 1)]
    spectral_fp = {order: profiles[low_degree][order] for order in (1,)}
    point_index = {float(x): i for i, x in enumerate(points)}

    comparison_path = os.path.join(args.out, "velocity_comparison.csv")
    rows = []
    for x in integer_x:
        rk4_fp = trajectory[int(round(x / h)), 2]
        rows.append([_fmt(x), _fmt(rk4_fp), _fmt(spectral_fp[1][point_index[x]])])
    _write_csv(comparison_path, ["x", "rk4", f"spectral_n{low_degree}"], rows)

    print(f"wrote {profile_path}")
    print(f"wrote {comparison_path}")
    return 0


def cmd_sweep(args) -> int:
    if len(args.values) < 1:
        raise ValueError("--values needs at least one value")
    points = _eval_points(args.x_max_eval)
    if args.param == "epsilon":
        fixed = {"delta": args.delta if args.delta is not None else 0.2}
    else:
        fixed = {"epsilon": args.epsilon if args.epsilon is not None else 0.1}

    rows = []
    all_converged = True
    for value in sorted(args.values):
        overrides = dict(fixed)
        overrides[args.param] = value
        try:
            solver = RationalJacobiSolver(
                n_basis=args.n_basis,
                map_scale=args.map_l,
                alpha=args.alpha,
                beta=args.beta,
                max_iter=args.iters,
                tol=args.tol,
                epsilon=overrides.get("epsilon", 0.3),
                delta=overrides.get("delta", 0.1),
            )
            solver.fit()
        except Exception as exc:  # a failed solve must not abort the sweep
            print(f"sweep {args.param}={value}: {exc}", file=sys.stderr)
            rows.append([args.param, _fmt(value), "", "", "", "failed"])
            all_converged = False
            continue
        fp = solver.derivative(points, 1)
        fpp = solver.derivative(points, 2)
        for i, x in enumerate(points):
            rows.append([args.param, _fmt(value), _fmt(x), _fmt(fp[i]), _fmt(fpp[i]), "ok"])
        all_converged = all_converged and _converged(solver)

    _write_csv(args.out, ["param", "value", "x", "fp", "fpp", "status"], rows)
    print(f"wrote {args.out}")
    return 0 if all_converged else 1


def cmd_ldiag(args) -> int:
    rows = []
    for map_l in args.map_l_values:
        solver = _solver_from_args(args, map_scale=map_l)
        solver.fit()
        residual_norm = solver.reports_[-1].residual_norm
        for j, coeff in enumerate(solver.coefficients_):
            magnitude = np.log10(max(abs(coeff), 1e-300))
            rows.append([_fmt(map_l), str(j), _fmt(magnitude), f"{residual_norm:.10e}"])
    _write_csv(args.out, ["map_l", "j", "log10_abs_coeff", "max_abs_residual"], rows)
    print(f"wrote {args.out}")
    return 0


def cmd_oracle(args) -> int:
    model = FluidParams(args.epsilon, args.delta)
    config = ShootingConfig(
        x_max=args.x_max,
        step=args.step,
        bracket=(args.bracket_lo, args.bracket_hi),
        tol_far=args.tol_far,
    )
    s_star, trajectory = shoot(model, config)
    h = trajectory[1, 0] - trajectory[0, 0]
    points = _eval_points(min(args.x_max_eval, args.x_max))
    rows = []
    for x in points:
        row = trajectory[int(round(x / h))]
        rows.append([_fmt(x), _fmt(row[1]), _fmt(row[2]), _fmt(row[3]), _fmt(s_star)])
    _write_csv(args.out, ["x", "f", "fp", "fpp", "s_star"], rows)
    print(f"wrote {args.out}")
    print(f"s_star = {_fmt(s_star)}")
    return 0


def _float_list(text: str) -> list:
    return [float(chunk) for chunk in text.split(",") if chunk.strip()]


def _add_solver_flags(parser, epsilon_default=0.3, delta_default=0.1) -> None:
    parser.add_argument("--n-basis", type=int, default=50, help="highest basis degree N")
    parser.add_argument("--map-l", type=float, default=15.0, help="map scale L")
    parser.add_argument("--alpha", type=float, default=1.0)
    parser.add_argument("--beta", type=float, default=1.0)
    parser.add_argument("--epsilon", type=float, default=epsilon_default)
    parser.add_argument("--delta", type=float, default=delta_default)
    parser.add_argument("--iters", type=int, default=15, help="iteration count (exact unless --tol)")
    parser.add_argument("--tol", type=float, default=None, help="coefficient-change stopping tolerance")
    parser.add_argument("--x-max-eval", type=float, default=5.0, help="largest output abscissa")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rjspectral",
        description="Rational Jacobi collocation solver for the Eyring-Powell boundary layer",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="one solve; emits a JSON run record")
    _add_solver_flags(solve)
    solve.add_argument("--out", default=None, help="output file (default: stdout)")
    solve.set_defaults(func=cmd_solve)

    tables = sub.add_parser("tables", help="profile tables for N in {10,15,25,50} plus an RK4 comparison")
    _add_solver_flags(tables)
    tables.add_argument("--out", default=".", help="output directory")
    tables.set_defaults(func=cmd_tables)

    sweep = sub.add_parser("sweep", help="one solve per parameter value; emits velocity/stress rows")
    _add_solver_flags(sweep, epsilon_default=None, delta_default=None)
    sweep.add_argument("--param", choices=("epsilon", "delta"), required=True)
    sweep.add_argument("--values", type=_float_list, required=True, help="comma-separated values")
    sweep.add_argument("--out", default="sweep.csv")
    sweep.set_defaults(func=cmd_sweep)

    ldiag = sub.add_parser("ldiag", help="coefficient-decay and residual diagnostics per map scale")
    _add_solver_flags(ldiag)
    ldiag.add_argument("--map-l-values", type=_float_list, required=True, help="comma-separated L values")
    ldiag.add_argument("--out", default="ldiag.csv")
    ldiag.set_defaults(func=cmd_ldiag)

    oracle = sub.add_parser("oracle", help="independent RK4 shooting reference")
    oracle.add_argument("--epsilon", type=float, default=0.3)
    oracle.add_argument("--delta", type=float, default=0.1)
    oracle.add_argument("--x-max", type=float, default=20.0, help="truncation length of the march")
    oracle.add_argument("--step", type=float, default=1e-3)
    oracle.add_argument("--bracket-lo", type=float, default=-2.0)
    oracle.add_argument("--bracket-hi", type=float, default=-0.1)
    oracle.add_argument("--tol-far", type=float, default=1e-8)
    oracle.add_argument("--x-max-eval", type=float, default=5.0)
    oracle.add_argument("--out", default="oracle.csv")
    oracle.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
