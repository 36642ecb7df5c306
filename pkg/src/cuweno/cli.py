"""Command-line interface: run benchmarks, convergence studies, kernel inspection.

Exit codes: 0 on success, 1 on a runtime solver failure, 2 on usage errors.
Output files land in --out / $CUWENO_OUTDIR / the current directory.
"""

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import harness, kernels
from .equations import NonphysicalStateError
from .flux import BlowupError
from .kernels import SCHEME_IDS, make_scheme
from .problems import REGISTRY

OUTDIR_ENV = "CUWENO_OUTDIR"


def _outdir(args):
    if getattr(args, "out", None):
        path = Path(args.out)
    else:
        path = Path(os.environ.get(OUTDIR_ENV, "."))
    path.mkdir(parents=True, exist_ok=True)
    return path


def _add_scheme_args(parser):
    parser.add_argument("--scheme", required=True,
                        help=f"one of {', '.join(SCHEME_IDS)}")
    parser.add_argument("--epsilon", type=float, default=None,
                        help="weight regularization (default per scheme)")
    parser.add_argument("--p", type=float, default=None,
                        help="global-indicator scaling for weno4-za")
    parser.add_argument("--q", type=float, default=None,
                        help="amplification exponent for weno4-za (default 2)")


def _resolve_problem(parser, name):
    if name not in REGISTRY:
        parser.error(f"unknown problem {name!r}; valid: {', '.join(sorted(REGISTRY))}")
    return REGISTRY[name]


def _resolve_scheme(parser, problem, args):
    try:
        if problem is not None:
            return problem.scheme(args.scheme, epsilon=args.epsilon, p=args.p, q=args.q)
        return make_scheme(args.scheme, epsilon=args.epsilon, p=args.p, q=args.q)
    except ValueError as exc:
        parser.error(str(exc))


def _cmd_list(args):
    print("problems:")
    for name in sorted(REGISTRY):
        prob = REGISTRY[name]
        size = prob.n_default if prob.dim == 1 else "x".join(map(str, prob.n_default))
        print(f"  {name:<18} {prob.title} (default N={size}, T={prob.t_final})")
    print("schemes:")
    for scheme_id in SCHEME_IDS:
        print(f"  {scheme_id}")
    return 0


def _cmd_run(parser, args):
    problem = _resolve_problem(parser, args.problem)
    scheme = _resolve_scheme(parser, problem, args)
    n = None
    if problem.dim == 1:
        if args.nx or args.ny:
            parser.error("--nx/--ny apply to 2D problems; use --n")
        n = args.n
    else:
        if args.n is not None:
            parser.error(f"{problem.name} is 2D; use --nx and --ny")
        if (args.nx is None) != (args.ny is None):
            parser.error("give both --nx and --ny or neither")
        if args.nx is not None:
            n = (args.nx, args.ny)
    result = harness.run_problem(
        problem, scheme, n=n, cfl=args.cfl, t_final=args.t_final,
        dt_rule=args.dt_rule, characteristic=not args.componentwise)
    outdir = _outdir(args)
    stem = f"{problem.name}_{scheme.label.lower()}"
    snapshot = harness.snapshot_csv(result, outdir / f"{stem}_snapshot.csv")
    print(f"{problem.name}: {scheme.label} reached t={result.t:g} "
          f"in {result.steps} steps ({result.wall_time:.2f} s)")
    if not np.isnan(result.min_density):
        print(f"  min density {result.min_density:.6e}, "
              f"min pressure {result.min_pressure:.6e}")
    print(f"  snapshot: {snapshot}")
    if args.reference != "none":
        ref = harness.reference_solution(problem, result.grid, result.t)
        l1, l2, linf = harness.error_norms(result.u[0], ref)
        print(f"  errors vs reference: L1={l1:.6e} L2={l2:.6e} Linf={linf:.6e}")
    return 0


def _cmd_study(parser, args):
    problem = _resolve_problem(parser, args.problem)
    scheme = _resolve_scheme(parser, problem, args)
    if problem.reference == "none":
        parser.error(f"{problem.name} has no reference solution for error studies")
    resolutions = None
    if args.resolutions:
        try:
            resolutions = [int(tok) for tok in args.resolutions.split(",")]
        except ValueError:
            parser.error(f"bad --resolutions {args.resolutions!r}")
    report = harness.convergence_study(problem, scheme, resolutions, cfl=args.cfl)
    print(harness.format_convergence_table([report], norm=args.norm))
    outdir = _outdir(args)
    path = outdir / f"study_{problem.name}_{scheme.label.lower()}_{args.norm}.csv"
    path.write_text(harness.convergence_table_csv([report], norm=args.norm))
    print(f"csv: {path}")
    return 0


def _cmd_inspect(parser, args):
    scheme = _resolve_scheme(parser, None, args)
    try:
        window = np.array([float(tok) for tok in args.window.split(",")])
    except ValueError:
        parser.error(f"bad --window {args.window!r}")
    if window.size != scheme.window_size:
        parser.error(f"{scheme.variant} needs {scheme.window_size} samples, "
                     f"got {window.size}")
    if not np.isfinite(window).all():
        parser.error("window samples must be finite")
    print(f"scheme: {scheme.label} (epsilon={scheme.epsilon:g}, "
          f"p={scheme.p:g}, q={scheme.q:g})")
    print("window: " + " ".join(f"{v:g}" for v in window))
    if scheme.window_size == 4:
        smooth = kernels.smoothness_set(window, scheme.p)
        print(f"beta0={smooth.beta0:.12g} beta1={smooth.beta1:.12g} "
              f"beta_d={smooth.beta_d:.12g}")
        print(f"beta2={smooth.beta2:.12g} beta4={smooth.beta4:.12g} "
              f"tau4={smooth.tau4:.12g}")
    elif scheme.window_size == 3:
        beta0 = (window[0] - window[1]) ** 2
        beta1 = (window[1] - window[2]) ** 2
        print(f"beta0={beta0:.12g} beta1={beta1:.12g} "
              f"tau3={kernels.tau3(beta0, beta1):.12g}")
    else:
        beta = kernels.beta_jiang_shu(window)
        print(f"beta0={beta[0]:.12g} beta1={beta[1]:.12g} beta2={beta[2]:.12g}")
    omega = kernels.nonlinear_weights(window, scheme)
    print("omega: " + " ".join(f"{w:.12g}" for w in omega))
    print(f"fhat: {kernels.reconstruct_interface(window, scheme):.12g}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cuweno",
        description="Central-upwind WENO benchmark suite for hyperbolic conservation laws",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_run = sub.add_parser("run", help="run one benchmark and write a snapshot")
    p_run.add_argument("--problem", required=True)
    _add_scheme_args(p_run)
    p_run.add_argument("--n", type=int, default=None, help="1D resolution")
    p_run.add_argument("--nx", type=int, default=None)
    p_run.add_argument("--ny", type=int, default=None)
    p_run.add_argument("--cfl", type=float, default=None)
    p_run.add_argument("--t-final", type=float, default=None)
    p_run.add_argument("--dt-rule", choices=("cfl_over_speed", "cfl_dx_pow_4over3"),
                       default=None)
    p_run.add_argument("--componentwise", action="store_true",
                       help="skip characteristic projection")
    p_run.add_argument("--reference", choices=("none", "auto"), default="none",
                       help="also report errors against the problem reference")
    p_run.add_argument("--out", default=None, help="output directory")

    p_study = sub.add_parser("study", help="convergence study over a resolution ladder")
    p_study.add_argument("--problem", required=True)
    _add_scheme_args(p_study)
    p_study.add_argument("--resolutions", default=None,
                         help="comma-separated ladder, e.g. 10,20,40,80,160")
    p_study.add_argument("--cfl", type=float, default=None)
    p_study.add_argument("--norm", choices=("l1", "l2", "linf"), default="l1")
    p_study.add_argument("--out", default=None)

    p_inspect = sub.add_parser("inspect",
                               help="print indicators and weights for one window")
    _add_scheme_args(p_inspect)
    p_inspect.add_argument("--window", required=True,
                           help="comma-separated flux samples, e.g. 1,2,4,8")

    sub.add_parser("list", help="list problems and schemes")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.subcommand == "list":
            return _cmd_list(args)
        if args.subcommand == "run":
            return _cmd_run(parser, args)
        if args.subcommand == "study":
            return _cmd_study(parser, args)
        return _cmd_inspect(parser, args)
    except (NonphysicalStateError, BlowupError, RuntimeError) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
