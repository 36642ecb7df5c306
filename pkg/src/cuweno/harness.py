"""Run driver, error norms, convergence studies, references and table output."""

import time
from dataclasses import dataclass

import numpy as np

from .boundary import fill_ghosts
from .equations import LinearAdvection
from .flux import rhs_1d, rhs_2d
from .grid import Field
from .riemann import exact_riemann
from .stepper import TimeControls, compute_dt, rk3_step

_T_EPS = 1e-12  # relative slack when deciding whether t_final was reached


@dataclass
class RunResult:
    problem: object
    scheme: object
    grid: object
    u: np.ndarray          # interior conserved variables at t_final
    t: float
    steps: int
    wall_time: float
    min_density: float = np.nan
    min_pressure: float = np.nan

    @property
    def density(self):
        return self.u[0]

    def primitive(self):
        return self.problem.system.primitive(self.u)


def run_problem(problem, scheme, n=None, cfl=None, t_final=None, dt_rule=None,
                characteristic=True, max_steps=10_000_000):
    """Advance a benchmark problem to its final time.

    scheme may be a SchemeConfig or a registry id string; per-problem
    parameter defaults (p for the ZA weights) apply to string ids.
    """
    if isinstance(scheme, str):
        scheme = problem.scheme(scheme)
    grid = problem.grid(n)
    system = problem.system
    bcs = problem.make_bcs(grid)
    solid = bcs.step.solid_interior(grid) if bcs.step is not None else None
    controls = TimeControls(
        t_final=t_final if t_final is not None else problem.t_final,
        cfl=cfl if cfl is not None else problem.cfl,
        dt_rule=dt_rule if dt_rule is not None else problem.dt_rule,
    )

    field = Field.allocate(grid, system.ncomp)
    field.interior = problem.ic(grid)
    scalar = isinstance(system, LinearAdvection)
    dx_min = grid.dx if problem.dim == 1 else min(grid.dx, grid.dy)

    def rhs(v, t_stage):
        fill_ghosts(v, grid, bcs, system, t_stage)
        out = np.zeros_like(v)
        if problem.dim == 1:
            out[:, grid.ng:-grid.ng] = rhs_1d(
                v, system, scheme, grid.dx, characteristic=characteristic, ng=grid.ng)
        else:
            out[:, grid.ng:-grid.ng, grid.ng:-grid.ng] = rhs_2d(
                v, system, scheme, grid.dx, grid.dy,
                characteristic=characteristic, ng=grid.ng, solid=solid)
        return out

    t = 0.0
    steps = 0
    min_rho = np.inf
    min_prs = np.inf
    start = time.perf_counter()
    while t < controls.t_final * (1.0 - _T_EPS):
        speed = system.max_speed(field.interior)
        dt = compute_dt(controls, dx_min, speed, t)
        field.u = rk3_step(field.u, dt, rhs, t)
        t += dt
        steps += 1
        if not scalar:
            system.validate(field.interior, f"(step {steps}, t={t:.6g})")
            min_rho = min(min_rho, float(field.interior[0].min()))
            min_prs = min(min_prs, float(system.pressure(field.interior).min()))
        if steps >= max_steps:
            raise RuntimeError(f"step budget exhausted at t={t}")
    wall = time.perf_counter() - start
    return RunResult(problem, scheme, grid, field.interior.copy(), t, steps, wall,
                     min_rho, min_prs)


# ---------------------------------------------------------------------------
# Error measurement


def error_norms(numeric, exact):
    """(L1, L2, Linf) of the pointwise error: mean, RMS and max magnitude."""
    err = np.abs(np.asarray(numeric, dtype=float) - np.asarray(exact, dtype=float))
    return float(err.mean()), float(np.sqrt((err**2).mean())), float(err.max())


def reference_solution(problem, grid, t=None, fine_factor=5, fine_scheme=None):
    """Reference profile on the grid's cell centers at time t.

    Analytic for advection, exact Riemann sampling for the shock tubes, and
    a restricted fine-grid WENO5-JS run otherwise.  Returns the scalar field
    used for error measurement (u for advection, density for Euler).
    """
    t = problem.t_final if t is None else t
    x = grid.centers()
    if problem.reference == "advection":
        return problem.system.exact(x, t)
    if problem.reference == "riemann":
        left, right = problem.riemann_data
        sol = exact_riemann(left, right, problem.system.gamma)
        return sol.sample_at(x, t)[0]
    if problem.reference == "fine":
        if fine_factor % 2 == 0:
            raise ValueError("fine_factor must be odd so cell centers align")
        scheme = fine_scheme or problem.scheme("weno5-js")
        fine = run_problem(problem, scheme, n=grid.n * fine_factor, t_final=t)
        return fine.u[0][fine_factor // 2::fine_factor]
    raise ValueError(f"problem {problem.name!r} has no reference solution")


def solution_error(result, reference=None):
    """Error norms of the run against its problem's reference profile."""
    problem = result.problem
    if reference is None:
        reference = reference_solution(problem, result.grid, result.t)
    numeric = result.u[0]
    return error_norms(numeric, reference)


@dataclass
class ErrorReport:
    problem: str
    scheme: str
    resolutions: list
    l1: list
    l2: list
    linf: list

    def orders(self, norm="l1"):
        errs = getattr(self, norm)
        out = []
        for (n0, e0), (n1, e1) in zip(
                zip(self.resolutions, errs), zip(self.resolutions[1:], errs[1:])):
            out.append(np.log(e0 / e1) / np.log(n1 / n0))
        return out


def convergence_study(problem, scheme, resolutions=None, cfl=None,
                      characteristic=True):
    """Errors and pairwise orders over a resolution ladder."""
    if isinstance(scheme, str):
        scheme = problem.scheme(scheme)
    resolutions = list(resolutions if resolutions is not None
                       else problem.ladder or (40, 80, 160))
    l1s, l2s, linfs = [], [], []
    for n in resolutions:
        result = run_problem(problem, scheme, n=n, cfl=cfl,
                             characteristic=characteristic)
        e1, e2, einf = solution_error(result)
        l1s.append(e1)
        l2s.append(e2)
        linfs.append(einf)
    return ErrorReport(problem.name, scheme.label, resolutions, l1s, l2s, linfs)


# ---------------------------------------------------------------------------
# Tables and snapshots


def format_convergence_table(reports, norm="l1"):
    """Aligned text table: rows are resolutions, (error, order) per scheme."""
    reports = list(reports)
    resolutions = reports[0].resolutions
    for r in reports:
        if r.resolutions != resolutions:
            raise ValueError("all reports must share one resolution ladder")
    header = f"{'N':>6}"
    for r in reports:
        header += f"  {r.scheme + ' error':>14} {'order':>8}"
    lines = [header]
    orders = [r.orders(norm) for r in reports]
    for i, n in enumerate(resolutions):
        row = f"{n:>6d}"
        for r, ords in zip(reports, orders):
            err = getattr(r, norm)[i]
            order = f"{ords[i - 1]:8.4f}" if i > 0 else f"{'--':>8}"
            row += f"  {err:>14.6e} {order}"
        lines.append(row)
    return "\n".join(lines)


def convergence_table_csv(reports, norm="l1"):
    reports = list(reports)
    resolutions = reports[0].resolutions
    cols = ["N"]
    for r in reports:
        cols += [f"{r.scheme}_{norm}", f"{r.scheme}_order"]
    lines = [",".join(cols)]
    orders = [r.orders(norm) for r in reports]
    for i, n in enumerate(resolutions):
        row = [str(n)]
        for r, ords in zip(reports, orders):
            row.append(f"{getattr(r, norm)[i]:.6e}")
            row.append(f"{ords[i - 1]:.4f}" if i > 0 else "")
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def format_shock_tube_table(errors):
    """Rows L1/L2/Linf, one column per scheme; errors maps label -> triple."""
    labels = list(errors)
    header = f"{'Error':>6}" + "".join(f"  {lab:>12}" for lab in labels)
    lines = [header]
    for i, norm in enumerate(("L1", "L2", "Linf")):
        row = f"{norm:>6}" + "".join(f"  {errors[lab][i]:>12.3e}" for lab in labels)
        lines.append(row)
    return "\n".join(lines)


def shock_tube_table_csv(errors):
    labels = list(errors)
    lines = ["error," + ",".join(labels)]
    for i, norm in enumerate(("L1", "L2", "Linf")):
        lines.append(norm + "," + ",".join(f"{errors[lab][i]:.6e}" for lab in labels))
    return "\n".join(lines) + "\n"


def snapshot_csv(result, path):
    """Write coordinates plus conserved and primitive variables as CSV."""
    problem = result.problem
    system = problem.system
    grid = result.grid
    if problem.dim == 1:
        x = grid.centers()
        if system.ncomp == 1:
            header = "x,u"
            data = np.column_stack([x, result.u[0]])
        else:
            prim = system.primitive(result.u)
            header = "x,density,momentum,energy,velocity,pressure"
            data = np.column_stack([x, result.u[0], result.u[1], result.u[2],
                                    prim[1], prim[2]])
    else:
        xg, yg = grid.mesh()
        prim = system.primitive(result.u)
        header = ("x,y,density,momentum_x,momentum_y,energy,"
                  "velocity_x,velocity_y,pressure")
        data = np.column_stack([xg.ravel(), yg.ravel()]
                               + [result.u[c].ravel() for c in range(4)]
                               + [prim[1].ravel(), prim[2].ravel(), prim[3].ravel()])
    np.savetxt(path, data, fmt="%.12e", delimiter=",", header=header, comments="")
    return path
