"""Benchmark problem registry: advection accuracy, shock tubes, shock-entropy
waves, interacting blast waves, a 2D Riemann problem, the forward-facing step
wind tunnel and double Mach reflection."""

from dataclasses import dataclass

import numpy as np

from .boundary import BoundarySet, GhostPolicy, StepRegion
from .equations import Euler1D, Euler2D, LinearAdvection
from .grid import Grid1D, Grid2D
from .kernels import make_scheme

_ADVECTION = LinearAdvection()
_EULER1D = Euler1D()
_EULER2D = Euler2D()


@dataclass(frozen=True)
class Problem:
    """One benchmark: equation system, domain, initial data, boundaries, timing."""

    name: str
    title: str
    system: object
    dim: int
    xlim: tuple
    t_final: float
    ic: callable                 # ic(grid) -> interior conserved array
    make_bcs: callable           # make_bcs(grid) -> BoundarySet
    ylim: tuple = None
    n_default: object = 200      # int in 1D, (nx, ny) in 2D
    dt_rule: str = "cfl_over_speed"
    cfl: float = 0.4
    p_za: float = None           # per-problem p for the ZA weights
    reference: str = "none"      # none | advection | riemann | fine
    ladder: tuple = None         # resolution sequence for convergence studies
    riemann_data: tuple = None   # (left, right) primitive triples, split at x=0

    def grid(self, n=None):
        if self.dim == 1:
            n = int(n if n is not None else self.n_default)
            if n < 10:
                raise ValueError(f"resolution must be >= 10, got {n}")
            return Grid1D(self.xlim[0], self.xlim[1], n)
        nx, ny = (n if n is not None else self.n_default)
        if min(nx, ny) < 10:
            raise ValueError(f"resolution must be >= 10, got {(nx, ny)}")
        return Grid2D(self.xlim[0], self.xlim[1], self.ylim[0], self.ylim[1],
                      int(nx), int(ny))

    def scheme(self, scheme_id, epsilon=None, p=None, q=None):
        """SchemeConfig with this problem's p default applied to ZA variants."""
        if p is None and self.p_za is not None:
            p = self.p_za
        return make_scheme(scheme_id, epsilon=epsilon, p=p, q=q)


def _both(kind):
    return lambda grid: BoundarySet(GhostPolicy(kind), GhostPolicy(kind))


def _piecewise_1d(grid, edges, prims, system):
    """Primitive states per x-interval (edges strictly increasing)."""
    x = grid.centers()
    prim = np.empty((system.ncomp, x.size))
    idx = np.searchsorted(edges, x)
    for k, p in enumerate(prims):
        sel = idx == k
        for c in range(system.ncomp):
            prim[c, sel] = p[c]
    return system.conserved(prim)


def _ic_advect(grid):
    return np.sin(np.pi * grid.centers())[None, :]


def _ic_sod(grid):
    return _piecewise_1d(grid, [0.0], [(1.0, 0.0, 1.0), (0.125, 0.0, 0.1)], _EULER1D)


def _ic_lax(grid):
    return _piecewise_1d(grid, [0.0],
                         [(0.445, 0.698, 3.528), (0.5, 0.0, 0.571)], _EULER1D)


def _ic_shock_entropy(k):
    def ic(grid):
        x = grid.centers()
        left = x < -4.0
        rho = np.where(left, 3.857143, 1.0 + 0.2 * np.sin(k * x))
        vel = np.where(left, 2.629369, 0.0)
        prs = np.where(left, 10.333333, 1.0)
        return _EULER1D.conserved(np.stack([rho, vel, prs]))

    return ic


def _ic_blast(grid):
    return _piecewise_1d(grid, [0.1, 0.9],
                         [(1.0, 0.0, 1000.0), (1.0, 0.0, 0.01), (1.0, 0.0, 100.0)],
                         _EULER1D)


_RIEMANN2D_QUADRANTS = {
    # (x > 0.5, y > 0.5): primitive (rho, u, v, P)
    (True, True): (1.0, 0.1, 0.0, 1.0),
    (False, True): (0.5313, 0.8276, 0.0, 0.4),
    (False, False): (0.8, 0.1, 0.0, 0.4),
    (True, False): (0.5313, 0.1, 0.7276, 0.4),
}


def _ic_riemann2d(grid):
    xg, yg = grid.mesh()
    prim = np.empty((4,) + xg.shape)
    for (right, upper), p in _RIEMANN2D_QUADRANTS.items():
        sel = ((xg > 0.5) == right) & ((yg > 0.5) == upper)
        for c in range(4):
            prim[c][sel] = p[c]
    return _EULER2D.conserved(prim)


FFS_INFLOW = _EULER2D.conserved(np.array([1.4, 3.0, 0.0, 1.0]))


def _ic_ffs(grid):
    xg, _ = grid.mesh()
    return np.broadcast_to(FFS_INFLOW[:, None, None], (4,) + xg.shape).copy()


def _bcs_ffs(grid):
    return BoundarySet(
        left=GhostPolicy("dirichlet_state", FFS_INFLOW),
        right=GhostPolicy("transmissive"),
        bottom=GhostPolicy("reflective_y"),
        top=GhostPolicy("reflective_y"),
        step=StepRegion(grid, FFS_INFLOW),
    )


_THETA = np.pi / 6.0
DMR_POST = _EULER2D.conserved(
    np.array([8.0, 8.25 * np.cos(_THETA), -8.25 * np.sin(_THETA), 116.5]))
DMR_PRE = _EULER2D.conserved(np.array([1.4, 0.0, 0.0, 1.0]))


def _ic_dmr(grid):
    xg, yg = grid.mesh()
    behind = xg < 1.0 / 6.0 + yg / np.sqrt(3.0)
    u = np.where(behind[None, :, :], DMR_POST[:, None, None], DMR_PRE[:, None, None])
    return u


def _bcs_dmr(grid):
    return BoundarySet(
        left=GhostPolicy("dirichlet_state", DMR_POST),
        right=GhostPolicy("transmissive"),
        bottom=GhostPolicy("dmr_bottom", DMR_POST),
        top=GhostPolicy("dmr_top", DMR_POST, DMR_PRE),
    )


def _bcs_riemann2d(grid):
    return BoundarySet(
        left=GhostPolicy("transmissive"),
        right=GhostPolicy("transmissive"),
        bottom=GhostPolicy("transmissive"),
        top=GhostPolicy("transmissive"),
    )


REGISTRY = {}


def _register(problem):
    REGISTRY[problem.name] = problem
    return problem


_register(Problem(
    name="advect-sine",
    title="1D linear advection of sin(pi x)",
    system=_ADVECTION, dim=1, xlim=(-1.0, 1.0), t_final=2.0,
    ic=_ic_advect, make_bcs=_both("periodic"),
    n_default=160, dt_rule="cfl_dx_pow_4over3",
    reference="advection", ladder=(10, 20, 40, 80, 160),
))

_register(Problem(
    name="sod",
    title="Sod shock tube",
    system=_EULER1D, dim=1, xlim=(-5.0, 5.0), t_final=2.0,
    ic=_ic_sod, make_bcs=_both("transmissive"),
    n_default=200, p_za=100.0, reference="riemann",
    riemann_data=((1.0, 0.0, 1.0), (0.125, 0.0, 0.1)),
))

_register(Problem(
    name="lax",
    title="Lax shock tube",
    system=_EULER1D, dim=1, xlim=(-5.0, 5.0), t_final=1.3,
    ic=_ic_lax, make_bcs=_both("transmissive"),
    n_default=200, p_za=100.0, reference="riemann",
    riemann_data=((0.445, 0.698, 3.528), (0.5, 0.0, 0.571)),
))

_register(Problem(
    name="shock-entropy-k5",
    title="Shock / entropy-wave interaction, wavenumber 5",
    system=_EULER1D, dim=1, xlim=(-5.0, 5.0), t_final=2.0,
    ic=_ic_shock_entropy(5.0), make_bcs=_both("transmissive"),
    n_default=400, p_za=100.0, reference="fine",
))

_register(Problem(
    name="shock-entropy-k10",
    title="Shock / entropy-wave interaction, wavenumber 10",
    system=_EULER1D, dim=1, xlim=(-5.0, 5.0), t_final=2.0,
    ic=_ic_shock_entropy(10.0), make_bcs=_both("transmissive"),
    n_default=800, p_za=100.0, reference="fine",
))

_register(Problem(
    name="blast",
    title="Interacting blast waves",
    system=_EULER1D, dim=1, xlim=(0.0, 1.0), t_final=0.038,
    ic=_ic_blast, make_bcs=_both("reflective_x"),
    n_default=800, p_za=100.0, reference="fine",
))

_register(Problem(
    name="riemann2d",
    title="2D Riemann problem (four quadrants)",
    system=_EULER2D, dim=2, xlim=(0.0, 1.0), ylim=(0.0, 1.0), t_final=0.3,
    ic=_ic_riemann2d, make_bcs=_bcs_riemann2d,
    n_default=(400, 400), p_za=100.0,
))

_register(Problem(
    name="ffs",
    title="Mach 3 wind tunnel with a forward-facing step",
    system=_EULER2D, dim=2, xlim=(0.0, 3.0), ylim=(0.0, 1.0), t_final=4.0,
    ic=_ic_ffs, make_bcs=_bcs_ffs,
    n_default=(480, 160), p_za=20.0,
))

_register(Problem(
    name="dmr",
    title="Double Mach reflection",
    system=_EULER2D, dim=2, xlim=(0.0, 4.0), ylim=(0.0, 1.0), t_final=0.2,
    ic=_ic_dmr, make_bcs=_bcs_dmr,
    n_default=(800, 200), p_za=10.0,
))
