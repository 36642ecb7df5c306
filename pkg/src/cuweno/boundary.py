"""Ghost-cell boundary conditions and the embedded step geometry.

All fills operate in place on ghosted state arrays shaped (ncomp, n_tot) in
1D or (ncomp, ny_tot, nx_tot) in 2D.  Policies follow the benchmark set:
periodic, transmissive (zero gradient), reflective walls, fixed supersonic
inflow, and the two time-dependent oblique-shock boundaries of the double
Mach reflection problem.
"""

from dataclasses import dataclass

import numpy as np

POLICY_KINDS = (
    "periodic",
    "transmissive",
    "reflective_x",
    "reflective_y",
    "dirichlet_state",
    "dmr_bottom",
    "dmr_top",
)

SQRT3 = np.sqrt(3.0)


def dmr_shock_foot(t):
    """Abscissa where the Mach-10 oblique shock crosses the top boundary."""
    return 1.0 / 6.0 + (1.0 + 20.0 * t) / SQRT3


@dataclass(frozen=True)
class GhostPolicy:
    """One boundary side's fill rule.

    state holds the fixed conserved state for dirichlet_state and the
    post-shock state for the DMR policies; state2 holds the DMR pre-shock
    state (dmr_top only).
    """

    kind: str
    state: np.ndarray = None
    state2: np.ndarray = None
    ghost_width: int = 3

    def __post_init__(self):
        if self.kind not in POLICY_KINDS:
            raise ValueError(f"unknown ghost policy {self.kind!r}; valid: {POLICY_KINDS}")
        if self.kind in ("dirichlet_state", "dmr_bottom", "dmr_top") and self.state is None:
            raise ValueError(f"{self.kind} requires a state vector")
        if self.kind == "dmr_top" and self.state2 is None:
            raise ValueError("dmr_top requires both post- and pre-shock states")


class StepRegion:
    """Solid step occupying x > x_face, y < y_face, with reflected ghost layers.

    Solid cells within ng of a face mirror the adjacent fluid (normal
    momentum negated, x-face fill first so the corner block ends y-mirrored);
    deeper solid cells take a fixed filler state so stencils never read
    stale data.
    """

    def __init__(self, grid, filler, x_face=0.6, y_face=0.2):
        self.x_face = x_face
        self.y_face = y_face
        self.filler = np.asarray(filler, dtype=float)
        xc = grid.xcenters(with_ghosts=True)
        yc = grid.ycenters(with_ghosts=True)
        self.i0 = int(np.searchsorted(xc, x_face))  # first solid column
        self.j1 = int(np.searchsorted(yc, y_face))  # first fluid row above the face
        self.ng = grid.ng

    def solid_interior(self, grid):
        """Boolean mask of solid cells on the interior (ny, nx) shape."""
        mask = np.zeros((grid.ny, grid.nx), dtype=bool)
        j1 = self.j1 - grid.ng
        i0 = self.i0 - grid.ng
        mask[:j1, i0:] = True
        return mask

    def fill(self, u, momx=1, momy=2):
        ng, i0, j1 = self.ng, self.i0, self.j1
        u[:, :j1, i0:] = self.filler[:, None, None]
        for layer in range(1, ng + 1):
            u[:, :j1, i0 + layer - 1] = u[:, :j1, i0 - layer]
            u[momx, :j1, i0 + layer - 1] *= -1.0
        for layer in range(1, ng + 1):
            u[:, j1 - layer, i0:] = u[:, j1 + layer - 1, i0:]
            u[momy, j1 - layer, i0:] *= -1.0


@dataclass
class BoundarySet:
    """Per-side policies; bottom/top are None in 1D.  step embeds a StepRegion."""

    left: GhostPolicy
    right: GhostPolicy
    bottom: GhostPolicy = None
    top: GhostPolicy = None
    step: StepRegion = None

    def sides(self):
        out = {"left": self.left, "right": self.right}
        if self.bottom is not None:
            out["bottom"] = self.bottom
            out["top"] = self.top
        return out


def _mirror_slab(u, axis, lo, flip_row, ng=3):
    """Reflect ng interior layers into the ghost slab on one side."""
    sl_ghost = [slice(None)] * u.ndim
    sl_src = [slice(None)] * u.ndim
    if lo:
        sl_ghost[axis] = slice(0, ng)
        sl_src[axis] = slice(ng, 2 * ng)
    else:
        sl_ghost[axis] = slice(-ng, None)
        sl_src[axis] = slice(-2 * ng, -ng)
    mirrored = np.flip(u[tuple(sl_src)], axis=axis)
    u[tuple(sl_ghost)] = mirrored
    if flip_row is not None:
        sl_flip = list(sl_ghost)
        sl_flip[0] = flip_row
        u[tuple(sl_flip)] *= -1.0


def _fill_side(u, axis, lo, policy, system, xc, t):
    ng = policy.ghost_width
    nd = u.ndim
    ghost = [slice(None)] * nd
    src = [slice(None)] * nd
    if policy.kind == "periodic":
        if lo:
            ghost[axis] = slice(0, ng)
            src[axis] = slice(-2 * ng, -ng)
        else:
            ghost[axis] = slice(-ng, None)
            src[axis] = slice(ng, 2 * ng)
        u[tuple(ghost)] = u[tuple(src)]
    elif policy.kind == "transmissive":
        if lo:
            ghost[axis] = slice(0, ng)
            src[axis] = slice(ng, ng + 1)
        else:
            ghost[axis] = slice(-ng, None)
            src[axis] = slice(-ng - 1, -ng)
        u[tuple(ghost)] = u[tuple(src)]
    elif policy.kind in ("reflective_x", "reflective_y"):
        sweep_axis = 0 if policy.kind == "reflective_x" else 1
        flip = system.momentum_index(sweep_axis)
        _mirror_slab(u, axis, lo, flip, ng)
    elif policy.kind == "dirichlet_state":
        state = np.asarray(policy.state, dtype=float)
        if lo:
            ghost[axis] = slice(0, ng)
        else:
            ghost[axis] = slice(-ng, None)
        shape = [1] * nd
        shape[0] = len(state)
        u[tuple(ghost)] = state.reshape(shape)
    elif policy.kind == "dmr_bottom":
        # post-shock state left of the shock foot on the x-axis, wall elsewhere
        _mirror_slab(u, axis, lo, system.momentum_index(1), ng)
        post = xc < 1.0 / 6.0
        u[:, :ng, post] = np.asarray(policy.state)[:, None, None]
    elif policy.kind == "dmr_top":
        post = xc < dmr_shock_foot(t)
        u[:, -ng:, post] = np.asarray(policy.state)[:, None, None]
        u[:, -ng:, ~post] = np.asarray(policy.state2)[:, None, None]
    else:  # pragma: no cover - guarded by GhostPolicy validation
        raise ValueError(f"unknown ghost policy {policy.kind!r}")


def fill_ghosts(u, grid, bcs, system, t=0.0):
    """Fill every ghost layer of u in place; returns u.

    2D fill order: bottom, top, then left, right (corners take the x-side
    values), then the embedded step region if present.
    """
    if (bcs.left.kind == "periodic") != (bcs.right.kind == "periodic"):
        raise ValueError("periodic boundaries must be paired")
    if u.ndim == 2:
        _fill_side(u, 1, True, bcs.left, system, None, t)
        _fill_side(u, 1, False, bcs.right, system, None, t)
        return u
    if bcs.bottom is None or bcs.top is None:
        raise ValueError("2D fill requires bottom and top policies")
    if (bcs.bottom.kind == "periodic") != (bcs.top.kind == "periodic"):
        raise ValueError("periodic boundaries must be paired")
    xc = grid.xcenters(with_ghosts=True)
    _fill_side(u, 1, True, bcs.bottom, system, xc, t)
    _fill_side(u, 1, False, bcs.top, system, xc, t)
    _fill_side(u, 2, True, bcs.left, system, None, t)
    _fill_side(u, 2, False, bcs.right, system, None, t)
    if bcs.step is not None:
        bcs.step.fill(u, system.momentum_index(0), system.momentum_index(1))
    return u
