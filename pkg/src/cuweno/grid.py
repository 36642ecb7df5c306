"""Uniform structured grids with ghost layers, and the ghosted field holder."""

from dataclasses import dataclass, field

import numpy as np

NG = 3  # ghost width; covers the widest (5-point) reconstruction window


@dataclass(frozen=True)
class Grid1D:
    xmin: float
    xmax: float
    n: int
    ng: int = NG

    @property
    def dx(self):
        return (self.xmax - self.xmin) / self.n

    def centers(self, with_ghosts=False):
        lo = -self.ng if with_ghosts else 0
        hi = self.n + self.ng if with_ghosts else self.n
        return self.xmin + (np.arange(lo, hi) + 0.5) * self.dx

    @property
    def shape_tot(self):
        return (self.n + 2 * self.ng,)


@dataclass(frozen=True)
class Grid2D:
    xmin: float
    xmax: float
    ymin: float
    ymax: float
    nx: int
    ny: int
    ng: int = NG

    @property
    def dx(self):
        return (self.xmax - self.xmin) / self.nx

    @property
    def dy(self):
        return (self.ymax - self.ymin) / self.ny

    def xcenters(self, with_ghosts=False):
        lo = -self.ng if with_ghosts else 0
        hi = self.nx + self.ng if with_ghosts else self.nx
        return self.xmin + (np.arange(lo, hi) + 0.5) * self.dx

    def ycenters(self, with_ghosts=False):
        lo = -self.ng if with_ghosts else 0
        hi = self.ny + self.ng if with_ghosts else self.ny
        return self.ymin + (np.arange(lo, hi) + 0.5) * self.dy

    def mesh(self, with_ghosts=False):
        """(X, Y) arrays indexed [y, x]."""
        return np.meshgrid(self.xcenters(with_ghosts), self.ycenters(with_ghosts))

    @property
    def shape_tot(self):
        return (self.ny + 2 * self.ng, self.nx + 2 * self.ng)


@dataclass
class Field:
    """Conserved variables over a grid, component axis first, ghosts included."""

    grid: object
    u: np.ndarray

    @classmethod
    def allocate(cls, grid, ncomp):
        return cls(grid, np.zeros((ncomp,) + grid.shape_tot))

    @property
    def interior(self):
        ng = self.grid.ng
        if self.u.ndim == 2:
            return self.u[:, ng:-ng]
        return self.u[:, ng:-ng, ng:-ng]

    @interior.setter
    def interior(self, values):
        ng = self.grid.ng
        if self.u.ndim == 2:
            self.u[:, ng:-ng] = values
        else:
            self.u[:, ng:-ng, ng:-ng] = values

    def copy(self):
        return Field(self.grid, self.u.copy())
