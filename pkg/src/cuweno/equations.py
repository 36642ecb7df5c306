"""Equation systems: 1D linear advection and 1D/2D compressible Euler.

States are numpy arrays with the conserved components on the leading axis:
(u,) for advection, (rho, rho*u, E) in 1D Euler and (rho, rho*u, rho*v, E)
in 2D Euler.  All operations broadcast over the trailing grid axes.
"""

import numpy as np

GAMMA = 1.4  # ideal-gas ratio of specific heats, used by every benchmark


class NonphysicalStateError(ValueError):
    """Density or pressure lost positivity; carries the offending cell index."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


def _first_bad_index(values, condition):
    bad = np.argwhere(condition)
    return tuple(bad[0]) if bad.size else None


class LinearAdvection:
    """u_t + u_x = 0 with unit speed."""

    ncomp = 1
    name = "advection"

    def flux(self, u):
        return u.copy()

    def max_speed(self, u):
        return 1.0

    def exact(self, x, t):
        return np.sin(np.pi * (x - t))

    def momentum_index(self, axis=0):
        return None

    def char_basis(self, u_left, u_right, axis=0):
        return None


class Euler1D:
    """1D Euler equations of gas dynamics with the ideal-gas EOS."""

    ncomp = 3
    name = "euler1d"

    def __init__(self, gamma=GAMMA):
        self.gamma = gamma

    def pressure(self, u):
        rho, mom, e_tot = u
        return (self.gamma - 1.0) * (e_tot - 0.5 * mom**2 / rho)

    def primitive(self, u):
        """(rho, velocity, pressure) from conserved variables."""
        rho, mom, _ = u
        return np.stack([rho, mom / rho, self.pressure(u)])

    def conserved(self, prim):
        """Conserved variables from (rho, velocity, pressure)."""
        rho, vel, p = prim
        return np.stack([rho, rho * vel, p / (self.gamma - 1.0) + 0.5 * rho * vel**2])

    def flux(self, u):
        rho, mom, e_tot = u
        vel = mom / rho
        p = self.pressure(u)
        return np.stack([mom, mom * vel + p, vel * (e_tot + p)])

    def sound_speed(self, u):
        return np.sqrt(self.gamma * self.pressure(u) / u[0])

    def validate(self, u, context=""):
        rho = u[0]
        if not np.all(rho > 0):
            idx = _first_bad_index(rho, ~(rho > 0))
            raise NonphysicalStateError(f"nonpositive density at cell {idx} {context}", idx)
        p = self.pressure(u)
        if not np.all(p > 0):
            idx = _first_bad_index(p, ~(p > 0))
            raise NonphysicalStateError(f"nonpositive pressure at cell {idx} {context}", idx)

    def max_speed(self, u):
        self.validate(u)
        return float(np.max(np.abs(u[1] / u[0]) + self.sound_speed(u)))

    def momentum_index(self, axis=0):
        return 1

    def char_basis(self, u_left, u_right, axis=0):
        from .flux import roe_eigenbasis_1d

        return roe_eigenbasis_1d(u_left, u_right, self.gamma)


class Euler2D:
    """2D Euler equations; fluxes per direction, dimension-by-dimension."""

    ncomp = 4
    name = "euler2d"

    def __init__(self, gamma=GAMMA):
        self.gamma = gamma

    def pressure(self, u):
        rho, momx, momy, e_tot = u
        return (self.gamma - 1.0) * (e_tot - 0.5 * (momx**2 + momy**2) / rho)

    def primitive(self, u):
        rho, momx, momy, _ = u
        return np.stack([rho, momx / rho, momy / rho, self.pressure(u)])

    def conserved(self, prim):
        rho, vx, vy, p = prim
        e_tot = p / (self.gamma - 1.0) + 0.5 * rho * (vx**2 + vy**2)
        return np.stack([rho, rho * vx, rho * vy, e_tot])

    def flux_x(self, u):
        rho, momx, momy, e_tot = u
        vx = momx / rho
        p = self.pressure(u)
        return np.stack([momx, momx * vx + p, momy * vx, vx * (e_tot + p)])

    def flux_y(self, u):
        rho, momx, momy, e_tot = u
        vy = momy / rho
        p = self.pressure(u)
        return np.stack([momy, momx * vy, momy * vy + p, vy * (e_tot + p)])

    def flux(self, u, axis=0):
        return self.flux_x(u) if axis == 0 else self.flux_y(u)

    def sound_speed(self, u):
        return np.sqrt(self.gamma * self.pressure(u) / u[0])

    def validate(self, u, context=""):
        rho = u[0]
        if not np.all(rho > 0):
            idx = _first_bad_index(rho, ~(rho > 0))
            raise NonphysicalStateError(f"nonpositive density at cell {idx} {context}", idx)
        p = self.pressure(u)
        if not np.all(p > 0):
            idx = _first_bad_index(p, ~(p > 0))
            raise NonphysicalStateError(f"nonpositive pressure at cell {idx} {context}", idx)

    def max_speed(self, u):
        self.validate(u)
        c = self.sound_speed(u)
        vx = np.abs(u[1] / u[0])
        vy = np.abs(u[2] / u[0])
        return float(np.max(np.maximum(vx, vy) + c))

    def momentum_index(self, axis=0):
        return 1 if axis == 0 else 2

    def char_basis(self, u_left, u_right, axis=0):
        from .flux import roe_eigenbasis_2d

        return roe_eigenbasis_2d(u_left, u_right, self.gamma, axis)


def advection_flux(u):
    return u.copy()


def advection_exact(x, t):
    """Exact advected sine profile, periodic with period 2 in x - t."""
    return np.sin(np.pi * (x - t))
