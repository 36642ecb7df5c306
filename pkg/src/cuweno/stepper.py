"""Third-order TVD Runge-Kutta stepping and time-step selection."""

from dataclasses import dataclass

import numpy as np

from .flux import BlowupError

DT_RULES = ("cfl_over_speed", "cfl_dx_pow_4over3")


@dataclass(frozen=True)
class TimeControls:
    t_final: float
    cfl: float = 0.4
    dt_rule: str = "cfl_over_speed"

    def __post_init__(self):
        if not 0 < self.cfl <= 1:
            raise ValueError(f"cfl must be in (0, 1], got {self.cfl}")
        if not self.t_final > 0:
            raise ValueError(f"t_final must be positive, got {self.t_final}")
        if self.dt_rule not in DT_RULES:
            raise ValueError(f"unknown dt_rule {self.dt_rule!r}; valid: {DT_RULES}")


def compute_dt(controls, dx, max_speed=None, t_now=0.0):
    """Time step under the active rule, clamped to land exactly on t_final."""
    if controls.dt_rule == "cfl_over_speed":
        if max_speed is None or not max_speed > 0:
            raise ValueError(f"cfl_over_speed needs a positive wave speed, got {max_speed}")
        dt = controls.cfl * dx / max_speed
    else:
        dt = controls.cfl * dx ** (4.0 / 3.0)
    remaining = controls.t_final - t_now
    return dt if dt < remaining else remaining


def _check_stage(u, tag):
    if not np.isfinite(u).all():
        bad = np.argwhere(~np.isfinite(u))
        raise BlowupError(f"non-finite state after RK3 {tag} at {tuple(bad[0])}",
                          tuple(bad[0]))


def rk3_step(u, dt, rhs, t=0.0):
    """One Shu-Osher TVD RK3 step; rhs(u, t_stage) returns the tendency.

    Stages are evaluated at t, t + dt and t + dt/2 so time-dependent
    boundary data stay consistent.
    """
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    u1 = u + dt * rhs(u, t)
    _check_stage(u1, "stage 1")
    u2 = 0.75 * u + 0.25 * (u1 + dt * rhs(u1, t + dt))
    _check_stage(u2, "stage 2")
    u_next = u / 3.0 + 2.0 / 3.0 * (u2 + dt * rhs(u2, t + 0.5 * dt))
    _check_stage(u_next, "stage 3")
    return u_next
