"""Exact solver for the 1D Euler Riemann problem (ideal gas).

Star-region pressure is found by Newton iteration on the pressure function,
started from the two-rarefaction approximation; the solution is then sampled
self-similarly in x/t following the classical wave-pattern case analysis.
"""

from dataclasses import dataclass

import numpy as np

from .equations import GAMMA


class VacuumError(RuntimeError):
    """The data generate vacuum; the star state does not exist."""


class NonpositiveInput(ValueError):
    """Riemann data with nonpositive density or pressure."""


def _pressure_function(p, rho_k, p_k, c_k, gamma):
    """f_K(p) and its derivative for one side of the Riemann problem."""
    if p > p_k:  # shock branch
        a_k = 2.0 / ((gamma + 1.0) * rho_k)
        b_k = (gamma - 1.0) / (gamma + 1.0) * p_k
        root = np.sqrt(a_k / (p + b_k))
        f = (p - p_k) * root
        df = root * (1.0 - 0.5 * (p - p_k) / (p + b_k))
    else:  # rarefaction branch
        ratio = p / p_k
        f = 2.0 * c_k / (gamma - 1.0) * (ratio ** ((gamma - 1.0) / (2.0 * gamma)) - 1.0)
        df = ratio ** (-(gamma + 1.0) / (2.0 * gamma)) / (rho_k * c_k)
    return f, df


def _two_rarefaction_guess(left, right, c_l, c_r, gamma):
    rho_l, u_l, p_l = left
    rho_r, u_r, p_r = right
    z = (gamma - 1.0) / (2.0 * gamma)
    num = c_l + c_r - 0.5 * (gamma - 1.0) * (u_r - u_l)
    den = c_l / p_l**z + c_r / p_r**z
    return max((num / den) ** (1.0 / z), 1e-14)


@dataclass(frozen=True)
class RiemannSolution:
    """Star state plus a self-similar sampling function over xi = x/t."""

    left: tuple
    right: tuple
    gamma: float
    p_star: float
    u_star: float
    residual: float
    iterations: int

    @property
    def wave_pattern(self):
        kinds = []
        kinds.append("shock" if self.p_star > self.left[2] else "rarefaction")
        kinds.append("contact")
        kinds.append("shock" if self.p_star > self.right[2] else "rarefaction")
        return tuple(kinds)

    def sample(self, xi):
        """Primitive (rho, u, P) at similarity coordinate(s) xi = x/t."""
        xi = np.asarray(xi, dtype=float)
        rho = np.empty_like(xi)
        vel = np.empty_like(xi)
        prs = np.empty_like(xi)

        g = self.gamma
        gm1, gp1 = g - 1.0, g + 1.0
        p_star, u_star = self.p_star, self.u_star

        for side in ("left", "right"):
            if side == "left":
                rho_k, u_k, p_k = self.left
                sign = 1.0
                region = xi <= u_star
            else:
                rho_k, u_k, p_k = self.right
                sign = -1.0
                region = xi > u_star
            if not np.any(region):
                continue
            c_k = np.sqrt(g * p_k / rho_k)
            s = xi[region]
            r_out = np.empty_like(s)
            v_out = np.empty_like(s)
            p_out = np.empty_like(s)

            if p_star > p_k:  # shock on this side
                shock_speed = u_k - sign * c_k * np.sqrt(
                    (gp1 * p_star / p_k + gm1) / (2.0 * g)
                )
                rho_star = rho_k * (p_star / p_k + gm1 / gp1) / (
                    gm1 / gp1 * p_star / p_k + 1.0
                )
                ahead = (s < shock_speed) if side == "left" else (s > shock_speed)
                r_out = np.where(ahead, rho_k, rho_star)
                v_out = np.where(ahead, u_k, u_star)
                p_out = np.where(ahead, p_k, p_star)
            else:  # rarefaction fan
                c_star = c_k * (p_star / p_k) ** (gm1 / (2.0 * g))
                head = u_k - sign * c_k
                tail = u_star - sign * c_star
                rho_star = rho_k * (p_star / p_k) ** (1.0 / g)
                if side == "left":
                    ahead = s < head
                    inside_star = s > tail
                else:
                    ahead = s > head
                    inside_star = s < tail
                fan = ~ahead & ~inside_star
                c_fan = 2.0 / gp1 * (c_k + sign * 0.5 * gm1 * (u_k - s))
                v_fan = 2.0 / gp1 * (sign * c_k + 0.5 * gm1 * u_k + s)
                r_fan = rho_k * (c_fan / c_k) ** (2.0 / gm1)
                p_fan = p_k * (c_fan / c_k) ** (2.0 * g / gm1)
                r_out = np.select([ahead, inside_star, fan], [rho_k, rho_star, r_fan])
                v_out = np.select([ahead, inside_star, fan], [u_k, u_star, v_fan])
                p_out = np.select([ahead, inside_star, fan], [p_k, p_star, p_fan])

            rho[region] = r_out
            vel[region] = v_out
            prs[region] = p_out

        return np.stack([rho, vel, prs])

    def sample_at(self, x, t, x0=0.0):
        if t <= 0:
            raise ValueError("sampling requires t > 0")
        return self.sample((np.asarray(x, dtype=float) - x0) / t)


def exact_riemann(left, right, gamma=GAMMA, tol=1e-12, max_iter=100):
    """Solve the Riemann problem for primitive triples (rho, u, P).

    Newton iteration on the star pressure runs until the relative pressure
    update drops below tol.  Raises VacuumError if the data generate vacuum.
    """
    rho_l, u_l, p_l = left
    rho_r, u_r, p_r = right
    if min(rho_l, rho_r, p_l, p_r) <= 0:
        raise NonpositiveInput(f"need positive densities and pressures, got {left}, {right}")
    c_l = np.sqrt(gamma * p_l / rho_l)
    c_r = np.sqrt(gamma * p_r / rho_r)

    if 2.0 * (c_l + c_r) / (gamma - 1.0) <= u_r - u_l:
        raise VacuumError("initial states generate vacuum")

    du = u_r - u_l
    p = _two_rarefaction_guess(left, right, c_l, c_r, gamma)
    residual = np.inf
    for iteration in range(1, max_iter + 1):
        f_l, df_l = _pressure_function(p, rho_l, p_l, c_l, gamma)
        f_r, df_r = _pressure_function(p, rho_r, p_r, c_r, gamma)
        residual = f_l + f_r + du
        dp = residual / (df_l + df_r)
        p_new = p - dp
        if p_new <= 0:
            p_new = 0.5 * p
        converged = abs(p_new - p) / p_new < tol
        p = p_new
        if converged:
            break

    f_l, _ = _pressure_function(p, rho_l, p_l, c_l, gamma)
    f_r, _ = _pressure_function(p, rho_r, p_r, c_r, gamma)
    residual = f_l + f_r + du
    u_star = 0.5 * (u_l + u_r) + 0.5 * (f_r - f_l)
    return RiemannSolution(tuple(left), tuple(right), gamma, p, u_star,
                           abs(residual), iteration)
