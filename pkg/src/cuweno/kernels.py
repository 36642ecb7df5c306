"""Reconstruction kernels for central-upwind WENO schemes.

All functions are pure and vectorized: window arguments are array-likes of
shape (k, ...) holding the k flux samples of one (or a batch of) interface
window(s), and every indicator/weight function broadcasts over the trailing
dimensions.  Sample order for the 4-point window is (f_{i-1}, f_i, f_{i+1},
f_{i+2}) relative to the interface i+1/2.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

# Linear (optimal) weights per window size.
D3 = (1.0 / 3.0, 2.0 / 3.0)
D4 = (1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0)
D5 = (1.0 / 10.0, 6.0 / 10.0, 3.0 / 10.0)

VARIANTS = {
    "weno3-js": 3,
    "weno3-z": 3,
    "weno4-js": 4,
    "weno4-za": 4,
    "weno5-js": 5,
}

# Z-type weights tolerate a tiny epsilon; JS-type needs a larger one to keep
# the nonlinear weights bounded near critical points.
DEFAULT_EPSILON = {
    "weno3-js": 1e-6,
    "weno3-z": 1e-40,
    "weno4-js": 1e-6,
    "weno4-za": 1e-40,
    "weno5-js": 1e-6,
}

# Cap on the Z-type amplification factor so exotic q values cannot push the
# unnormalized weights to inf (which would make the normalization 0/0).
_AMP_CAP = 1e300


class StencilWindow(NamedTuple):
    """The four flux samples feeding one 4-point interface reconstruction."""

    f_m1: float
    f_0: float
    f_p1: float
    f_p2: float


class SmoothnessSet(NamedTuple):
    """All smoothness indicators of a 4-point window (plus tau4 for given p)."""

    beta0: float
    beta1: float
    beta_d: float
    beta2: float
    beta4: float
    tau4: float


@dataclass(frozen=True)
class SchemeConfig:
    """Scheme variant plus the free parameters of its nonlinear weights.

    epsilon defaults per variant (1e-40 for Z-type, 1e-6 for JS-type).
    p and q only matter for weno4-za.  force_linear replaces the nonlinear
    weights with the linear ones, turning weno4-* into the plain 4-point
    finite difference flux (FD4).
    """

    variant: str
    epsilon: float = None
    p: float = 100.0
    q: float = 2.0
    force_linear: bool = False

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(
                f"unknown variant {self.variant!r}; valid: {sorted(VARIANTS)}"
            )
        if self.epsilon is None:
            object.__setattr__(self, "epsilon", DEFAULT_EPSILON[self.variant])
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if not self.p > 0:
            raise ValueError(f"p must be positive, got {self.p}")
        if not self.q >= 1:
            raise ValueError(f"q must be >= 1, got {self.q}")

    @property
    def window_size(self):
        return VARIANTS[self.variant]

    @property
    def linear_weights(self):
        return {3: D3, 4: D4, 5: D5}[self.window_size]

    @property
    def label(self):
        if self.force_linear:
            return {3: "FD3", 4: "FD4", 5: "FD5"}[self.window_size]
        return self.variant.upper()


SCHEME_IDS = ("weno3-js", "weno3-z", "weno4-js", "weno4-za", "weno5-js", "fd4")


def make_scheme(scheme_id, epsilon=None, p=None, q=None):
    """Build a SchemeConfig from a registry id ('fd4' is weno4 with linear weights)."""
    scheme_id = scheme_id.lower()
    force_linear = False
    if scheme_id == "fd4":
        scheme_id, force_linear = "weno4-js", True
    if scheme_id not in VARIANTS:
        raise ValueError(f"unknown scheme {scheme_id!r}; valid: {list(SCHEME_IDS)}")
    kwargs = {"variant": scheme_id, "force_linear": force_linear}
    if epsilon is not None:
        kwargs["epsilon"] = epsilon
    if p is not None:
        kwargs["p"] = p
    if q is not None:
        kwargs["q"] = q
    return SchemeConfig(**kwargs)


# ---------------------------------------------------------------------------
# Candidate (substencil) fluxes


def candidate_fluxes3(window):
    """Second-order candidate fluxes of the two upwind 2-point substencils."""
    f_m1, f_0, f_p1 = window
    fhat0 = -0.5 * f_m1 + 1.5 * f_0
    fhat1 = 0.5 * (f_0 + f_p1)
    return fhat0, fhat1


def candidate_fluxes4(window):
    """Candidate fluxes of the substencils S0, S1 and the downwind S2."""
    f_m1, f_0, f_p1, f_p2 = window
    fhat0 = -0.5 * f_m1 + 1.5 * f_0
    fhat1 = 0.5 * (f_0 + f_p1)
    fhat2 = 1.5 * f_p1 - 0.5 * f_p2
    return fhat0, fhat1, fhat2


def candidate_fluxes5(window):
    """Third-order candidate fluxes of the three 3-point substencils."""
    f_m2, f_m1, f_0, f_p1, f_p2 = window
    fhat0 = (2.0 * f_m2 - 7.0 * f_m1 + 11.0 * f_0) / 6.0
    fhat1 = (-f_m1 + 5.0 * f_0 + 2.0 * f_p1) / 6.0
    fhat2 = (2.0 * f_0 + 5.0 * f_p1 - f_p2) / 6.0
    return fhat0, fhat1, fhat2


def fd3_flux(window):
    """Direct third-order 3-point interface flux."""
    f_m1, f_0, f_p1 = window
    return -f_m1 / 6.0 + 5.0 * f_0 / 6.0 + f_p1 / 3.0


def fd4_flux(window):
    """Direct fourth-order 4-point interface flux."""
    f_m1, f_0, f_p1, f_p2 = window
    return (-f_m1 + 7.0 * f_0 + 7.0 * f_p1 - f_p2) / 12.0


def combine_linear4(fhat0, fhat1, fhat2):
    """Linear-weight combination of the 4-point candidates (equals fd4_flux)."""
    return D4[0] * fhat0 + D4[1] * fhat1 + D4[2] * fhat2


# ---------------------------------------------------------------------------
# Smoothness indicators


def beta_local(window):
    """First-difference indicators (beta0, beta1, beta_d) of a 4-point window."""
    f_m1, f_0, f_p1, f_p2 = window
    beta0 = (f_m1 - f_0) ** 2
    beta1 = (f_0 - f_p1) ** 2
    beta_d = (f_p1 - f_p2) ** 2
    return beta0, beta1, beta_d


def beta_downwind_avg(beta0, beta1, beta_d):
    """Indicator assigned to the downwind substencil: average of all three."""
    return (beta0 + beta1 + beta_d) / 3.0


def beta_whole4(window):
    """Smoothness indicator of the whole 4-point stencil (six-term quadratic form)."""
    f_m1, f_0, f_p1, f_p2 = window
    t1 = f_m1 - f_0 - f_p1 + f_p2
    t2 = f_m1 - 3.0 * f_0 + 3.0 * f_p1 - f_p2
    t3 = f_m1 - 15.0 * f_0 + 15.0 * f_p1 - f_p2
    t4 = 13.0 * f_m1 + 29.0 * f_0 - 61.0 * f_p1 + 19.0 * f_p2
    t5 = 61.0 * f_m1 - 151.0 * f_0 + 119.0 * f_p1 - 29.0 * f_p2
    t6 = 41.0 * f_m1 - 15.0 * f_0 + 15.0 * f_p1 - 41.0 * f_p2
    return (
        t1 * t1 / 9.0
        + t2 * t2 * (44299.0 / 103680.0)
        + t3 * t3 * (31.0 / 57600.0)
        + t4 * t4 / 2304.0
        + t5 * t5 / 2304.0
        + t6 * t6 / 32400.0
    )


def beta_jiang_shu(window):
    """Classical 5-point substencil indicators (baseline scheme)."""
    f_m2, f_m1, f_0, f_p1, f_p2 = window
    k1, k2 = 13.0 / 12.0, 0.25
    beta0 = k1 * (f_m2 - 2.0 * f_m1 + f_0) ** 2 + k2 * (f_m2 - 4.0 * f_m1 + 3.0 * f_0) ** 2
    beta1 = k1 * (f_m1 - 2.0 * f_0 + f_p1) ** 2 + k2 * (f_m1 - f_p1) ** 2
    beta2 = k1 * (f_0 - 2.0 * f_p1 + f_p2) ** 2 + k2 * (3.0 * f_0 - 4.0 * f_p1 + f_p2) ** 2
    return beta0, beta1, beta2


def tau3(beta0, beta1):
    """Global indicator of the 3-point stencil."""
    return np.abs(beta0 - beta1)


def tau4(beta4, beta0, beta1, beta2, p):
    """Global indicator of the 4-point stencil; p > 0 scales it down."""
    return np.abs(beta4 - (2.0 * beta0 - 3.0 * beta1 + 5.0 * beta2) / 4.0) / p


def smoothness_set(window, p=100.0):
    """All indicators of a 4-point window, bundled (tau4 uses the given p)."""
    beta0, beta1, beta_d = beta_local(window)
    beta2 = beta_downwind_avg(beta0, beta1, beta_d)
    beta4 = beta_whole4(window)
    return SmoothnessSet(beta0, beta1, beta_d, beta2, beta4,
                         tau4(beta4, beta0, beta1, beta2, p))


# ---------------------------------------------------------------------------
# Nonlinear weights


def _normalize(alphas):
    total = alphas[0]
    for a in alphas[1:]:
        total = total + a
    return tuple(a / total for a in alphas)


def _amplification(tau, beta, epsilon, q):
    r = tau / (beta + epsilon)
    amp = r * r if q == 2 else r**q  # exact square keeps q=2 transcendental-free
    return np.minimum(amp, _AMP_CAP)


def weights_js3(beta0, beta1, epsilon):
    """Inverse-square weights on the two upwind substencils."""
    a0 = D3[0] / (beta0 + epsilon) ** 2
    a1 = D3[1] / (beta1 + epsilon) ** 2
    return _normalize((a0, a1))


def weights_z3(beta0, beta1, tau3, epsilon):
    """Z-type weights on the two upwind substencils (amplification fixed at power 2)."""
    a0 = D3[0] * (1.0 + _amplification(tau3, beta0, epsilon, 2))
    a1 = D3[1] * (1.0 + _amplification(tau3, beta1, epsilon, 2))
    return _normalize((a0, a1))


def weights_js4(beta0, beta1, beta2, epsilon):
    """Inverse-square weights for the central-upwind 4-point scheme."""
    a0 = D4[0] / (beta0 + epsilon) ** 2
    a1 = D4[1] / (beta1 + epsilon) ** 2
    a2 = D4[2] / (beta2 + epsilon) ** 2
    return _normalize((a0, a1, a2))


def weights_za4(beta0, beta1, beta2, tau4, epsilon, q):
    """Z-type weights with the averaged downwind indicator."""
    a0 = D4[0] * (1.0 + _amplification(tau4, beta0, epsilon, q))
    a1 = D4[1] * (1.0 + _amplification(tau4, beta1, epsilon, q))
    a2 = D4[2] * (1.0 + _amplification(tau4, beta2, epsilon, q))
    return _normalize((a0, a1, a2))


def weights_js5(beta0, beta1, beta2, epsilon):
    """Classical inverse-square weights of the 5-point baseline."""
    a0 = D5[0] / (beta0 + epsilon) ** 2
    a1 = D5[1] / (beta1 + epsilon) ** 2
    a2 = D5[2] / (beta2 + epsilon) ** 2
    return _normalize((a0, a1, a2))


# ---------------------------------------------------------------------------
# Interface reconstruction


def nonlinear_weights(window, cfg):
    """Nonlinear weights of the window under cfg (linear weights if forced)."""
    window = np.asarray(window, dtype=float)
    assert window.shape[0] == cfg.window_size, (
        f"{cfg.variant} needs {cfg.window_size} samples, got {window.shape[0]}"
    )
    if cfg.force_linear:
        d = cfg.linear_weights
        shape = window.shape[1:]
        return tuple(np.full(shape, dk) if shape else dk for dk in d)
    if cfg.window_size == 3:
        beta0 = (window[0] - window[1]) ** 2
        beta1 = (window[1] - window[2]) ** 2
        if cfg.variant == "weno3-js":
            return weights_js3(beta0, beta1, cfg.epsilon)
        return weights_z3(beta0, beta1, tau3(beta0, beta1), cfg.epsilon)
    if cfg.window_size == 4:
        beta0, beta1, beta_d = beta_local(window)
        beta2 = beta_downwind_avg(beta0, beta1, beta_d)
        if cfg.variant == "weno4-js":
            return weights_js4(beta0, beta1, beta2, cfg.epsilon)
        t4 = tau4(beta_whole4(window), beta0, beta1, beta2, cfg.p)
        return weights_za4(beta0, beta1, beta2, t4, cfg.epsilon, cfg.q)
    beta = beta_jiang_shu(window)
    return weights_js5(*beta, cfg.epsilon)


def reconstruct_interface(window, cfg):
    """Convex combination of the candidate fluxes with the variant's weights."""
    window = np.asarray(window, dtype=float)
    assert window.shape[0] == cfg.window_size, (
        f"{cfg.variant} needs {cfg.window_size} samples, got {window.shape[0]}"
    )
    candidates = {
        3: candidate_fluxes3,
        4: candidate_fluxes4,
        5: candidate_fluxes5,
    }[cfg.window_size](window)
    omega = nonlinear_weights(window, cfg)
    out = omega[0] * candidates[0]
    for w, c in zip(omega[1:], candidates[1:]):
        out = out + w * c
    return out
