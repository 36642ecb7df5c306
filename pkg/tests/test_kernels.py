"""Unit tests for the reconstruction kernels: candidate fluxes, smoothness
indicators, nonlinear weights and the interface reconstruction."""

from fractions import Fraction

import numpy as np
import pytest

from cuweno.kernels import (D3, D4, D5, SchemeConfig, beta_downwind_avg,
                            beta_jiang_shu, beta_local, beta_whole4,
                            candidate_fluxes3, candidate_fluxes4,
                            candidate_fluxes5, combine_linear4, fd3_flux,
                            fd4_flux, make_scheme, nonlinear_weights,
                            reconstruct_interface, smoothness_set, tau3, tau4,
                            weights_js3, weights_js4, weights_js5, weights_za4,
                            weights_z3)

RNG_SEED = 20240811


def beta_whole4_fraction(window):
    """Independent term-by-term evaluation of the six-term quadratic form."""
    m1, f0, p1, p2 = [Fraction(v) for v in window]
    t1 = m1 - f0 - p1 + p2
    t2 = m1 - 3 * f0 + 3 * p1 - p2
    t3 = m1 - 15 * f0 + 15 * p1 - p2
    t4 = 13 * m1 + 29 * f0 - 61 * p1 + 19 * p2
    t5 = 61 * m1 - 151 * f0 + 119 * p1 - 29 * p2
    t6 = 41 * m1 - 15 * f0 + 15 * p1 - 41 * p2
    return (t1 * t1 * Fraction(1, 9) + t2 * t2 * Fraction(44299, 103680)
            + t3 * t3 * Fraction(31, 57600) + t4 * t4 * Fraction(1, 2304)
            + t5 * t5 * Fraction(1, 2304) + t6 * t6 * Fraction(1, 32400))


def linear_window(a, s, size=4):
    return a + s * np.arange(float(size))


# ---------------------------------------------------------------------------
# candidate fluxes and linear combination


def test_candidate_fluxes4_linear_data():
    fhat = candidate_fluxes4(np.array([1.0, 2.0, 3.0, 4.0]))
    assert fhat == (2.5, 2.5, 2.5)


def test_candidate_fluxes4_constant():
    c = 3.5  # dyadic, so the coefficient arithmetic is exact
    assert candidate_fluxes4(np.full(4, c)) == (c, c, c)
    fhat = candidate_fluxes4(np.full(4, 3.7))
    assert np.allclose(fhat, 3.7, rtol=1e-15, atol=0.0)


def test_candidate_fluxes4_hand_values():
    assert candidate_fluxes4(np.array([1.0, 2.0, 4.0, 8.0])) == (2.5, 3.0, 2.0)


def test_candidate_fluxes3_and_5_linear_data():
    w3 = linear_window(0.3, 0.25, 3)
    assert np.allclose(candidate_fluxes3(w3), 0.3 + 0.25 * 1.5, atol=1e-15)
    w5 = linear_window(-1.0, 0.5, 5)
    # interface sits between samples 2 and 3
    assert np.allclose(candidate_fluxes5(w5), -1.0 + 0.5 * 2.5, atol=1e-14)


def test_combine_linear4_hand_value():
    fhat = candidate_fluxes4(np.array([1.0, 2.0, 4.0, 8.0]))
    assert combine_linear4(*fhat) == pytest.approx(2.75, abs=1e-15)
    assert fd4_flux(np.array([1.0, 2.0, 4.0, 8.0])) == pytest.approx(33.0 / 12.0)


def test_combine_linear4_trivials():
    assert combine_linear4(*candidate_fluxes4(np.array([1.0, 2.0, 3.0, 4.0]))) \
        == pytest.approx(2.5, abs=1e-14)
    assert combine_linear4(*candidate_fluxes4(np.zeros(4))) == 0.0


def test_linear_weight_identity_random_windows():
    # d-combination of candidates must equal the direct 4-point stencil
    rng = np.random.default_rng(RNG_SEED)
    windows = rng.standard_normal((4, 1000))
    lhs = combine_linear4(*candidate_fluxes4(windows))
    rhs = fd4_flux(windows)
    assert np.all(np.abs(lhs - rhs) <= 1e-14 * (1.0 + np.abs(rhs)))


def test_fd3_is_linear_combo_of_3pt_candidates():
    rng = np.random.default_rng(RNG_SEED)
    w = rng.standard_normal((3, 500))
    fhat0, fhat1 = candidate_fluxes3(w)
    assert np.allclose(D3[0] * fhat0 + D3[1] * fhat1, fd3_flux(w), atol=1e-14)


def test_fd4_exact_on_cubic_flux_function():
    # for cubic f the implied interface flux is f - dx^2/24 f'' exactly
    for dx in (0.5, 0.05):
        for a, b, c, d in [(1.0, -2.0, 0.5, 3.0), (0.2, 1.0, 0.0, -1.0)]:
            xi = 0.37
            xs = xi + dx * np.array([-1.5, -0.5, 0.5, 1.5])
            f = a * xs**3 + b * xs**2 + c * xs + d
            expected = (a * xi**3 + b * xi**2 + c * xi + d
                        - dx**2 / 24.0 * (6.0 * a * xi + 2.0 * b))
            assert fd4_flux(f) == pytest.approx(expected, abs=1e-13)


# ---------------------------------------------------------------------------
# smoothness indicators


def test_beta_local_hand_values():
    assert beta_local(np.array([1.0, 2.0, 4.0, 8.0])) == (1.0, 4.0, 16.0)


def test_beta_local_constant_and_linear():
    assert beta_local(np.full(4, 2.5)) == (0.0, 0.0, 0.0)
    b = beta_local(linear_window(1.25, 0.5))
    assert b == (0.25, 0.25, 0.25)


def test_beta_downwind_avg():
    assert beta_downwind_avg(1.0, 4.0, 16.0) == 7.0
    assert beta_downwind_avg(0.0, 0.0, 0.0) == 0.0
    s2 = 0.09
    assert beta_downwind_avg(s2, s2, s2) == pytest.approx(s2, abs=1e-16)


def test_beta_whole4_linear_window_is_slope_squared():
    for a, s in [(0.0, 1.0), (2.0, -0.5), (-3.0, 0.125)]:
        assert beta_whole4(linear_window(a, s)) == pytest.approx(s * s, rel=1e-14)


def test_beta_whole4_constant_window():
    assert beta_whole4(np.full(4, 4.25)) == 0.0  # dyadic: exactly zero
    assert beta_whole4(np.full(4, 4.2)) <= 1e-27  # round-off scale only


def test_beta_whole4_against_fraction_oracle():
    window = [1.0, 2.0, 4.0, 8.0]
    exact = beta_whole4_fraction(window)
    assert exact == Fraction(947, 240)
    assert beta_whole4(np.array(window)) == pytest.approx(float(exact), rel=1e-15)
    rng = np.random.default_rng(RNG_SEED)
    for _ in range(50):
        w = [float(v) for v in rng.integers(-50, 50, size=4)]
        assert beta_whole4(np.array(w)) == pytest.approx(
            float(beta_whole4_fraction(w)), rel=1e-13, abs=1e-13)


def test_tau4_linear_and_constant_null():
    for a, s in [(1.0, 1.0), (0.0, -2.0), (5.0, 0.0)]:
        w = linear_window(a, s)
        b0, b1, bd = beta_local(w)
        b2 = beta_downwind_avg(b0, b1, bd)
        assert tau4(beta_whole4(w), b0, b1, b2, 1.0) == pytest.approx(0.0, abs=1e-16)


def test_tau4_absolute_value_case():
    assert tau4(1.0, 0.0, 0.0, 0.0, 1.0) == 1.0
    assert tau4(1.0, 0.0, 0.0, 0.0, 4.0) == 0.25


def test_tau3():
    assert tau3(1.0, 4.0) == 3.0
    assert tau3(2.0, 2.0) == 0.0


def test_smoothness_set_bundles_everything():
    s = smoothness_set(np.array([1.0, 2.0, 4.0, 8.0]), p=1.0)
    assert (s.beta0, s.beta1, s.beta_d, s.beta2) == (1.0, 4.0, 16.0, 7.0)
    assert s.beta4 == pytest.approx(947.0 / 240.0, rel=1e-15)
    assert s.tau4 == pytest.approx(abs(947.0 / 240.0 - 25.0 / 4.0), rel=1e-14)


# ---------------------------------------------------------------------------
# nonlinear weights


def assert_weight_vector(omega, n):
    omega = np.asarray(omega)
    assert omega.shape[0] == n
    assert np.all(omega >= 0)
    assert np.abs(omega.sum(axis=0) - 1.0).max() <= 1e-14


def test_weights_js4_equal_indicators_give_linear_weights():
    for b in (0.0, 1.0, 1e-8, 37.5):
        omega = weights_js4(b, b, b, 1e-6)
        assert np.allclose(omega, D4, atol=1e-15)


def test_weights_js4_downwind_discontinuity():
    # window (1,1,1,10): betas (0, 0, 27); weights approach (1/5, 4/5, 0)
    b0, b1, bd = beta_local(np.array([1.0, 1.0, 1.0, 10.0]))
    b2 = beta_downwind_avg(b0, b1, bd)
    omega = weights_js4(b0, b1, b2, 1e-6)
    assert omega[0] == pytest.approx(0.2, abs=1e-9)
    assert omega[1] == pytest.approx(0.8, abs=1e-9)
    assert omega[2] < 1e-12
    assert_weight_vector(omega, 3)


def test_weights_za4_tau_zero_gives_linear_weights():
    omega = weights_za4(1.0, 2.0, 3.0, 0.0, 1e-40, 2.0)
    assert np.allclose(omega, D4, atol=1e-15)


def test_weights_za4_equal_betas_cancel():
    omega = weights_za4(0.3, 0.3, 0.3, 5.0, 1e-40, 2.0)
    assert np.allclose(omega, D4, atol=1e-14)


def test_weights_za4_downwind_discontinuity_vs_js():
    window = np.array([1.0, 1.0, 1.0, 10.0])
    b0, b1, bd = beta_local(window)
    b2 = beta_downwind_avg(b0, b1, bd)
    t4 = tau4(beta_whole4(window), b0, b1, b2, 100.0)
    omega_za = weights_za4(b0, b1, b2, t4, 1e-40, 2.0)
    omega_js = weights_js4(b0, b1, b2, 1e-40)
    assert omega_za[2] > omega_js[2]
    assert omega_za[2] < 1e-6 * D4[2]
    assert omega_za[0] == pytest.approx(0.2, abs=1e-6)
    assert omega_za[1] == pytest.approx(0.8, abs=1e-6)


def test_weights_js3():
    assert np.allclose(weights_js3(0.5, 0.5, 1e-6), D3, atol=1e-12)
    omega = weights_js3(0.0, 1.0, 1e-6)
    assert omega[0] == pytest.approx(1.0, abs=1e-10)
    omega = weights_js3(1.0, 0.0, 1e-6)
    assert omega[1] == pytest.approx(1.0, abs=1e-10)


def test_weights_z3():
    assert np.allclose(weights_z3(0.7, 0.7, 0.0, 1e-40), D3, atol=1e-15)
    assert np.allclose(weights_z3(0.2, 0.9, 0.0, 1e-40), D3, atol=1e-15)
    omega = weights_z3(0.0, 9.0, 9.0, 1e-40)
    assert omega[0] == pytest.approx(1.0, abs=1e-10)


def test_weights_js5_equal_betas():
    assert np.allclose(weights_js5(0.1, 0.1, 0.1, 1e-6), D5, atol=1e-13)


def test_weight_consistency_all_variants_random_windows():
    rng = np.random.default_rng(RNG_SEED)
    for scheme_id in ("weno3-js", "weno3-z", "weno4-js", "weno4-za", "weno5-js"):
        cfg = make_scheme(scheme_id)
        windows = rng.standard_normal((cfg.window_size, 400)) * 10.0
        omega = nonlinear_weights(windows, cfg)
        assert_weight_vector(np.stack(omega), len(cfg.linear_weights))


# ---------------------------------------------------------------------------
# reconstruction


@pytest.mark.parametrize("scheme_id", ["weno3-js", "weno3-z", "weno4-js",
                                       "weno4-za", "weno5-js", "fd4"])
def test_reconstruct_exact_on_linear_data(scheme_id):
    cfg = make_scheme(scheme_id)
    k = cfg.window_size
    offsets = {3: np.arange(-1.0, 2.0), 4: np.arange(-1.0, 3.0),
               5: np.arange(-2.0, 3.0)}[k]
    a, s = 0.7, -1.3
    window = a + s * offsets
    expected = a + s * 0.5  # interface halfway between samples 0 and +1
    assert reconstruct_interface(window, cfg) == pytest.approx(expected, abs=1e-13)


def test_reconstruct_constant_any_variant():
    for scheme_id in ("weno3-z", "weno4-za", "weno5-js"):
        cfg = make_scheme(scheme_id)
        c = -2.4
        assert reconstruct_interface(np.full(cfg.window_size, c), cfg) \
            == pytest.approx(c, abs=1e-14)


def test_reconstruct_forced_linear_cubic_exact():
    cfg = make_scheme("fd4")
    dx = 0.25
    xi = -0.4
    xs = xi + dx * np.array([-1.5, -0.5, 0.5, 1.5])
    f = xs**3
    expected = xi**3 - dx**2 / 24.0 * 6.0 * xi
    assert reconstruct_interface(f, cfg) == pytest.approx(expected, abs=1e-14)


def test_reconstruct_za_approaches_linear_combination_on_smooth_data():
    cfg = make_scheme("weno4-za", epsilon=1e-40, p=1.0)
    x0 = 0.3
    deviations = []
    for dx in 2.0 ** -np.arange(3, 9):
        window = np.sin(x0 + dx * np.arange(-1.0, 3.0))
        dev = abs(reconstruct_interface(window, cfg) - combine_linear4(
            *candidate_fluxes4(window)))
        deviations.append(dev)
    deviations = np.array(deviations)
    assert deviations[-1] < 1e-12
    # difference shrinks at least like dx^4 overall
    slope = np.polyfit(np.log(2.0 ** -np.arange(3, 9)), np.log(deviations), 1)[0]
    assert slope > 3.5


def test_reconstruct_wrong_window_length_asserts():
    cfg = make_scheme("weno4-za")
    with pytest.raises(AssertionError):
        reconstruct_interface(np.zeros(5), cfg)


def test_kernels_are_deterministic():
    rng = np.random.default_rng(RNG_SEED)
    w = rng.standard_normal(4) * 5.0
    cfg = make_scheme("weno4-za", p=37.0)
    a = reconstruct_interface(w, cfg)
    b = reconstruct_interface(w.copy(), cfg)
    assert a == b  # bitwise


# ---------------------------------------------------------------------------
# indicator scaling on smooth data


def _window_at(f, x0, dx):
    return f(x0 + dx * np.arange(-1.0, 3.0))


def test_indicator_scaling_smooth_noncritical():
    # away from critical points every indicator behaves like (f'(x) dx)^2
    f = np.sin
    x0 = 0.6
    for dx in (1e-2, 1e-3):
        w = _window_at(f, x0, dx)
        ref = (np.cos(x0) * dx) ** 2
        sset = smoothness_set(w, p=1.0)
        for val in (sset.beta0, sset.beta1, sset.beta2, sset.beta4):
            assert val / ref == pytest.approx(1.0, abs=30.0 * dx)


def test_tau4_fourth_order_scaling():
    f = lambda x: np.sin(np.pi * x)
    x0 = 0.25
    dxs = 2.0 ** -np.arange(4, 11)
    taus = [smoothness_set(_window_at(f, x0, dx), p=1.0).tau4 for dx in dxs]
    slope = np.polyfit(np.log(dxs), np.log(taus), 1)[0]
    assert abs(slope - 4.0) <= 0.25


def test_sufficient_condition_scaling_za_vs_js():
    f = lambda x: np.sin(np.pi * x)
    x0 = 0.25
    dxs = 2.0 ** -np.arange(4, 11)
    za = make_scheme("weno4-za", epsilon=1e-40, p=1.0)
    js = make_scheme("weno4-js", epsilon=1e-40)
    dev_za, dev_js = [], []
    for dx in dxs:
        w = _window_at(f, x0, dx)
        dev_za.append(np.abs(np.array(nonlinear_weights(w, za)) - D4).max())
        dev_js.append(np.abs(np.array(nonlinear_weights(w, js)) - D4).max())
    slope_za = np.polyfit(np.log(dxs), np.log(dev_za), 1)[0]
    slope_js = np.polyfit(np.log(dxs), np.log(dev_js), 1)[0]
    assert slope_za >= 3.5
    assert 0.7 <= slope_js <= 1.4


# ---------------------------------------------------------------------------
# weight behavior around a step (discontinuity in S2 / S1 / S0)


def _step_windows(case, dx, jump=2.0):
    """Smooth baseline plus a jump placed inside one substencil."""
    base = np.sin(1.0 + dx * np.arange(-1.0, 3.0)) + 3.0
    w = base.copy()
    if case == "S2":
        w[3] += jump
    elif case == "S1":
        w[2:] += jump
    else:  # S0
        w[1:] += jump
    return w


@pytest.mark.parametrize("case,k", [("S2", 2), ("S1", 1), ("S0", 0)])
def test_step_weights_orderings(case, k):
    za = make_scheme("weno4-za", epsilon=1e-40, p=100.0)
    js = make_scheme("weno4-js", epsilon=1e-40)
    for dx in 2.0 ** -np.arange(5, 10):
        w = _step_windows(case, dx)
        omega_za = nonlinear_weights(w, za)
        omega_js = nonlinear_weights(w, js)
        assert omega_js[k] < omega_za[k] < D4[k]
        assert omega_za[k] < 0.1 * D4[k]


def test_step_case1_limit_weights():
    za = make_scheme("weno4-za", epsilon=1e-40, p=100.0)
    js = make_scheme("weno4-js", epsilon=1e-40)
    w = _step_windows("S2", 2.0**-9)
    for cfg in (za, js):
        omega = nonlinear_weights(w, cfg)
        assert omega[0] == pytest.approx(0.2, abs=1e-2)
        assert omega[1] == pytest.approx(0.8, abs=1e-2)


# ---------------------------------------------------------------------------
# configuration validation


def test_scheme_config_validation():
    with pytest.raises(ValueError):
        SchemeConfig("weno9-xx")
    with pytest.raises(ValueError):
        SchemeConfig("weno4-za", epsilon=0.0)
    with pytest.raises(ValueError):
        SchemeConfig("weno4-za", p=0.0)
    with pytest.raises(ValueError):
        SchemeConfig("weno4-za", q=0.5)
    with pytest.raises(ValueError):
        make_scheme("not-a-scheme")


def test_scheme_defaults():
    assert make_scheme("weno4-za").epsilon == 1e-40
    assert make_scheme("weno3-z").epsilon == 1e-40
    assert make_scheme("weno4-js").epsilon == 1e-6
    assert make_scheme("weno5-js").epsilon == 1e-6
    assert make_scheme("weno4-za").q == 2.0
    fd4 = make_scheme("fd4")
    assert fd4.force_linear and fd4.window_size == 4 and fd4.label == "FD4"
