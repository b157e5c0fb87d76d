"""Acceptance suite: one test per criterion, each at its stated tolerance.

Run with `pytest tests/test_acceptance.py -v` for one pass/fail line per
criterion; the PASS prints (visible with -s) carry the measured numbers.
"""

import math
import os
import time
from dataclasses import replace

import numpy as np
import pytest
from scipy import integrate

from bosonspin import averaging, cli, markers, oracle
from bosonspin.core import BlochVector, DimensionlessSet, EnsembleSpec, RelativeUnitary
from bosonspin.floquet import matrix_from_components, relative_components, relative_unitary, single_unitary
from bosonspin.presets import FIGURE_PRESETS
from bosonspin.scenario import Scenario

E1 = math.tanh(0.5)
GOLDEN_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "golden")


def _report(criterion, detail):
    print(f"ACCEPTANCE {criterion}: {detail}")


def test_c01_complementarity_identity():
    rng = np.random.default_rng(101)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(10_000):
        v = rng.normal(size=3)
        v *= rng.random() ** (1.0 / 3.0) / np.linalg.norm(v)
        a = BlochVector(*map(float, v))
        q = rng.normal(size=4)
        q /= np.linalg.norm(q)
        u = RelativeUnitary(*map(float, q))
        defect = abs(
            markers.overlap_single(a, u)
            - markers.gamma_sq_single(a, u)
            - (1.0 - a.norm_sq) * (1.0 - u.u0 ** 2)
        )
        worst = max(worst, defect)
    elapsed = time.perf_counter() - start
    _report(1, f"max defect {worst:.3e} over 1e4 pairs in {elapsed:.2f}s")
    assert worst <= 1e-12
    assert elapsed < 1.0


def test_c02_unitarity_and_consistency():
    rng = np.random.default_rng(102)
    start = time.perf_counter()
    n = 10_000
    xi = rng.uniform(-1, 1, n)
    xip = rng.uniform(-1, 1, n)
    dt = rng.uniform(0, 1, n)
    tau = rng.uniform(0, 50, n)
    phi = rng.uniform(-np.pi, np.pi, n)
    u0, u1, u2, u3 = relative_components(xi, xip, dt, tau, phi)
    norm_defect = float(np.abs(u0 ** 2 + u1 ** 2 + u2 ** 2 + u3 ** 2 - 1.0).max())
    worst = 0.0
    for i in range(n):
        d = DimensionlessSet(xi=float(xi[i]), xi_prime=float(xip[i]),
                             delta_tilde=float(dt[i]), tau=float(tau[i]), phi=float(phi[i]))
        product = single_unitary(d, d.xi_prime).conj().T @ single_unitary(d)
        closed = matrix_from_components(float(u0[i]), float(u1[i]), float(u2[i]), float(u3[i]))
        worst = max(worst, float(np.abs(product - closed).max()))
    elapsed = time.perf_counter() - start
    _report(2, f"norm defect {norm_defect:.3e}, product mismatch {worst:.3e}, {elapsed:.2f}s")
    assert norm_defect <= 1e-12
    assert worst <= 1e-12
    assert elapsed < 5.0


def test_c03_phase_zero_revivals():
    rng = np.random.default_rng(103)
    worst_single = 0.0
    worst_period = 0.0
    worst_product = 0.0
    spins = [
        DimensionlessSet(xi=float(x), xi_prime=float(x) / 9.0, delta_tilde=1 / 6,
                         tau=0.0, phi=0.0)
        for x in rng.uniform(0.05, 0.95, 100)
    ]
    for n in range(1, 6):
        tau_n = n * math.pi
        _, b = markers.thermal_singles(
            DimensionlessSet(xi=0.9, xi_prime=0.1, delta_tilde=1 / 6, tau=tau_n, phi=0.0), E1
        )
        worst_single = max(worst_single, abs(b - 1.0))
        product = markers.ensemble_product([replace(s, tau=tau_n) for s in spins], E1, "b")
        worst_product = max(worst_product, abs(product - 1.0))
    for tau in rng.uniform(0.0, 20.0, 50):
        d = DimensionlessSet(xi=0.9, xi_prime=0.1, delta_tilde=1 / 6, tau=float(tau), phi=0.0)
        _, b1 = markers.thermal_singles(d, E1)
        _, b2 = markers.thermal_singles(replace(d, tau=d.tau + math.pi), E1)
        worst_period = max(worst_period, abs(b1 - b2))
        p1 = markers.ensemble_product([replace(s, tau=float(tau)) for s in spins], E1, "b")
        p2 = markers.ensemble_product([replace(s, tau=float(tau) + math.pi) for s in spins], E1, "b")
        worst_period = max(worst_period, abs(p1 - p2))
    _report(3, f"revival defect single {worst_single:.2e} / product {worst_product:.2e}, "
               f"periodicity defect {worst_period:.2e}")
    assert worst_single <= 1e-12
    assert worst_product <= 1e-12
    assert worst_period <= 1e-12


def test_c04_oracle_convergence():
    start = time.perf_counter()
    taus = np.linspace(1e-9, 10 * math.pi, 250)

    def max_err(scale):
        d = DimensionlessSet(xi=0.05 * scale, xi_prime=0.01 * scale,
                             delta_tilde=0.02 * scale, tau=0.0, phi=0.0)
        exact = oracle.exact_relative_grid(d, taus)
        hfe = np.stack(relative_components(d.xi, d.xi_prime, d.delta_tilde, taus, d.phi), axis=1)
        return float(np.abs(exact - hfe).max())

    err = max_err(1.0)
    err_half = max_err(0.5)
    elapsed = time.perf_counter() - start
    _report(4, f"max |exact-hfe| {err:.3e} (tol 5e-2), contraction x{err / err_half:.2f}, {elapsed:.1f}s")
    assert err <= 5e-2
    assert err / err_half >= 2.0
    assert elapsed < 30.0


def _stratified(n):
    return (np.arange(n) + 0.5) / n


def test_c05_gaussian_law():
    xi_bar, xi_bar_prime, dt = 0.1, 0.02, 1.0 / 6.0
    taus = [1.2, 2.2, 2.6, 4.0, 5.1]
    worst = 0.0
    for phi in (0.0, math.pi / 2):
        for n, which in ((20, "gamma"), (100, "b")):
            v = _stratified(n)
            for tau in taus:
                spins = [
                    DimensionlessSet(xi=float(vk * xi_bar), xi_prime=float(vk * xi_bar_prime),
                                     delta_tilde=dt, tau=tau, phi=phi)
                    for vk in v
                ]
                exact = markers.ensemble_product(spins, E1, which)
                d = DimensionlessSet(xi=xi_bar, xi_prime=xi_bar_prime, delta_tilde=dt,
                                     tau=tau, phi=phi)
                gauss = markers.gaussian_markers(d, n_u=n, n_mac=n, e_beta=E1, warn=False)
                gauss_value = gauss[0] if which == "gamma" else gauss[1]
                rel = abs(math.log(exact) - math.log(gauss_value)) / abs(math.log(gauss_value))
                worst = max(worst, rel)
    _report(5, f"worst relative log mismatch {worst:.3%} (tol 10%)")
    assert worst <= 0.10


def test_c06_closed_form_vs_monte_carlo():
    start = time.perf_counter()
    taus = np.linspace(0.3, 24.7, 50)
    worst_ratio = 0.0
    detail = []
    for j, phi in enumerate((0.0, math.pi / 4, math.pi / 2)):
        d = DimensionlessSet(xi=0.9, xi_prime=0.1, delta_tilde=1 / 6, tau=0.0, phi=phi,
                             xi_bar=0.9, xi_bar_prime=0.1)
        gf, gs, bf, bs = averaging.avg_singles_phi_grid(d, taus, E1)
        gm, gstderr, bm, bstderr = averaging.monte_carlo_average_grid(
            d, taus, E1, 1_000_000, seed=600 + j
        )
        g_err = np.abs(gm - (gf + gs))
        b_err = np.abs(bm - (bf + bs))
        g_tol = np.maximum(3.0 * gstderr, 1e-3)
        b_tol = np.maximum(3.0 * bstderr, 1e-3)
        worst_ratio = max(worst_ratio, float((g_err / g_tol).max()), float((b_err / b_tol).max()))
        detail.append(f"phi={phi:.2f}: g {g_err.max():.2e}, B {b_err.max():.2e}")
    elapsed = time.perf_counter() - start
    _report(6, f"worst err/tol ratio {worst_ratio:.3f}; {'; '.join(detail)}; {elapsed:.0f}s")
    assert worst_ratio <= 1.0
    assert elapsed < 120.0


def test_c07_closed_form_vs_quadrature():
    rng = np.random.default_rng(107)
    worst = 0.0
    # 1e3 random argument sets for the primitive averages
    for _ in range(500):
        a = float(rng.uniform(-40, 40) * rng.choice([1.0, 1.0, 1e-3, 0.0]))
        b = float(rng.uniform(-8, 8))
        c = float(rng.uniform(-6, 6))
        g_max = float(rng.uniform(0.3, 2.0))
        args = averaging.AvgArgs(a, b, c, g_max)
        ref = integrate.quad(lambda g: math.cos(a * g * g + b * g + c), 0.0, g_max,
                             limit=600, epsabs=1e-12, epsrel=1e-12)[0] / g_max
        worst = max(worst, abs(averaging.avg_cos(args) - ref))
        ref_pair = ref + integrate.quad(lambda g: math.cos(a * g * g - b * g + c), 0.0, g_max,
                                        limit=600, epsabs=1e-12, epsrel=1e-12)[0] / g_max
        worst = max(worst, abs(averaging.f_pair(args) - ref_pair))
    # averaged single-spin markers against direct coupling quadrature
    for _ in range(40):
        d = DimensionlessSet(
            xi=0.0, xi_prime=0.0, delta_tilde=float(rng.uniform(0.02, 0.5)), tau=0.0,
            phi=float(rng.uniform(-math.pi, math.pi)),
            xi_bar=float(rng.uniform(0.05, 0.95)), xi_bar_prime=float(rng.uniform(0.0, 0.9)),
        )
        tau = float(rng.uniform(0.0, 60.0))

        def u_sq(v, which):
            xi, xip = v * d.xi_bar, v * d.xi_bar_prime
            dxi = xi - xip
            s = d.delta_tilde * (xi ** 2 - xip ** 2) * tau
            m = d.delta_tilde * (xi ** 2 + xip ** 2 - 2.0) * tau
            kc, ks = math.cos(dxi * math.sin(tau + d.phi)), math.sin(dxi * math.sin(tau + d.phi))
            if which == 0:
                val = (math.cos(dxi * math.sin(d.phi)) * math.cos(s) * kc
                       + math.sin(dxi * math.sin(d.phi)) * math.cos(m) * ks)
            else:
                ap = (xi + xip) * math.sin(d.phi)
                val = -math.cos(ap) * math.sin(s) * kc + math.sin(ap) * math.sin(m) * ks
            return val * val

        m0 = integrate.quad(lambda v: u_sq(v, 0), 0, 1, limit=800, epsabs=1e-12, epsrel=1e-12)[0]
        m1 = integrate.quad(lambda v: u_sq(v, 1), 0, 1, limit=800, epsabs=1e-12, epsrel=1e-12)[0]
        gamma, b = averaging.avg_singles_phi(replace(d, tau=tau), E1)
        worst = max(worst, abs(gamma.total - (m0 + E1 ** 2 * m1)))
        worst = max(worst, abs(b.total - (1.0 - E1 ** 2 + E1 ** 2 * (m0 + m1))))
    _report(7, f"worst |closed-form - quadrature| {worst:.3e} (tol 1e-8)")
    assert worst <= 1e-8


def test_c08_turning_point_plateau():
    spec = EnsembleSpec(n_u=20, n_mac=100, g_max=1.0, delta=1.0, beta=1.0)
    expected = (math.cosh(1.0) / (math.cosh(1.0) + 1.0)) ** 20
    worst = 0.0
    for n in (1, 3, 7):
        d = DimensionlessSet(xi=0.9, xi_prime=0.1, delta_tilde=1 / 6, tau=n * math.pi, phi=0.0,
                             xi_bar=0.9, xi_bar_prime=0.1)
        gamma, b = averaging.avg_singles_phi(d, E1)
        asym = averaging.asymptotic_markers(gamma, b, spec)
        worst = max(worst, abs(asym.gamma_sq - expected) / expected)
    _report(8, f"plateau {expected:.4e} (~4.6e-5), worst relative error {worst:.2e} (tol 1%)")
    assert expected == pytest.approx(4.6e-5, rel=2e-2)
    assert worst <= 0.01


def test_c09_extrema_formulas():
    rng = np.random.default_rng(109)
    taus = np.linspace(0.0, math.pi, 20001)
    worst = 0.0
    checked_below_one = 0
    for _ in range(100):
        d = DimensionlessSet(
            xi=0.0, xi_prime=0.0, delta_tilde=float(rng.uniform(0.05, 0.5)), tau=0.0,
            phi=float(rng.uniform(-math.pi, math.pi)),
            xi_bar=float(rng.uniform(0.01, 0.99)), xi_bar_prime=float(rng.uniform(0.0, 0.99)),
        )
        e_beta = math.tanh(float(rng.uniform(0.05, 5.0)) / 2.0)
        gf, _, bf, _ = averaging.avg_singles_phi_grid(d, taus, e_beta)
        g_max, b_max = averaging.fast_extrema(d, e_beta)
        worst = max(worst, abs(float(gf.max()) - g_max), abs(float(bf.max()) - b_max))
        if d.phi != 0.0 and 0.0 < e_beta < 1.0:
            assert g_max < 1.0 and b_max < 1.0
            checked_below_one += 1
    _report(9, f"numeric-vs-closed extrema mismatch {worst:.2e} (tol 1e-6), "
               f"{checked_below_one} draws verified below 1")
    assert worst <= 1e-6
    assert checked_below_one > 50


def _envelope_slope(d, which):
    """Log-log envelope slope over tau in [1e2, 1e4]; log-spaced bins, each
    sampled finely enough (step << pi) that the bin maxima trace the envelope."""
    edges = np.geomspace(100.0, 10_000.0, 17)
    centers, peaks = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        taus = np.arange(lo, hi, 0.25)
        _, gs, _, bs = averaging.avg_singles_phi_grid(d, taus, E1)
        slow = gs if which == "gamma" else bs
        centers.append(math.log(math.sqrt(lo * hi)))
        peaks.append(math.log(np.abs(slow).max()))
    return float(np.polyfit(centers, peaks, 1)[0])


# xi_bar_prime large enough that every Fresnel term family is in its
# asymptotic regime across the whole fit window
_C10_D = DimensionlessSet(xi=0.9, xi_prime=0.45, delta_tilde=1 / 6, tau=0.0,
                          phi=math.pi / 4, xi_bar=0.9, xi_bar_prime=0.45)


def test_c10_slow_part_decay_gamma():
    slope = _envelope_slope(_C10_D, "gamma")
    # every underlying Fresnel component family obeys the same law
    dxi = _C10_D.xi_bar - _C10_D.xi_bar_prime
    dt = _C10_D.delta_tilde
    component_slopes = []
    for qcoef, ccoef in ((2 * dt * (0.81 - 0.2025), 0.0), (2 * dt * (0.81 + 0.2025), -4 * dt),
                         (2 * dt * 0.81, -2 * dt), (2 * dt * 0.2025, -2 * dt)):
        edges = np.geomspace(100.0, 10_000.0, 13)
        centers, peaks = [], []
        for lo, hi in zip(edges[:-1], edges[1:]):
            taus = np.arange(lo, hi, 0.35)
            b = 2 * dxi * np.sin(taus + _C10_D.phi) + 2 * dxi * math.sin(_C10_D.phi)
            vals = averaging._f_pair_arrays(qcoef * taus, b, ccoef * taus)
            centers.append(math.log(math.sqrt(lo * hi)))
            peaks.append(math.log(np.abs(vals).max()))
        component_slopes.append(float(np.polyfit(centers, peaks, 1)[0]))
    _report(10, f"gamma_slow envelope slope {slope:.3f} (need -0.5 +/- 0.1); "
                f"Fresnel component slopes {[f'{s:.2f}' for s in component_slopes]}")
    assert -0.6 <= slope <= -0.4
    for s in component_slopes:
        assert -0.6 <= s <= -0.4


def test_c10_slow_part_decay_b():
    # KNOWN RED, kept on purpose (see README, Testing): the expected
    # tau^(-1/2) envelope band cannot hold for the overlap's slow part.  In
    # the combination E^2*(<u0^2> + <u1^2>) every Fresnel term enters as a
    # difference F[a,b1,c] - F[a,b2,c] within the same quadratic family, so
    # the leading 1/sqrt(tau) endpoint contributions cancel pairwise and the
    # true envelope decays like 1/tau (verified against direct coupling
    # quadrature over three decades).  Slopes inside the band exist only in
    # pre-asymptotic crossover windows, which would contradict the asymptotic
    # claim under test; the assertion is kept as stated instead of being
    # tuned green.
    slope = _envelope_slope(_C10_D, "b")
    _report(10, f"b_slow envelope slope {slope:.3f} (band -0.5 +/- 0.1; "
                f"true asymptotic law is 1/tau)")
    assert -0.6 <= slope <= -0.4, (
        f"b_slow envelope slope {slope:.3f} is outside -0.5 +/- 0.1: the leading "
        "1/sqrt(tau) Fresnel contributions cancel pairwise in the overlap "
        "average, leaving a 1/tau envelope; expected failure (see README, Testing)"
    )


def test_c11_length_scale_ordering():
    spec = EnsembleSpec(n_u=37, n_mac=37, g_max=1.7, delta=1.0, beta=1.0)
    scales = markers.length_scales(spec, omega=2.4)
    ratio = scales.lambda_dist / scales.lambda_dec
    _report(11, f"lambda_dist/lambda_dec = {ratio:.12f} vs 1/E = {1 / E1:.12f}")
    assert abs(ratio - 1.0 / E1) <= 1e-12
    assert ratio == pytest.approx(2.164, abs=1e-3)


@pytest.mark.parametrize("name", sorted(FIGURE_PRESETS))
def test_c12_figure_golden_regression(name, tmp_path):
    golden_path = os.path.join(GOLDEN_DIR, f"{name}.csv")
    assert os.path.exists(golden_path), f"missing golden file {golden_path}"
    out = tmp_path / f"{name}.csv"
    cli.write_csv(cli.run_sweep(FIGURE_PRESETS[name]), str(out))
    regenerated = out.read_bytes()
    with open(golden_path, "rb") as fh:
        golden = fh.read()
    _report(12, f"{name}: {len(regenerated)} bytes, byte-identical={regenerated == golden}")
    assert regenerated == golden
