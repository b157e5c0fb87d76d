"""Pure-numpy implementations of the hot kernels.

The compiled extension (bosonspin._kernels) provides the same three entry
points; bosonspin._backend picks whichever is importable.  Keep the two in
semantic lockstep — the test suite compares them element-wise.

Kernels:
    fresnel_cs(x)             un-normalized Fresnel C(x), S(x), vectorized
    single_markers_batch(...) single-spin |Gamma|^2 and B over amplitude arrays
    propagate_bloch_grid(...) exact driven-qubit propagator on a tau grid
"""

from __future__ import annotations

import math

import numpy as np

from ._fresnel_coeffs import F_CHEB, G_CHEB, TMAX, XCUT

BACKEND = "python"

_SQRT_PI_8 = math.sqrt(math.pi / 8.0)
_SERIES_TERMS = 28


def _cheb(coeffs, u):
    """Clenshaw evaluation of a Chebyshev series at u (array)."""
    b1 = np.zeros_like(u)
    b2 = np.zeros_like(u)
    for c in coeffs[:0:-1]:
        b1, b2 = 2.0 * u * b1 - b2 + c, b1
    return u * b1 - b2 + coeffs[0]


def fresnel_cs(x):
    """Un-normalized Fresnel integrals C(x) = int_0^x cos(u^2) du and S likewise.

    Maclaurin series below XCUT, auxiliary-function approximation above; both
    odd in x.  Absolute error stays below ~1e-13 for |x| <= 1e3.
    """
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    ax = np.abs(x)
    c = np.empty_like(ax)
    s = np.empty_like(ax)

    small = ax < XCUT
    if small.any():
        xs = ax[small]
        x4 = -(xs ** 4)
        term_c = np.ones_like(xs)
        term_s = np.ones_like(xs)
        acc_c = np.ones_like(xs)  # k = 0: 1/(4k+1) = 1
        acc_s = np.full_like(xs, 1.0 / 3.0)
        for k in range(1, _SERIES_TERMS):
            term_c = term_c * x4 / ((2 * k - 1) * (2 * k))
            term_s = term_s * x4 / ((2 * k) * (2 * k + 1))
            acc_c += term_c / (4 * k + 1)
            acc_s += term_s / (4 * k + 3)
        c[small] = xs * acc_c
        s[small] = xs ** 3 * acc_s

    large = ~small
    if large.any():
        xl = ax[large]
        u = 2.0 * xl ** -4.0 / TMAX - 1.0
        f = _cheb(F_CHEB, u) / xl
        g = _cheb(G_CHEB, u) / xl ** 3
        x2 = xl * xl
        sn, cs = np.sin(x2), np.cos(x2)
        c[large] = _SQRT_PI_8 + f * sn - g * cs
        s[large] = _SQRT_PI_8 - f * cs - g * sn

    sign = np.sign(x)
    c *= sign
    s *= sign
    if scalar:
        return float(c[0]), float(s[0])
    return c, s


def single_markers_batch(tau, phi, delta_tilde, xi, xi_prime, e_beta):
    """Single-spin |Gamma|^2 and B from the effective-propagator closed form.

    tau/xi/xi_prime broadcast against each other, so the same kernel serves
    Monte Carlo sampling (arrays of amplitudes at fixed tau) and time sweeps
    (fixed amplitudes over a tau grid).
    """
    tau = np.asarray(tau, dtype=float)
    xi = np.asarray(xi, dtype=float)
    xi_prime = np.asarray(xi_prime, dtype=float)
    dxi = xi - xi_prime
    sphi = np.sin(phi)
    stp = np.sin(tau + phi)
    slow = delta_tilde * (xi ** 2 - xi_prime ** 2) * tau
    slow2 = delta_tilde * (xi ** 2 + xi_prime ** 2 - 2.0) * tau
    a = dxi * sphi
    b = dxi * stp
    ap = (xi + xi_prime) * sphi
    u0 = np.cos(a) * np.cos(slow) * np.cos(b) + np.sin(a) * np.cos(slow2) * np.sin(b)
    u1 = -np.cos(ap) * np.sin(slow) * np.cos(b) + np.sin(ap) * np.sin(slow2) * np.sin(b)
    e2 = e_beta * e_beta
    u0u0 = u0 * u0
    u1u1 = u1 * u1
    gamma_sq = u0u0 + e2 * u1u1
    b_overlap = 1.0 - e2 + e2 * (u0u0 + u1u1)
    return gamma_sq, b_overlap


def propagate_bloch_grid(xi, delta_tilde, phi, taus, steps_per_period):
    """Exact propagator of H(tau) = -delta_tilde*sx + xi*cos(tau+phi)*sz on a tau grid.

    Midpoint-exponential stepping in SU(2) component form (w0, w1, w2, w3) for
    U = w0 + i*w.sigma; each step is exactly unitary, so the defect only
    accumulates rounding.  taus must be non-decreasing, starting from t=0.

    Returns (components, max_defect): an (len(taus), 4) array plus the largest
    |w.w - 1| observed before the per-point renormalization.
    """
    taus = np.asarray(taus, dtype=float)
    if taus.ndim != 1:
        raise ValueError("taus must be one-dimensional")
    if len(taus) and (taus[0] < 0.0 or np.any(np.diff(taus) < 0.0)):
        raise ValueError("taus must be non-negative and non-decreasing")
    out = np.empty((len(taus), 4))
    w0, w1, w2, w3 = 1.0, 0.0, 0.0, 0.0
    hx = -delta_tilde
    t_prev = 0.0
    max_step = 2.0 * math.pi / steps_per_period
    max_defect = 0.0
    for i, t in enumerate(taus):
        seg = t - t_prev
        n = int(math.ceil(seg / max_step)) if seg > 0.0 else 0
        dt = seg / n if n else 0.0
        for j in range(n):
            tm = t_prev + (j + 0.5) * dt
            hz = xi * math.cos(tm + phi)
            nrm = math.hypot(hx, hz)
            if nrm == 0.0:
                continue
            th = nrm * dt
            cth = math.cos(th)
            f = -math.sin(th) / nrm
            a1, a3 = f * hx, f * hz
            # U_step * U: scalar a0*b0 - a.b, vector a0*b + b0*a - a x b
            nw0 = cth * w0 - a1 * w1 - a3 * w3
            nw1 = cth * w1 + a1 * w0 + a3 * w2
            nw2 = cth * w2 - a3 * w1 + a1 * w3
            nw3 = cth * w3 + a3 * w0 - a1 * w2
            w0, w1, w2, w3 = nw0, nw1, nw2, nw3
        nrm2 = w0 * w0 + w1 * w1 + w2 * w2 + w3 * w3
        max_defect = max(max_defect, abs(nrm2 - 1.0))
        # compensate rounding drift; each renorm is O(eps)
        scale = 1.0 / math.sqrt(nrm2)
        w0, w1, w2, w3 = w0 * scale, w1 * scale, w2 * scale, w3 * scale
        out[i, 0], out[i, 1], out[i, 2], out[i, 3] = w0, w1, w2, w3
        t_prev = t
    return out, max_defect
