# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; semantic mirror of bosonspin._kernels_py.

Same three entry points, same shapes, same numerics (the parity test pins
both backends together to ~1e-12).
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport ceil, cos, fabs, hypot, sin, sqrt

cnp.import_array()

from ._fresnel_coeffs import F_CHEB, G_CHEB, TMAX, XCUT

BACKEND = "compiled"

cdef double _SQRT_PI_8 = sqrt(np.pi / 8.0)
cdef int _SERIES_TERMS = 28
cdef double _XCUT = XCUT
cdef double _TMAX = TMAX

cdef int _NCHEB = len(F_CHEB)
cdef double[::1] _F_CHEB = np.asarray(F_CHEB, dtype=np.float64)
cdef double[::1] _G_CHEB = np.asarray(G_CHEB, dtype=np.float64)


cdef inline double _cheb(double[::1] coeffs, double u) nogil:
    cdef double b1 = 0.0, b2 = 0.0, tmp
    cdef int k
    for k in range(_NCHEB - 1, 0, -1):
        tmp = 2.0 * u * b1 - b2 + coeffs[k]
        b2 = b1
        b1 = tmp
    return u * b1 - b2 + coeffs[0]


cdef inline void _fresnel_one(double x, double *c_out, double *s_out) nogil:
    cdef double ax = fabs(x)
    cdef double x4, term_c, term_s, acc_c, acc_s, u, f, g, x2, sn, cs, sign
    cdef int k
    if ax < _XCUT:
        x4 = -(ax * ax * ax * ax)
        term_c = 1.0
        term_s = 1.0
        acc_c = 1.0
        acc_s = 1.0 / 3.0
        for k in range(1, _SERIES_TERMS):
            term_c = term_c * x4 / ((2 * k - 1) * (2 * k))
            term_s = term_s * x4 / ((2 * k) * (2 * k + 1))
            acc_c += term_c / (4 * k + 1)
            acc_s += term_s / (4 * k + 3)
        c_out[0] = ax * acc_c
        s_out[0] = ax * ax * ax * acc_s
    else:
        u = 2.0 * (ax ** -4.0) / _TMAX - 1.0
        f = _cheb(_F_CHEB, u) / ax
        g = _cheb(_G_CHEB, u) / (ax * ax * ax)
        x2 = ax * ax
        sn = sin(x2)
        cs = cos(x2)
        c_out[0] = _SQRT_PI_8 + f * sn - g * cs
        s_out[0] = _SQRT_PI_8 - f * cs - g * sn
    sign = 1.0 if x > 0.0 else (-1.0 if x < 0.0 else 0.0)
    c_out[0] *= sign
    s_out[0] *= sign


def fresnel_cs(x):
    """Un-normalized Fresnel integrals C(x), S(x); scalar or array."""
    cdef double cs_, ss_
    if np.ndim(x) == 0:
        _fresnel_one(float(x), &cs_, &ss_)
        return cs_, ss_
    xa = np.ascontiguousarray(x, dtype=np.float64)
    cdef double[::1] xv = xa.ravel()
    out_c = np.empty(xv.shape[0], dtype=np.float64)
    out_s = np.empty(xv.shape[0], dtype=np.float64)
    cdef double[::1] cv = out_c
    cdef double[::1] sv = out_s
    cdef Py_ssize_t i, n = xv.shape[0]
    with nogil:
        for i in range(n):
            _fresnel_one(xv[i], &cv[i], &sv[i])
    return out_c.reshape(np.shape(x)), out_s.reshape(np.shape(x))


def single_markers_batch(tau, double phi, double delta_tilde, xi, xi_prime, double e_beta):
    """Single-spin |Gamma|^2 and B; broadcasts tau against xi/xi_prime like the fallback."""
    cdef double e2 = e_beta * e_beta
    if np.ndim(tau) != 0:
        # tau sweep at fixed amplitudes: delegate shape handling to numpy
        from . import _kernels_py
        return _kernels_py.single_markers_batch(tau, phi, delta_tilde, xi, xi_prime, e_beta)
    xa = np.ascontiguousarray(xi, dtype=np.float64)
    xpa = np.ascontiguousarray(xi_prime, dtype=np.float64)
    if xa.shape != xpa.shape:
        xa, xpa = np.broadcast_arrays(xa, xpa)
        xa = np.ascontiguousarray(xa)
        xpa = np.ascontiguousarray(xpa)
    cdef double[::1] xv = xa.ravel()
    cdef double[::1] xpv = xpa.ravel()
    cdef Py_ssize_t i, n = xv.shape[0]
    gamma = np.empty(n, dtype=np.float64)
    bout = np.empty(n, dtype=np.float64)
    cdef double[::1] gv = gamma
    cdef double[::1] bv = bout
    cdef double t = tau
    cdef double sphi = sin(phi)
    cdef double stp = sin(t + phi)
    cdef double x, xp, dxi, slow, slow2, a, b, ap, u0, u1, u00, u11
    with nogil:
        for i in range(n):
            x = xv[i]
            xp = xpv[i]
            dxi = x - xp
            slow = delta_tilde * (x * x - xp * xp) * t
            slow2 = delta_tilde * (x * x + xp * xp - 2.0) * t
            a = dxi * sphi
            b = dxi * stp
            ap = (x + xp) * sphi
            u0 = cos(a) * cos(slow) * cos(b) + sin(a) * cos(slow2) * sin(b)
            u1 = -cos(ap) * sin(slow) * cos(b) + sin(ap) * sin(slow2) * sin(b)
            u00 = u0 * u0
            u11 = u1 * u1
            gv[i] = u00 + e2 * u11
            bv[i] = 1.0 - e2 + e2 * (u00 + u11)
    return gamma.reshape(xa.shape), bout.reshape(xa.shape)


def propagate_bloch_grid(double xi, double delta_tilde, double phi, taus, int steps_per_period):
    """Exact midpoint-exponential propagation on a tau grid; see the fallback docstring."""
    ta = np.ascontiguousarray(taus, dtype=np.float64)
    if ta.ndim != 1:
        raise ValueError("taus must be one-dimensional")
    if ta.shape[0] and (ta[0] < 0.0 or np.any(np.diff(ta) < 0.0)):
        raise ValueError("taus must be non-negative and non-decreasing")
    cdef double[::1] tv = ta
    cdef Py_ssize_t m = tv.shape[0]
    out = np.empty((m, 4), dtype=np.float64)
    cdef double[:, ::1] ov = out
    cdef double w0 = 1.0, w1 = 0.0, w2 = 0.0, w3 = 0.0
    cdef double hx = -delta_tilde
    cdef double t_prev = 0.0
    cdef double max_step = 2.0 * np.pi / steps_per_period
    cdef double max_defect = 0.0
    cdef double seg, dt, tm, hz, nrm, th, cth, f, a1, a3
    cdef double nw0, nw1, nw2, nw3, nrm2, scale
    cdef Py_ssize_t i
    cdef long j, n
    with nogil:
        for i in range(m):
            seg = tv[i] - t_prev
            n = <long>ceil(seg / max_step) if seg > 0.0 else 0
            dt = seg / n if n > 0 else 0.0
            for j in range(n):
                tm = t_prev + (j + 0.5) * dt
                hz = xi * cos(tm + phi)
                nrm = hypot(hx, hz)
                if nrm == 0.0:
                    continue
                th = nrm * dt
                cth = cos(th)
                f = -sin(th) / nrm
                a1 = f * hx
                a3 = f * hz
                nw0 = cth * w0 - a1 * w1 - a3 * w3
                nw1 = cth * w1 + a1 * w0 + a3 * w2
                nw2 = cth * w2 - a3 * w1 + a1 * w3
                nw3 = cth * w3 + a3 * w0 - a1 * w2
                w0 = nw0
                w1 = nw1
                w2 = nw2
                w3 = nw3
            nrm2 = w0 * w0 + w1 * w1 + w2 * w2 + w3 * w3
            if fabs(nrm2 - 1.0) > max_defect:
                max_defect = fabs(nrm2 - 1.0)
            scale = 1.0 / sqrt(nrm2)
            w0 *= scale
            w1 *= scale
            w2 *= scale
            w3 *= scale
            ov[i, 0] = w0
            ov[i, 1] = w1
            ov[i, 2] = w2
            ov[i, 3] = w3
            t_prev = tv[i]
    return out, max_defect
