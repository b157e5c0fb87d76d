"""Closed-form uniform-coupling averages, their fast/slow split, extrema,
small-phase bounds and the Monte Carlo validator.

Averages are over a coupling g uniform on [0, g_max].  Substituting
v = g/g_max, every averaged quantity reduces to integrals of
cos(A v^2 + B v + c) over v in [0, 1], where A and B are the quadratic and
linear phase angles evaluated at the cutoff.  The averaged squares of the
relative-unitary components are finite sums of such terms; the term tables
below (coefficient, quadratic key, linear key, constant key) are data so they
can be audited entry by entry, and the whole table is pinned against adaptive
quadrature by the test suite.

Key quantities at the cutoff (all dimensionless):

    S  = delta_tilde*(xi_bar^2 - xi_bar'^2)*tau     half the slow-difference angle
    M  = delta_tilde*(xi_bar^2 + xi_bar'^2)*tau     half the slow-sum angle
    dd = -2*delta_tilde*tau                          constant offset of the sum angle
    w-(phi)   = 2*(xi_bar - xi_bar')*sin(phi)
    w+(phi)   = 2*(xi_bar + xi_bar')*sin(phi)
    w(tau)    = 2*(xi_bar - xi_bar')*sin(tau + phi)

The fast (tau-periodic) part of each average collects the constant and pure
sinc terms; the slow part collects the Fresnel terms, every one of which
decays like 1/sqrt(tau).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .core import DimensionlessSet, EnsembleSpec
# the closed-form averages always use the numpy Fresnel kernel: batches are
# vectorized anyway, and the CSV output stays byte-stable whether or not the
# compiled extension is installed
from ._kernels_py import fresnel_cs
from .special import sinc

__all__ = [
    "AvgArgs",
    "FastSlowSplit",
    "AsymptoticMarkers",
    "MonteCarloResult",
    "avg_cos",
    "f_pair",
    "avg_singles_phi",
    "avg_singles_phi_grid",
    "asymptotic_markers",
    "fast_extrema",
    "small_phi_bounds",
    "monte_carlo_average",
    "monte_carlo_average_grid",
    "U0_SINC_TERMS",
    "U0_FRESNEL_TERMS",
    "U1_SINC_TERMS",
    "U1_FRESNEL_TERMS",
]

_A_SMALL = 1e-4          # below this quadratic angle, Taylor-in-A beats the Fresnel form
_PHASE_GUARD = 1e8       # b^2/(4a) beyond this is catastrophic cancellation: use quadrature
_MOMENT_SERIES_B = 4.0   # |B| switchover between series and recursion for the moments


@dataclass(frozen=True)
class AvgArgs:
    """Arguments of <cos(a g^2 + b g + c)> over g uniform on [0, g_max]."""

    a: float
    b: float
    c: float
    g_max: float

    def __post_init__(self):
        for name in ("a", "b", "c", "g_max"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.g_max <= 0.0:
            raise ValueError(f"g_max must be positive, got {self.g_max!r}")


@dataclass(frozen=True)
class FastSlowSplit:
    """tau-periodic component plus the O(1/sqrt(tau)) Fresnel remainder."""

    fast: float
    slow: float

    @property
    def total(self) -> float:
        return self.fast + self.slow


@dataclass(frozen=True)
class AsymptoticMarkers:
    """Fast-part powers of the ensemble markers with the slow remainder as an error band."""

    gamma_sq: float
    b: float
    gamma_band: float
    b_band: float


@dataclass(frozen=True)
class MonteCarloResult:
    gamma_mean: float
    gamma_stderr: float
    b_mean: float
    b_stderr: float


# --- <cos(A v^2 + B v + c)> on v in [0, 1] ---------------------------------

def _moments_exp(b: float, kmax: int) -> list[complex]:
    """m_k = int_0^1 v^k e^{i b v} dv for k = 0..kmax.

    Maclaurin series in b for small |b| (the upward recursion divides by b),
    integration-by-parts recursion otherwise.
    """
    if abs(b) <= _MOMENT_SERIES_B:
        ms = []
        for k in range(kmax + 1):
            term = complex(1.0)
            total = complex(0.0)
            j = 0
            while True:
                total += term / (k + j + 1)
                j += 1
                term *= 1j * b / j
                if abs(term) < 1e-18 and j > 2:
                    break
            ms.append(total)
        return ms
    eib = complex(math.cos(b), math.sin(b))
    ib = 1j * b
    ms = [(eib - 1.0) / ib]
    for k in range(1, kmax + 1):
        ms.append((eib - k * ms[k - 1]) / ib)
    return ms


def _avg_cos_small_a(a: float, b: float, c: float) -> float:
    """Taylor in the quadratic angle: cos(av^2+bv+c) ~ cos(bv+c) - a v^2 sin(bv+c) - ..."""
    ms = _moments_exp(b, 4)
    eic = complex(math.cos(c), math.sin(c))
    i0 = (eic * ms[0]).real
    j2 = (eic * ms[2]).imag
    i4 = (eic * ms[4]).real
    return i0 - a * j2 - 0.5 * a * a * i4


def _avg_cos_fresnel(a: float, b: float, c: float) -> float:
    """Completed-square Fresnel form, a > 0."""
    ra = math.sqrt(a)
    x0 = b / (2.0 * ra)
    x1 = ra + x0
    theta = b * b / (4.0 * a) - c
    c1, s1 = fresnel_cs(x1)
    c0, s0 = fresnel_cs(x0)
    return (math.cos(theta) * (c1 - c0) + math.sin(theta) * (s1 - s0)) / ra


def _avg_cos_norm(a: float, b: float, c: float) -> float:
    """<cos(a v^2 + b v + c)> on v in [0, 1], continuous across a -> 0."""
    if a < 0.0:
        a, b, c = -a, -b, -c
    if a < _A_SMALL:
        return _avg_cos_small_a(a, b, c)
    if b * b / (4.0 * a) > _PHASE_GUARD:
        return integrate.quad(
            lambda v: math.cos(a * v * v + b * v + c), 0.0, 1.0,
            limit=max(200, int(abs(b) / 3.0)),
        )[0]
    return _avg_cos_fresnel(a, b, c)


def _avg_cos_norm_arrays(a, b, c):
    """Vectorized _avg_cos_norm over equally shaped arrays."""
    a = np.array(a, dtype=float, copy=True)
    b = np.array(b, dtype=float, copy=True)
    c = np.broadcast_to(np.asarray(c, dtype=float), a.shape).copy()
    neg = a < 0.0
    a[neg] *= -1.0
    b[neg] *= -1.0
    c[neg] *= -1.0
    out = np.empty_like(a)

    small = a < _A_SMALL
    if small.any():
        idx = np.nonzero(small)
        for i in zip(*idx):
            out[i] = _avg_cos_small_a(a[i], b[i], c[i])

    big = ~small
    if big.any():
        ab, bb, cb = a[big], b[big], c[big]
        ra = np.sqrt(ab)
        x0 = bb / (2.0 * ra)
        x1 = ra + x0
        theta = bb * bb / (4.0 * ab) - cb
        c1, s1 = fresnel_cs(x1)
        c0, s0 = fresnel_cs(x0)
        vals = (np.cos(theta) * (c1 - c0) + np.sin(theta) * (s1 - s0)) / ra
        guarded = bb * bb / (4.0 * ab) > _PHASE_GUARD
        if guarded.any():
            gi = np.nonzero(guarded)[0]
            for i in gi:
                vals[i] = _avg_cos_norm(ab[i], bb[i], cb[i])
        out[big] = vals
    return out


def avg_cos(args: AvgArgs) -> float:
    """<cos(a g^2 + b g + c)> over g uniform on [0, g_max]; always in [-1, 1]."""
    return _avg_cos_norm(args.a * args.g_max ** 2, args.b * args.g_max, args.c)


def f_pair(args: AvgArgs) -> float:
    """Fresnel pair F[a, b, c] = <cos(ag^2 + bg + c)> + <cos(ag^2 - bg + c)>."""
    plus = avg_cos(args)
    minus = avg_cos(AvgArgs(args.a, -args.b, args.c, args.g_max))
    return plus + minus


# --- averaged u0^2, u1^2 term tables ----------------------------------------
#
# Keys:  quadratic  "2S" | "2M" | "M+S" | "M-S"
#        linear     "0" | "w-" | "w+" | "w" | "w-+w" | "w--w" | "w++w" | "w+-w"
#        constant   "0" | "d" | "2d"
# Each Fresnel entry contributes coef * F[quadratic, linear, constant]; each
# sinc entry contributes coef * sinc(linear); both averages carry a constant 1/4.

U0_SINC_TERMS = (
    (0.125, "w-+w"),
    (0.125, "w--w"),
)

U0_FRESNEL_TERMS = (
    (0.0625, "2S", "0", "0"),
    (0.0625, "2M", "0", "2d"),
    (0.0625, "2S", "w-", "0"),
    (0.0625, "2S", "w", "0"),
    (0.03125, "2S", "w-+w", "0"),
    (0.03125, "2S", "w--w", "0"),
    (-0.0625, "2M", "w-", "2d"),
    (-0.0625, "2M", "w", "2d"),
    (0.03125, "2M", "w-+w", "2d"),
    (0.03125, "2M", "w--w", "2d"),
    (0.0625, "M+S", "w--w", "d"),
    (-0.0625, "M+S", "w-+w", "d"),
    (0.0625, "M-S", "w--w", "d"),
    (-0.0625, "M-S", "w-+w", "d"),
)

U1_SINC_TERMS = (
    (0.125, "w++w"),
    (0.125, "w+-w"),
)

U1_FRESNEL_TERMS = (
    (-0.0625, "2S", "0", "0"),
    (-0.0625, "2M", "0", "2d"),
    (-0.0625, "2S", "w+", "0"),
    (-0.0625, "2S", "w", "0"),
    (-0.03125, "2S", "w++w", "0"),
    (-0.03125, "2S", "w+-w", "0"),
    (0.0625, "2M", "w+", "2d"),
    (0.0625, "2M", "w", "2d"),
    (-0.03125, "2M", "w++w", "2d"),
    (-0.03125, "2M", "w+-w", "2d"),
    (0.0625, "M+S", "w+-w", "d"),
    (-0.0625, "M+S", "w++w", "d"),
    (-0.0625, "M-S", "w+-w", "d"),
    (0.0625, "M-S", "w++w", "d"),
)


def _angle_tables(d: DimensionlessSet, taus):
    """Resolve the symbolic keys to numeric angle arrays on a tau grid."""
    taus = np.asarray(taus, dtype=float)
    dxi = d.xi_bar - d.xi_bar_prime
    s_half = d.delta_tilde * (d.xi_bar ** 2 - d.xi_bar_prime ** 2) * taus
    m_half = d.delta_tilde * (d.xi_bar ** 2 + d.xi_bar_prime ** 2) * taus
    dd = -2.0 * d.delta_tilde * taus
    w_minus = 2.0 * dxi * math.sin(d.phi) * np.ones_like(taus)
    w_plus = 2.0 * (d.xi_bar + d.xi_bar_prime) * math.sin(d.phi) * np.ones_like(taus)
    w_tau = 2.0 * dxi * np.sin(taus + d.phi)
    zero = np.zeros_like(taus)
    quad = {"2S": 2.0 * s_half, "2M": 2.0 * m_half, "M+S": m_half + s_half, "M-S": m_half - s_half}
    lin = {
        "0": zero, "w-": w_minus, "w+": w_plus, "w": w_tau,
        "w-+w": w_minus + w_tau, "w--w": w_minus - w_tau,
        "w++w": w_plus + w_tau, "w+-w": w_plus - w_tau,
    }
    const = {"0": zero, "d": dd, "2d": 2.0 * dd}
    return quad, lin, const


def _f_pair_arrays(a, b, c):
    return _avg_cos_norm_arrays(a, b, c) + _avg_cos_norm_arrays(a, -b, c)


def _u_sq_averages_grid(d: DimensionlessSet, taus):
    """(u0^2 fast, u0^2 slow, u1^2 fast, u1^2 slow) averaged over the coupling."""
    quad, lin, const = _angle_tables(d, taus)
    results = []
    for sinc_terms, fresnel_terms in (
        (U0_SINC_TERMS, U0_FRESNEL_TERMS),
        (U1_SINC_TERMS, U1_FRESNEL_TERMS),
    ):
        fast = 0.25 * np.ones_like(np.asarray(taus, dtype=float))
        for coef, key in sinc_terms:
            fast = fast + coef * sinc(lin[key])
        slow = np.zeros_like(fast)
        for coef, qk, lk, ck in fresnel_terms:
            slow = slow + coef * _f_pair_arrays(quad[qk], lin[lk], const[ck])
        results.extend((fast, slow))
    return tuple(results)


def avg_singles_phi_grid(d: DimensionlessSet, taus, e_beta: float):
    """Averaged single-spin markers on a tau grid.

    Returns (gamma_fast, gamma_slow, b_fast, b_slow) with
    <|Gamma|^2> = <u0^2> + E^2 <u1^2> and <B> = 1 - E^2 + E^2 <u0^2 + u1^2>.
    """
    u0_fast, u0_slow, u1_fast, u1_slow = _u_sq_averages_grid(d, taus)
    e2 = e_beta * e_beta
    gamma_fast = u0_fast + e2 * u1_fast
    gamma_slow = u0_slow + e2 * u1_slow
    b_fast = 1.0 - e2 + e2 * (u0_fast + u1_fast)
    b_slow = e2 * (u0_slow + u1_slow)
    return gamma_fast, gamma_slow, b_fast, b_slow


def avg_singles_phi(d: DimensionlessSet, e_beta: float) -> tuple[FastSlowSplit, FastSlowSplit]:
    """Averaged single-spin markers at d.tau as fast/slow splits."""
    gf, gs, bf, bs = avg_singles_phi_grid(d, np.array([d.tau]), e_beta)
    return (
        FastSlowSplit(fast=float(gf[0]), slow=float(gs[0])),
        FastSlowSplit(fast=float(bf[0]), slow=float(bs[0])),
    )


def asymptotic_markers(
    gamma_split: FastSlowSplit,
    b_split: FastSlowSplit,
    spec: EnsembleSpec,
) -> AsymptoticMarkers:
    """Large-time ensemble markers: fast parts raised to the fraction sizes.

    The discarded slow remainder is reported as a relative error band,
    |(fast+slow)^N - fast^N|, evaluated in log space.
    """
    def power_and_band(split: FastSlowSplit, n: int) -> tuple[float, float]:
        if split.fast <= 0.0:
            return 0.0, 0.0
        value = math.exp(n * math.log(split.fast))
        ratio = split.slow / split.fast
        if ratio <= -1.0:
            return value, value
        band = value * abs(math.expm1(n * math.log1p(ratio)))
        return value, band

    gamma_sq, gamma_band = power_and_band(gamma_split, spec.n_u)
    b, b_band = power_and_band(b_split, spec.n_mac)
    return AsymptoticMarkers(gamma_sq=gamma_sq, b=b, gamma_band=gamma_band, b_band=b_band)


def fast_extrema(d: DimensionlessSet, e_beta: float) -> tuple[float, float]:
    """Maxima over tau of the fast parts; attained where sin(tau + phi) = 0.

    max Gamma_fast = (1/4) [1 + sinc(w-) + E^2 (1 + sinc(w+))]
    max B_fast     = 1 - (E^2/4) [2 - sinc(w-) - sinc(w+)]

    with w- = 2*(xi_bar - xi_bar')*sin(phi), w+ = 2*(xi_bar + xi_bar')*sin(phi).
    Both drop below 1 for phi != 0 at any finite non-zero temperature.
    """
    w_minus = 2.0 * (d.xi_bar - d.xi_bar_prime) * math.sin(d.phi)
    w_plus = 2.0 * (d.xi_bar + d.xi_bar_prime) * math.sin(d.phi)
    e2 = e_beta * e_beta
    gamma_max = 0.25 * (1.0 + sinc(w_minus) + e2 * (1.0 + sinc(w_plus)))
    b_max = 1.0 - 0.25 * e2 * (2.0 - sinc(w_minus) - sinc(w_plus))
    return gamma_max, b_max


def small_phi_bounds(
    d: DimensionlessSet,
    spec: EnsembleSpec,
    e_beta: float,
) -> tuple[float, float]:
    """Conservative exponential bounds on the asymptotic markers for |phi| << 1.

    |Gamma|^2 <~ [(1+E^2)/2]^N_u exp[-N_u phi^2 (dxi^2 + E^2 (xi_bar+xi_bar')^2) / (12 (1+E^2))]
    B         <~ exp[-N_mac E^2 phi^2 (xi_bar^2 + xi_bar'^2) / 12]

    These upper-bound the fast-part maxima raised to the fraction sizes with a
    wide margin for |phi| <= 1; they are not tight.
    """
    e2 = e_beta * e_beta
    phi2 = d.phi * d.phi
    dxi2 = (d.xi_bar - d.xi_bar_prime) ** 2
    sum2 = (d.xi_bar + d.xi_bar_prime) ** 2
    gamma_bound = ((1.0 + e2) / 2.0) ** spec.n_u * math.exp(
        -spec.n_u * phi2 * (dxi2 + e2 * sum2) / (12.0 * (1.0 + e2))
    )
    b_bound = math.exp(-spec.n_mac * e2 * phi2 * (d.xi_bar ** 2 + d.xi_bar_prime ** 2) / 12.0)
    return gamma_bound, b_bound


# --- Monte Carlo validator ---------------------------------------------------

def _mc_draw(n_samples: int, seed: int) -> np.ndarray:
    if n_samples < 1:
        raise ValueError("monte carlo needs at least one sample")
    rng = np.random.default_rng(seed)
    return rng.random(n_samples)


def monte_carlo_average_grid(
    d: DimensionlessSet,
    taus,
    e_beta: float,
    n_samples: int,
    seed: int,
):
    """Seeded Monte Carlo estimate of the averaged single-spin markers on a tau grid.

    One uniform coupling sample of size n_samples is drawn up front and reused
    at every grid point (sampling is sequential within the single draw, so a
    fixed seed gives bit-identical results).  Returns four arrays:
    (gamma_mean, gamma_stderr, b_mean, b_stderr).
    """
    from ._backend import kernels

    v = _mc_draw(n_samples, seed)
    taus = np.asarray(taus, dtype=float)
    gm = np.empty_like(taus)
    gs = np.empty_like(taus)
    bm = np.empty_like(taus)
    bs = np.empty_like(taus)
    root_n = math.sqrt(n_samples)
    for i, tau in enumerate(taus):
        gamma, b = kernels.single_markers_batch(
            float(tau), d.phi, d.delta_tilde, v * d.xi_bar, v * d.xi_bar_prime, e_beta
        )
        gm[i] = gamma.mean()
        gs[i] = gamma.std(ddof=1) / root_n if n_samples > 1 else 0.0
        bm[i] = b.mean()
        bs[i] = b.std(ddof=1) / root_n if n_samples > 1 else 0.0
    return gm, gs, bm, bs


def monte_carlo_average(
    d: DimensionlessSet,
    e_beta: float,
    n_samples: int,
    seed: int,
) -> MonteCarloResult:
    """Monte Carlo mean and standard error of both averaged markers at d.tau."""
    gm, gs, bm, bs = monte_carlo_average_grid(d, np.array([d.tau]), e_beta, n_samples, seed)
    return MonteCarloResult(
        gamma_mean=float(gm[0]), gamma_stderr=float(gs[0]),
        b_mean=float(bm[0]), b_stderr=float(bs[0]),
    )
