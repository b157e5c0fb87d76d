"""Objectivity markers: decoherence factor and generalized overlap.

For a qubit with initial Bloch vector a and relative evolution
U = u0 + i*u.sigma the markers have closed Bloch forms:

    Gamma   = u0 + i a.u            (decoherence factor)
    |Gamma|^2 = u0^2 + (a.u)^2
    B       = 1 - |a x u|^2         (generalized overlap, squared-fidelity convention)

and satisfy the complementarity identity

    B - |Gamma|^2 = (1 - |a|^2) * (1 - u0^2).

B follows the squared convention throughout; the conventional fidelity is
available as fidelity() = sqrt(B).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

import numpy as np

from . import floquet
from .core import BlochVector, DimensionlessSet, EnsembleSpec, RelativeUnitary, thermal_energy

__all__ = [
    "MarkerPoint",
    "LengthScales",
    "PROVENANCES",
    "gamma_single",
    "gamma_sq_single",
    "overlap_single",
    "fidelity",
    "complementarity_defect",
    "thermal_singles",
    "thermal_singles_grid",
    "ensemble_product",
    "gaussian_markers",
    "gaussian_exponent_factor",
    "length_scales",
]

PROVENANCES = ("exact-oracle", "hfe", "closed-form-average", "monte-carlo", "gaussian-approx")

_RANGE_TOL = 1e-9
_VALIDITY_SLOW_PHASE = 0.3


@dataclass(frozen=True)
class MarkerPoint:
    """Both markers at one dimensionless time, tagged with how they were computed."""

    tau: float
    gamma_sq: float
    b: float
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        for name, value in (("gamma_sq", self.gamma_sq), ("b", self.b)):
            if not -_RANGE_TOL <= value <= 1.0 + _RANGE_TOL:
                raise ValueError(f"{name} = {value!r} outside [0, 1]")


@dataclass(frozen=True)
class LengthScales:
    """Position resolutions for decohering the oscillator and for reading it out."""

    lambda_dec: float
    lambda_dist: float


def gamma_single(a: BlochVector, u: RelativeUnitary) -> complex:
    """Decoherence factor Gamma = u0 + i a.u of one spin."""
    return complex(u.u0, a.a1 * u.u1 + a.a2 * u.u2 + a.a3 * u.u3)


def gamma_sq_single(a: BlochVector, u: RelativeUnitary) -> float:
    """|Gamma|^2 = u0^2 + (a.u)^2."""
    adotu = a.a1 * u.u1 + a.a2 * u.u2 + a.a3 * u.u3
    return u.u0 ** 2 + adotu ** 2


def overlap_single(a: BlochVector, u: RelativeUnitary) -> float:
    """Generalized overlap B = 1 - |a x u|^2 of one spin (squared-fidelity convention)."""
    cx = a.a2 * u.u3 - a.a3 * u.u2
    cy = a.a3 * u.u1 - a.a1 * u.u3
    cz = a.a1 * u.u2 - a.a2 * u.u1
    return 1.0 - (cx * cx + cy * cy + cz * cz)


def fidelity(a: BlochVector, u: RelativeUnitary) -> float:
    """Conventional (unsquared) fidelity, sqrt of the generalized overlap."""
    return math.sqrt(max(overlap_single(a, u), 0.0))


def complementarity_defect(a: BlochVector, u: RelativeUnitary) -> float:
    """B - |Gamma|^2 - (1 - |a|^2)(1 - u0^2); identically zero up to rounding."""
    return (
        overlap_single(a, u)
        - gamma_sq_single(a, u)
        - (1.0 - a.norm_sq) * (1.0 - u.u0 ** 2)
    )


def thermal_singles(d: DimensionlessSet, e_beta: float) -> tuple[float, float]:
    """Single-spin (|Gamma|^2, B) for the thermal state a = (E(beta), 0, 0).

    phi = 0 uses the dedicated closed forms

        |Gamma|^2 = [1 - sin^2(dt*(xi^2-xi'^2)*tau)/cosh^2(beta*Delta/2)] cos^2(dxi sin tau)
        B         = 1 - E^2 sin^2(dxi sin tau)

    while a general phase routes through the relative unitary and the Bloch
    formulas; the two agree to rounding where both apply.
    """
    if d.phi == 0.0:
        dxi = d.xi - d.xi_prime
        fast = math.cos(dxi * math.sin(d.tau)) ** 2
        slow = math.sin(d.delta_tilde * (d.xi ** 2 - d.xi_prime ** 2) * d.tau) ** 2
        e2 = e_beta * e_beta
        gamma_sq = (1.0 - (1.0 - e2) * slow) * fast
        b = 1.0 - e2 * math.sin(dxi * math.sin(d.tau)) ** 2
        return gamma_sq, b
    a = BlochVector(e_beta, 0.0, 0.0)
    u = floquet.relative_unitary(d)
    return gamma_sq_single(a, u), overlap_single(a, u)


def thermal_singles_grid(d: DimensionlessSet, taus, e_beta: float):
    """Vectorized thermal_singles over a tau grid; returns (gamma_sq, b) arrays."""
    u0, u1, u2, u3 = floquet.relative_components(d.xi, d.xi_prime, d.delta_tilde, taus, d.phi)
    e2 = e_beta * e_beta
    gamma_sq = u0 ** 2 + e2 * u1 ** 2
    b = 1.0 - e2 * (u2 ** 2 + u3 ** 2)
    return gamma_sq, b


def ensemble_product(
    samples: Sequence[DimensionlessSet] | Iterable[DimensionlessSet],
    e_beta: float,
    which: Literal["gamma", "b"] = "gamma",
) -> float:
    """Product of single-spin marker values over an explicit spin list.

    Accumulated as a sum of logs so products over thousands of spins cannot
    underflow; the summation order is the list order.
    """
    samples = list(samples)
    if not samples:
        raise ValueError("ensemble_product of an empty spin list is undefined")
    if which not in ("gamma", "b"):
        raise ValueError(f"which must be 'gamma' or 'b', got {which!r}")
    log_total = 0.0
    for d in samples:
        gamma_sq, b = thermal_singles(d, e_beta)
        value = gamma_sq if which == "gamma" else b
        if value <= 0.0:
            return 0.0
        log_total += math.log(value)
    return math.exp(log_total)


def gaussian_exponent_factor(d: DimensionlessSet, tau=None):
    """Time profile |sin(phi) - e^(2i*dt*tau) sin(tau+phi)|^2 of the small-amplitude laws.

    Expands to sin^2(phi) + sin^2(tau+phi) - 2 sin(phi) sin(tau+phi) cos(2*dt*tau)
    and reduces to sin^2(tau) for phi = 0.
    """
    t = d.tau if tau is None else np.asarray(tau, dtype=float)
    sphi = np.sin(d.phi)
    stp = np.sin(t + d.phi)
    return sphi ** 2 + stp ** 2 - 2.0 * sphi * stp * np.cos(2.0 * d.delta_tilde * t)


def gaussian_markers(
    d: DimensionlessSet,
    n_u: int,
    n_mac: int,
    e_beta: float,
    warn: bool = True,
) -> tuple[float, float]:
    """Small-amplitude Gaussian laws for the ensemble markers.

    Uses the uniform-coupling second moment <dxi^2> = (xi_bar - xi_bar')^2 / 3:

        |Gamma|^2 = exp[-N_u  <dxi^2> P(tau)]
        B         = exp[-N_mac E^2 <dxi^2> P(tau)]

    with P the gaussian_exponent_factor.  Valid while the slow phase
    delta_tilde*(xi_bar^2 - xi_bar'^2)*tau stays small; a warning is issued
    outside that window.
    """
    slow_phase = abs(d.delta_tilde * (d.xi_bar ** 2 - d.xi_bar_prime ** 2) * d.tau)
    if warn and slow_phase > _VALIDITY_SLOW_PHASE:
        warnings.warn(
            f"gaussian_markers outside its validity window: slow phase {slow_phase:.3g} "
            f"exceeds {_VALIDITY_SLOW_PHASE}",
            stacklevel=2,
        )
    dxi_sq = (d.xi_bar - d.xi_bar_prime) ** 2 / 3.0
    profile = float(gaussian_exponent_factor(d))
    gamma_sq = math.exp(-n_u * dxi_sq * profile)
    b = math.exp(-n_mac * e_beta * e_beta * dxi_sq * profile)
    return gamma_sq, b


def length_scales(spec: EnsembleSpec, omega: float) -> LengthScales:
    """Decoherence and distinguishability length scales of the two fractions.

    lambda_dec = Omega / sqrt(N_u <g^2>), lambda_dist picks up the extra
    1/E(beta) from the thermal record quality; beta = 0 gives an infinite
    distinguishability length (a maximally mixed bath records nothing).
    """
    if omega <= 0.0 or not math.isfinite(omega):
        raise ValueError(f"omega must be positive and finite, got {omega!r}")
    g_sq = spec.g_sq_mean
    lambda_dec = omega / math.sqrt(spec.n_u * g_sq)
    e_beta = thermal_energy(spec.beta * spec.delta)
    if e_beta == 0.0:
        lambda_dist = math.inf
    else:
        lambda_dist = omega / math.sqrt(spec.n_mac * g_sq * e_beta * e_beta)
    return LengthScales(lambda_dec=lambda_dec, lambda_dist=lambda_dist)
