"""Exact brute-force propagation of the driven two-level Hamiltonian.

Ground truth for the effective (high-frequency) propagator: the Hamiltonian

    H(t) = -(Delta/2) sigma_x + g X0 cos(Omega t + phi) sigma_z

is integrated by a time-ordered product of midpoint matrix exponentials, each
exact for 2x2 and hence exactly unitary.  In dimensionless form the stepping
uses H(tau) = -delta_tilde sigma_x + xi cos(tau + phi) sigma_z with the 1/2
absorbed by tau = Omega t and delta_tilde = Delta/(2 Omega).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .core import DimensionlessSet, RelativeUnitary, SpinParams, TrajectoryParams, thermal_bloch
from .floquet import matrix_from_components
from .markers import MarkerPoint, gamma_sq_single, overlap_single

__all__ = [
    "PropagationConfig",
    "propagate_exact",
    "exact_relative_grid",
    "exact_markers",
    "exact_markers_grid",
]

_MIN_STEPS = 64


@dataclass(frozen=True)
class PropagationConfig:
    """Fixed midpoint-exponential stepping; steps_per_period >= 64."""

    steps_per_period: int = 256
    tolerance: float = 1e-10

    def __post_init__(self):
        if self.steps_per_period < _MIN_STEPS:
            raise ValueError(
                f"steps_per_period must be >= {_MIN_STEPS}, got {self.steps_per_period!r}"
            )
        if self.tolerance <= 0.0:
            raise ValueError("tolerance must be positive")


def _propagate_components(xi, delta_tilde, phi, taus, cfg: PropagationConfig):
    comps, defect = kernels.propagate_bloch_grid(
        float(xi), float(delta_tilde), float(phi), np.asarray(taus, dtype=float),
        cfg.steps_per_period,
    )
    if defect > cfg.tolerance:
        raise RuntimeError(f"unitary defect {defect:.3e} exceeded tolerance {cfg.tolerance:.3e}")
    return comps


def propagate_exact(
    spin: SpinParams,
    traj: TrajectoryParams,
    t: float,
    cfg: PropagationConfig = PropagationConfig(),
    branch: str = "primary",
) -> np.ndarray:
    """Exact 2x2 propagator at lab time t for one branch amplitude of the trajectory."""
    if t < 0.0:
        raise ValueError("t must be non-negative")
    x0 = traj.x0 if branch == "primary" else traj.x0_prime
    xi = spin.g * x0 / traj.omega
    delta_tilde = spin.delta / (2.0 * traj.omega)
    comps = _propagate_components(xi, delta_tilde, traj.phi, [traj.omega * t], cfg)
    return matrix_from_components(*comps[0])


def exact_relative_grid(
    d: DimensionlessSet,
    taus,
    cfg: PropagationConfig = PropagationConfig(),
) -> np.ndarray:
    """Bloch components of the exact relative unitary U(xi')^dag U(xi) on a tau grid."""
    wa = _propagate_components(d.xi, d.delta_tilde, d.phi, taus, cfg)
    wb = _propagate_components(d.xi_prime, d.delta_tilde, d.phi, taus, cfg)
    # (b0 - i b.sigma)(a0 + i a.sigma): scalar b0*a0 + b.a, vector b0*a - a0*b + b x a
    b0, bv = wb[:, 0], wb[:, 1:]
    a0, av = wa[:, 0], wa[:, 1:]
    u0 = b0 * a0 + np.einsum("ij,ij->i", bv, av)
    uv = b0[:, None] * av - a0[:, None] * bv + np.cross(bv, av)
    return np.concatenate([u0[:, None], uv], axis=1)


def exact_markers_grid(
    d: DimensionlessSet,
    taus,
    e_beta: float,
    cfg: PropagationConfig = PropagationConfig(),
):
    """Exact (gamma_sq, b) arrays over a tau grid for the thermal state."""
    u = exact_relative_grid(d, taus, cfg)
    e2 = e_beta * e_beta
    gamma_sq = u[:, 0] ** 2 + e2 * u[:, 1] ** 2
    b = 1.0 - e2 * (u[:, 2] ** 2 + u[:, 3] ** 2)
    return gamma_sq, b


def exact_markers(
    traj: TrajectoryParams,
    spin: SpinParams,
    t: float,
    cfg: PropagationConfig = PropagationConfig(),
) -> MarkerPoint:
    """Both markers at lab time t from the exact relative unitary and the thermal state."""
    if t < 0.0:
        raise ValueError("t must be non-negative")
    d = DimensionlessSet(
        xi=spin.g * traj.x0 / traj.omega,
        xi_prime=spin.g * traj.x0_prime / traj.omega,
        delta_tilde=spin.delta / (2.0 * traj.omega),
        tau=traj.omega * t,
        phi=traj.phi,
    )
    a, _ = thermal_bloch(spin)
    comps = exact_relative_grid(d, [d.tau], cfg)[0]
    u = RelativeUnitary(*comps)
    return MarkerPoint(
        tau=d.tau,
        gamma_sq=gamma_sq_single(a, u),
        b=overlap_single(a, u),
        provenance="exact-oracle",
    )
