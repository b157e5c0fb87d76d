"""Lowest-order high-frequency propagator pieces and the relative unitary.

The effective single-spin evolution is the standard factorization

    U(tau) = exp(-i K(tau)) exp(-i tau H_F) exp(+i K(0))

with the kick K(tau) = xi * sin(tau + phi) * sigma_z and the slow generator
tau*H_F = -delta_tilde*(1 - xi^2)*tau * sigma_x, truncated at the lowest
non-vanishing order.  The relative unitary of two branch amplitudes is
U(xi')^dag U(xi); its Bloch components have a closed form that the test suite
checks against the explicit matrix product over a dense parameter grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DimensionlessSet, RelativeUnitary

__all__ = [
    "PropagatorPieces",
    "propagator_pieces",
    "single_unitary",
    "relative_unitary",
    "relative_components",
    "matrix_from_components",
    "components_from_matrix",
]

_SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_I2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class PropagatorPieces:
    """The three rotation angles that assemble one branch's effective propagator."""

    slow_angle: float          # delta_tilde*(1 - xi^2)*tau, about sigma_x
    kick_angle: float          # xi*sin(tau + phi), about sigma_z, at time tau
    kick_angle_initial: float  # xi*sin(phi), the initial kick; zero when phi = 0


def propagator_pieces(d: DimensionlessSet, xi: float | None = None) -> PropagatorPieces:
    """Angles for the branch with amplitude xi (default d.xi)."""
    x = d.xi if xi is None else xi
    return PropagatorPieces(
        slow_angle=d.delta_tilde * (1.0 - x * x) * d.tau,
        kick_angle=x * math.sin(d.tau + d.phi),
        kick_angle_initial=x * math.sin(d.phi),
    )


def single_unitary(d: DimensionlessSet, xi: float | None = None) -> np.ndarray:
    """2x2 effective propagator for one branch, as the explicit three-factor product."""
    p = propagator_pieces(d, xi)
    kick = math.cos(p.kick_angle) * _I2 - 1j * math.sin(p.kick_angle) * _SZ
    slow = math.cos(p.slow_angle) * _I2 + 1j * math.sin(p.slow_angle) * _SX
    kick0 = math.cos(p.kick_angle_initial) * _I2 + 1j * math.sin(p.kick_angle_initial) * _SZ
    return kick @ slow @ kick0


def relative_components(xi, xi_prime, delta_tilde, tau, phi):
    """Bloch components (u0, u1, u2, u3) of U(xi')^dag U(xi); numpy-broadcastable.

    Closed form of the triple-factor product.  The slow phases are
    delta_tilde*(xi^2 - xi'^2)*tau and delta_tilde*(xi^2 + xi'^2 - 2)*tau; the
    fast angles are delta_xi*sin(phi), delta_xi*sin(tau+phi) and
    (xi+xi')*sin(phi) from the initial kicks.
    """
    xi = np.asarray(xi, dtype=float)
    xi_prime = np.asarray(xi_prime, dtype=float)
    tau = np.asarray(tau, dtype=float)
    dxi = xi - xi_prime
    slow_minus = delta_tilde * (xi ** 2 - xi_prime ** 2) * tau
    slow_plus = delta_tilde * (xi ** 2 + xi_prime ** 2 - 2.0) * tau
    k0 = dxi * np.sin(phi)
    kt = dxi * np.sin(tau + phi)
    k0_sum = (xi + xi_prime) * np.sin(phi)
    u0 = np.cos(k0) * np.cos(slow_minus) * np.cos(kt) + np.sin(k0) * np.cos(slow_plus) * np.sin(kt)
    u1 = -np.cos(k0_sum) * np.sin(slow_minus) * np.cos(kt) + np.sin(k0_sum) * np.sin(slow_plus) * np.sin(kt)
    u2 = -np.sin(k0_sum) * np.sin(slow_minus) * np.cos(kt) - np.cos(k0_sum) * np.sin(slow_plus) * np.sin(kt)
    u3 = np.sin(k0) * np.cos(slow_minus) * np.cos(kt) - np.cos(k0) * np.cos(slow_plus) * np.sin(kt)
    return u0, u1, u2, u3


def relative_unitary(d: DimensionlessSet) -> RelativeUnitary:
    """Relative evolution operator between the two branch amplitudes of d."""
    u0, u1, u2, u3 = relative_components(d.xi, d.xi_prime, d.delta_tilde, d.tau, d.phi)
    return RelativeUnitary(float(u0), float(u1), float(u2), float(u3))


def matrix_from_components(u0: float, u1: float, u2: float, u3: float) -> np.ndarray:
    """2x2 matrix u0 + i*(u1 sx + u2 sy + u3 sz)."""
    return np.array(
        [[u0 + 1j * u3, u2 + 1j * u1],
         [-u2 + 1j * u1, u0 - 1j * u3]],
        dtype=complex,
    )


def components_from_matrix(u: np.ndarray) -> tuple[float, float, float, float]:
    """Inverse of matrix_from_components; exact for SU(2) matrices."""
    u0 = 0.5 * (u[0, 0] + u[1, 1]).real
    u1 = 0.5 * (u[0, 1] + u[1, 0]).imag
    u2 = 0.5 * (u[0, 1] - u[1, 0]).real
    u3 = 0.5 * (u[0, 0] - u[1, 1]).imag
    return u0, u1, u2, u3
