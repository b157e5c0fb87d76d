"""Parameter types, Bloch-vector containers and unit conversions.

Everything downstream works in the dimensionless variables

    xi = g * X0 / Omega        (drive amplitude seen by one spin)
    delta_tilde = Delta / (2 * Omega)
    tau = Omega * t

so the lab-frame types exist mainly to validate inputs and to convert.
All types are immutable; all functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

__all__ = [
    "TrajectoryParams",
    "SpinParams",
    "DimensionlessSet",
    "BlochVector",
    "RelativeUnitary",
    "EnsembleSpec",
    "normalize_phase",
    "to_dimensionless",
    "thermal_bloch",
]

_UNITARY_TOL = 1e-9


def _require_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")


def normalize_phase(phi: float) -> float:
    """Reduce a phase to [-pi, pi]; every formula depends on sin(phi) and sin(tau+phi) only."""
    phi = math.remainder(phi, 2.0 * math.pi)
    # remainder() returns values in [-pi, pi]; pin the branch cut to +pi -> -pi symmetry
    if phi == -math.pi:
        phi = math.pi
    return phi


@dataclass(frozen=True)
class TrajectoryParams:
    """Classical drive X(t) = X0 * cos(Omega*t + phi) for the two branch amplitudes."""

    x0: float
    x0_prime: float
    omega: float
    phi: float = 0.0

    def __post_init__(self):
        _require_finite(x0=self.x0, x0_prime=self.x0_prime, omega=self.omega, phi=self.phi)
        if self.omega <= 0.0:
            raise ValueError(f"omega must be positive, got {self.omega!r}")
        object.__setattr__(self, "phi", normalize_phase(self.phi))


@dataclass(frozen=True)
class SpinParams:
    """One bath spin: coupling g, tunneling energy Delta, inverse temperature beta."""

    g: float
    delta: float
    beta: float

    def __post_init__(self):
        _require_finite(g=self.g, delta=self.delta, beta=self.beta)
        if self.delta < 0.0:
            raise ValueError(f"delta must be non-negative, got {self.delta!r}")
        if self.beta < 0.0:
            raise ValueError(f"beta must be non-negative, got {self.beta!r}")


@dataclass(frozen=True)
class DimensionlessSet:
    """Working variables for one spin (xi, xi_prime) plus the ensemble cutoffs (xi_bar, xi_bar_prime).

    For a coupling cut off at g_max the cutoffs are xi_bar = g_max*X0/Omega; for a
    single fixed coupling they coincide with xi, xi_prime.
    """

    xi: float
    xi_prime: float
    delta_tilde: float
    tau: float
    phi: float = 0.0
    xi_bar: float | None = None
    xi_bar_prime: float | None = None

    def __post_init__(self):
        _require_finite(
            xi=self.xi, xi_prime=self.xi_prime, delta_tilde=self.delta_tilde,
            tau=self.tau, phi=self.phi,
        )
        if self.tau < 0.0:
            raise ValueError(f"tau must be non-negative, got {self.tau!r}")
        object.__setattr__(self, "phi", normalize_phase(self.phi))
        if self.xi_bar is None:
            object.__setattr__(self, "xi_bar", self.xi)
        if self.xi_bar_prime is None:
            object.__setattr__(self, "xi_bar_prime", self.xi_prime)
        _require_finite(xi_bar=self.xi_bar, xi_bar_prime=self.xi_bar_prime)

    @property
    def hfe_valid(self) -> bool:
        """Advisory convergence flag: the expansion is controlled for |xi|, delta_tilde < 1."""
        return (
            abs(self.xi) < 1.0
            and abs(self.xi_prime) < 1.0
            and self.delta_tilde < 1.0
        )

    def at_tau(self, tau: float) -> "DimensionlessSet":
        return replace(self, tau=tau)


@dataclass(frozen=True)
class BlochVector:
    """Bloch vector of a qubit density matrix, |a| <= 1."""

    a1: float
    a2: float
    a3: float

    def __post_init__(self):
        _require_finite(a1=self.a1, a2=self.a2, a3=self.a3)
        if self.norm_sq > 1.0 + 1e-12:
            raise ValueError(f"Bloch vector norm {math.sqrt(self.norm_sq)!r} exceeds 1")

    @property
    def norm_sq(self) -> float:
        return self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3


@dataclass(frozen=True)
class RelativeUnitary:
    """Bloch decomposition u0 + i*(u1 sx + u2 sy + u3 sz) of the relative evolution operator."""

    u0: float
    u1: float
    u2: float
    u3: float

    def __post_init__(self):
        _require_finite(u0=self.u0, u1=self.u1, u2=self.u2, u3=self.u3)
        if abs(self.norm_sq - 1.0) > _UNITARY_TOL:
            raise ValueError(f"u0^2 + |u|^2 = {self.norm_sq!r} is not 1 (unitarity)")

    @property
    def norm_sq(self) -> float:
        return self.u0 ** 2 + self.u1 ** 2 + self.u2 ** 2 + self.u3 ** 2

    def inverse(self) -> "RelativeUnitary":
        return RelativeUnitary(self.u0, -self.u1, -self.u2, -self.u3)


@dataclass(frozen=True)
class EnsembleSpec:
    """Environment fractions: unobserved size n_u, macrofraction size n_mac, couplings
    uniform on [0, g_max], shared tunneling energy delta and inverse temperature beta."""

    n_u: int
    n_mac: int
    g_max: float
    delta: float
    beta: float

    def __post_init__(self):
        if self.n_u < 1:
            raise ValueError(f"n_u must be >= 1, got {self.n_u!r}")
        if self.n_mac < 1:
            raise ValueError(f"n_mac must be >= 1, got {self.n_mac!r}")
        _require_finite(g_max=self.g_max, delta=self.delta, beta=self.beta)
        if self.g_max <= 0.0:
            raise ValueError(f"g_max must be positive, got {self.g_max!r}")
        if self.delta < 0.0 or self.beta < 0.0:
            raise ValueError("delta and beta must be non-negative")

    @property
    def g_sq_mean(self) -> float:
        """<g^2> = g_max^2 / 3 for the uniform coupling distribution."""
        return self.g_max ** 2 / 3.0


def to_dimensionless(
    traj: TrajectoryParams,
    spin: SpinParams,
    t: float,
    g_max: float | None = None,
) -> DimensionlessSet:
    """Map lab-frame parameters to the dimensionless set at time t.

    xi = g*X0/Omega, xi' = g*X0'/Omega, delta_tilde = Delta/(2*Omega), tau = Omega*t.
    When g_max is given, the ensemble cutoffs xi_bar = g_max*X0/Omega are filled in
    as well; otherwise they default to xi, xi'.
    """
    _require_finite(t=t)
    if g_max is not None:
        _require_finite(g_max=g_max)
    return DimensionlessSet(
        xi=spin.g * traj.x0 / traj.omega,
        xi_prime=spin.g * traj.x0_prime / traj.omega,
        delta_tilde=spin.delta / (2.0 * traj.omega),
        tau=traj.omega * t,
        phi=traj.phi,
        xi_bar=None if g_max is None else g_max * traj.x0 / traj.omega,
        xi_bar_prime=None if g_max is None else g_max * traj.x0_prime / traj.omega,
    )


def thermal_energy(beta_delta: float) -> float:
    """E(beta) = tanh(beta*Delta/2), the rescaled average thermal energy."""
    return math.tanh(0.5 * beta_delta)


def thermal_bloch(spin: SpinParams) -> tuple[BlochVector, float]:
    """Bloch vector (E(beta), 0, 0) of the thermal spin state, plus E(beta) itself."""
    e_beta = thermal_energy(spin.beta * spin.delta)
    return BlochVector(e_beta, 0.0, 0.0), e_beta
