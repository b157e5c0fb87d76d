"""Objectivity markers of a central oscillator recorded by a thermal spin bath.

The package computes the decoherence factor |Gamma|^2 and the generalized
overlap B of a driven two-level environment in the recoil-less limit, through
four mutually checking routes: the effective high-frequency propagator, exact
brute-force propagation, closed-form coupling averages built from Fresnel
integrals, and seeded Monte Carlo averaging.
"""

from ._backend import backend_name
from .averaging import (
    AsymptoticMarkers,
    AvgArgs,
    FastSlowSplit,
    MonteCarloResult,
    asymptotic_markers,
    avg_cos,
    avg_singles_phi,
    avg_singles_phi_grid,
    f_pair,
    fast_extrema,
    monte_carlo_average,
    monte_carlo_average_grid,
    small_phi_bounds,
)
from .core import (
    BlochVector,
    DimensionlessSet,
    EnsembleSpec,
    RelativeUnitary,
    SpinParams,
    TrajectoryParams,
    thermal_bloch,
    to_dimensionless,
)
from .floquet import propagator_pieces, relative_unitary, single_unitary
from .markers import (
    LengthScales,
    MarkerPoint,
    ensemble_product,
    fidelity,
    gamma_single,
    gamma_sq_single,
    gaussian_markers,
    length_scales,
    overlap_single,
    thermal_singles,
)
from .oracle import PropagationConfig, exact_markers, propagate_exact
from .special import fresnel_c, fresnel_s, sinc

__version__ = "1.0.0"

__all__ = [
    "AsymptoticMarkers", "AvgArgs", "BlochVector", "DimensionlessSet", "EnsembleSpec",
    "FastSlowSplit", "LengthScales", "MarkerPoint", "MonteCarloResult",
    "PropagationConfig", "RelativeUnitary", "SpinParams", "TrajectoryParams",
    "asymptotic_markers", "avg_cos", "avg_singles_phi", "avg_singles_phi_grid",
    "backend_name", "ensemble_product", "exact_markers", "f_pair", "fast_extrema",
    "fidelity", "fresnel_c", "fresnel_s", "gamma_single", "gamma_sq_single",
    "gaussian_markers", "length_scales", "monte_carlo_average",
    "monte_carlo_average_grid", "overlap_single", "propagate_exact",
    "propagator_pieces", "relative_unitary", "sinc", "single_unitary",
    "small_phi_bounds", "thermal_bloch", "thermal_singles", "to_dimensionless",
]
