"""Named figure presets.

Each preset regenerates one dataset with the parameters quoted in the figure
it mirrors; several figures share a dataset and differ only in which marker
column is plotted (the renderer's concern).  All presets avoid stochastic
routes, so the CSV output is byte-reproducible.
"""

from __future__ import annotations

import math

from .scenario import Scenario

__all__ = ["FIGURE_PRESETS", "FIGURE_COLUMNS"]

_SINGLE_SPIN = dict(
    xis=(0.9, 0.6), xi_prime=0.1, delta_tilde=1.0 / 6.0, beta_delta=1.0,
    tau_start=0.0, tau_stop=25.0, points=1001, routes=("hfe",),
)

_ENSEMBLE = dict(
    xis=(0.9, 0.6), xi_prime=0.1, delta_tilde=1.0 / 6.0, beta_delta=1.0,
    n_u=20, n_mac=100, omega=3.0,
    tau_start=0.0, tau_stop=25.0, points=1001, routes=("closed-form",),
)

_PHASES = dict(
    xis=(0.9,), xi_prime=0.1, delta_tilde=1.0 / 6.0, beta_delta=1.0,
    n_u=20, n_mac=100,
    tau_start=0.0, tau_stop=60.0, points=1201, routes=("closed-form",),
)

FIGURE_PRESETS: dict[str, Scenario] = {
    # single-spin markers, cosine trajectory
    "fig1": Scenario(phis=(0.0,), **_SINGLE_SPIN),
    "fig2": Scenario(phis=(0.0,), **_SINGLE_SPIN),
    # coupling-averaged ensemble markers, cosine trajectory
    "fig3": Scenario(phis=(0.0,), **_ENSEMBLE),
    "fig4": Scenario(phis=(0.0,), **_ENSEMBLE),
    # single-spin markers, quarter-phase trajectory
    "fig5": Scenario(phis=(math.pi / 2,), **_SINGLE_SPIN),
    "fig6": Scenario(phis=(math.pi / 2,), **_SINGLE_SPIN),
    # ensemble markers for several phases
    "fig7": Scenario(phis=(math.pi / 10, math.pi / 4, math.pi / 2), **_PHASES),
    "fig8": Scenario(phis=(math.pi / 10, math.pi / 4, math.pi / 2), **_PHASES),
}

# marker column each figure plots
FIGURE_COLUMNS: dict[str, str] = {
    "fig1": "gammaSq",
    "fig2": "b",
    "fig3": "b",
    "fig4": "gammaSq",
    "fig5": "gammaSq",
    "fig6": "b",
    "fig7": "gammaSq",
    "fig8": "b",
}
