"""Special functions used by the coupling averages: sinc and Fresnel integrals.

Conventions (these differ from scipy's normalized ones):

    C(x) = int_0^x cos(u^2) du,   S(x) = int_0^x sin(u^2) du
    C(x) -> sqrt(pi/8) as x -> +inf,  and both are odd
    sinc(x) = sin(x)/x with sinc(0) = 1  (NOT the normalized sin(pi x)/(pi x))

To convert to the normalized convention Cn(z) = int_0^z cos(pi t^2/2) dt use
C(x) = sqrt(pi/2) * Cn(x * sqrt(2/pi)).
"""

from __future__ import annotations

import math

import numpy as np

from ._backend import kernels

__all__ = ["fresnel_c", "fresnel_s", "fresnel_cs", "sinc", "SQRT_PI_8"]

SQRT_PI_8 = math.sqrt(math.pi / 8.0)


def fresnel_cs(x):
    """Both Fresnel integrals at once; scalar in, scalar out (arrays likewise)."""
    return kernels.fresnel_cs(x)


def fresnel_c(x):
    """Un-normalized cosine Fresnel integral C(x), absolute error below 1e-9 for |x| <= 1e3."""
    return kernels.fresnel_cs(x)[0]


def fresnel_s(x):
    """Un-normalized sine Fresnel integral S(x)."""
    return kernels.fresnel_cs(x)[1]


def sinc(x):
    """sin(x)/x with the removable singularity filled in."""
    if np.ndim(x) == 0:
        return float(np.sinc(x / np.pi))
    return np.sinc(np.asarray(x, dtype=float) / np.pi)
