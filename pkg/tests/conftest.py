import numpy as np
import pytest

from bosonspin.core import BlochVector, DimensionlessSet, RelativeUnitary


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_bloch(rng) -> BlochVector:
    """Uniform inside the Bloch ball."""
    v = rng.normal(size=3)
    v *= rng.random() ** (1.0 / 3.0) / np.linalg.norm(v)
    return BlochVector(*map(float, v))


def random_unitary(rng) -> RelativeUnitary:
    """Haar-like: uniform on the unit 3-sphere of components."""
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    return RelativeUnitary(*map(float, q))


def random_dimensionless(rng, tau_max=40.0) -> DimensionlessSet:
    return DimensionlessSet(
        xi=float(rng.uniform(-1.0, 1.0)),
        xi_prime=float(rng.uniform(-1.0, 1.0)),
        delta_tilde=float(rng.uniform(0.0, 1.0)),
        tau=float(rng.uniform(0.0, tau_max)),
        phi=float(rng.uniform(-np.pi, np.pi)),
    )
