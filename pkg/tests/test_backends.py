import importlib.util
import math

import numpy as np
import pytest

from bosonspin import _kernels_py

compiled = pytest.importorskip("bosonspin._kernels", reason="compiled kernels not built")


def test_backend_names():
    assert _kernels_py.BACKEND == "python"
    assert compiled.BACKEND == "compiled"


def test_fresnel_parity(rng):
    x = np.concatenate([rng.uniform(-1000, 1000, 5000), [0.0, 3.0, -3.0, 2.999999]])
    c_ref, s_ref = _kernels_py.fresnel_cs(x)
    c_got, s_got = compiled.fresnel_cs(x)
    np.testing.assert_allclose(c_got, c_ref, atol=1e-14)
    np.testing.assert_allclose(s_got, s_ref, atol=1e-14)
    # scalar path
    assert compiled.fresnel_cs(1.25) == pytest.approx(_kernels_py.fresnel_cs(1.25), abs=1e-15)


def test_single_markers_parity(rng):
    v = rng.random(20000)
    args = (7.31, math.pi / 4, 1.0 / 6.0, 0.9 * v, 0.1 * v, math.tanh(0.5))
    g_ref, b_ref = _kernels_py.single_markers_batch(*args)
    g_got, b_got = compiled.single_markers_batch(*args)
    np.testing.assert_allclose(g_got, g_ref, atol=1e-14)
    np.testing.assert_allclose(b_got, b_ref, atol=1e-14)


def test_propagator_parity():
    taus = np.linspace(0.0, 40.0, 200)
    ref, ref_defect = _kernels_py.propagate_bloch_grid(0.8, 0.25, 0.4, taus, 256)
    got, got_defect = compiled.propagate_bloch_grid(0.8, 0.25, 0.4, taus, 256)
    np.testing.assert_allclose(got, ref, atol=1e-12)
    assert ref_defect < 1e-12 and got_defect < 1e-12
