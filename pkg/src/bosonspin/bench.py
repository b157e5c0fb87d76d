"""Benchmark the compiled kernels against the numpy fallback.

    python -m bosonspin.bench [--quick]

Times the three hot kernels on representative workloads and prints one line
per (kernel, backend) plus the speedup.  Runs whatever backends are importable;
if the extension was not built only the fallback is reported.
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np


def _load_backends():
    backends = {}
    from . import _kernels_py

    backends["python"] = _kernels_py
    try:
        from . import _kernels  # type: ignore[attr-defined]

        backends["compiled"] = _kernels
    except ImportError:
        pass
    return backends


def _time(fn, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args(argv)

    n_fresnel = 200_000 if args.quick else 2_000_000
    n_mc = 200_000 if args.quick else 2_000_000
    n_steps_tau = 200.0 * math.pi if args.quick else 2000.0 * math.pi
    repeats = 3

    rng = np.random.default_rng(0)
    x = rng.uniform(-80.0, 80.0, n_fresnel)
    v = rng.random(n_mc)
    taus = np.linspace(0.0, n_steps_tau, 200)

    workloads = {
        "fresnel_cs": lambda k: k.fresnel_cs(x),
        "single_markers_batch": lambda k: k.single_markers_batch(
            7.3, math.pi / 4, 1.0 / 6.0, 0.9 * v, 0.1 * v, math.tanh(0.5)
        ),
        "propagate_bloch_grid": lambda k: k.propagate_bloch_grid(
            0.9, 1.0 / 6.0, 0.0, taus, 256
        ),
    }

    backends = _load_backends()
    print(f"backends available: {', '.join(backends)}")
    for name, run in workloads.items():
        times = {}
        for backend_name, module in backends.items():
            times[backend_name] = _time(lambda: run(module), repeats)
        line = f"{name:22s} " + "  ".join(
            f"{b}: {t * 1e3:9.2f} ms" for b, t in times.items()
        )
        if len(times) == 2:
            line += f"  speedup: x{times['python'] / times['compiled']:.2f}"
        print(line)

    # parity spot check so the benchmark doubles as a smoke test
    if len(backends) == 2:
        ref_c, ref_s = backends["python"].fresnel_cs(x[:2000])
        got_c, got_s = backends["compiled"].fresnel_cs(x[:2000])
        worst = max(np.abs(ref_c - got_c).max(), np.abs(ref_s - got_s).max())
        print(f"fresnel parity (first 2000 args): max |diff| = {worst:.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
