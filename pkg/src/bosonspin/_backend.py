"""Backend selection: compiled kernels when built, numpy fallback otherwise.

Set BOSONSPIN_BACKEND=python to force the fallback (used by the benchmark and
the backend-parity tests).
"""

from __future__ import annotations

import os

if os.environ.get("BOSONSPIN_BACKEND", "").lower() == "python":
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels


def backend_name() -> str:
    """Either "compiled" or "python"."""
    return kernels.BACKEND
