"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
reference kernels.  MONOCOMP_PURE=1 forces the fallback (used by the parity
tests and the benchmark).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("MONOCOMP_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _fastkern as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND_NAME: str = _impl.BACKEND_NAME

mc_min_max = _impl.mc_min_max
best_cross_pair = _impl.best_cross_pair


def backends_available():
    """Names of the kernel implementations importable right now."""
    names = ["python"]
    try:
        from . import _fastkern  # noqa: F401

        names.append("c")
    except ImportError:
        pass
    return names
