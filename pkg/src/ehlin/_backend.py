"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python module
is the fallback.  Set EHLIN_PURE_PYTHON=1 to force the fallback (used by the
parity tests and the benchmark).
"""

import os

from . import _kernels_py

if os.environ.get("EHLIN_PURE_PYTHON", "").strip() in ("1", "true", "yes"):
    kernels = _kernels_py
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore
    except ImportError:
        kernels = _kernels_py


def backend_name():
    """Name of the active kernel backend: 'cython' or 'python'."""
    return kernels.BACKEND_NAME
