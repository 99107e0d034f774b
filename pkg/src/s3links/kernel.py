"""Backend selection for the coloring search.

The compiled extension is used when it imports; otherwise the pure-Python
kernel.  Set ``S3LINKS_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernel_py

propagate = _kernel_py.propagate

if os.environ.get("S3LINKS_PURE_PYTHON", "") not in ("", "0"):
    enumerate_colorings = _kernel_py.enumerate_colorings
    BACKEND = "python"
else:
    try:
        from ._ckernel import enumerate_colorings
        BACKEND = "cython"
    except ImportError:
        enumerate_colorings = _kernel_py.enumerate_colorings
        BACKEND = "python"

__all__ = ["enumerate_colorings", "propagate", "BACKEND"]
