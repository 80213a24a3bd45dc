"""Kernel backend selection.

The compiled backend is used when it was built and the graph has at most 64
vertices.  Setting ``RAAGTOOLS_PURE=1`` forces the pure-Python backend.
"""

import os

from . import _pykernels

try:
    if os.environ.get("RAAGTOOLS_PURE", "") not in ("", "0"):
        raise ImportError("pure backend requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "compiled" if _ckernels is not None else "python"


def for_graph(num_vertices: int):
    if _ckernels is not None and num_vertices <= 64:
        return _ckernels
    return _pykernels
