"""Select the compiled kernels when available, else the pure-Python ones.

Set ``MINKOWSKI_BALLS_PURE=1`` to force the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("MINKOWSKI_BALLS_PURE") == "1":
    kernels = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels
        BACKEND = "cython"
    except ImportError:
        kernels = _kernels_py
        BACKEND = "python"

min_lattice_norm = kernels.min_lattice_norm
hexagon_grid_max = kernels.hexagon_grid_max
count_level_set = kernels.count_level_set
