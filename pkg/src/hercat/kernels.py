"""Backend selection for the exact elimination kernel.

The compiled extension is used when it has been built; otherwise, or when
the ``HERCAT_PURE_PYTHON`` environment variable is set to a non-empty value,
the pure-Python implementation is used. Both return identical results.
"""

import os

from hercat import _kernels_py

if os.environ.get("HERCAT_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from hercat import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

if _compiled is not None:
    echelon = _compiled.echelon
    BACKEND = "cython"
else:
    echelon = _kernels_py.echelon
    BACKEND = "python"

echelon_py = _kernels_py.echelon

__all__ = ["BACKEND", "echelon", "echelon_py"]
