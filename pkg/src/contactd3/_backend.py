"""Kernel selection.

The compiled ``_kernels`` module is used when it imports and the
``CONTACTD3_PURE_PYTHON`` environment variable is unset. Compiled calls that
overflow 64-bit words are retried with the pure-Python kernels.
"""

import os

from . import _kernels_py

BACKEND = "python"
int_inertia = _kernels_py.int_inertia
int_det = _kernels_py.int_det

if not os.environ.get("CONTACTD3_PURE_PYTHON"):
    try:
        from . import _kernels
    except ImportError:  # extension not built
        _kernels = None

    if _kernels is not None:
        BACKEND = "compiled"

        def int_inertia(rows):
            try:
                return _kernels.int_inertia(rows)
            except OverflowError:
                return _kernels_py.int_inertia(rows)

        def int_det(rows):
            try:
                return _kernels.int_det(rows)
            except OverflowError:
                return _kernels_py.int_det(rows)
