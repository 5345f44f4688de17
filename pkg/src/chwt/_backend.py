"""Kernel backend selection.

Numba kernels are used when numba imports cleanly, unless the environment
variable ``CHWT_DISABLE_NUMBA`` is set to a truthy value, in which case the
pure-numpy kernels are used.  The choice is made once, at import time.
"""
import os

from . import _kernels_numpy

_FLAG = os.environ.get("CHWT_DISABLE_NUMBA", "").strip().lower()
DISABLE_NUMBA = _FLAG not in ("", "0", "false", "no")

numba_kernels = None
if not DISABLE_NUMBA:
    try:
        from . import _kernels_numba as numba_kernels
    except ImportError:  # pragma: no cover - numba is a declared dependency
        numba_kernels = None

numpy_kernels = _kernels_numpy
kernels = numba_kernels if numba_kernels is not None else numpy_kernels
BACKEND = kernels.NAME
