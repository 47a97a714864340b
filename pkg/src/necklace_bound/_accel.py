"""JIT selection for the numeric kernels.

Set ``NECKLACE_BOUND_DISABLE_JIT=1`` to run kernels as plain Python over numpy
arrays.  Without numba installed the fallback is used automatically.
"""

from __future__ import annotations

import os

_FLAG = "NECKLACE_BOUND_DISABLE_JIT"


def _disabled() -> bool:
    return os.environ.get(_FLAG, "").strip().lower() not in ("", "0", "false", "no")


try:
    if _disabled():
        raise ImportError
    from numba import njit as _njit

    JIT_ENABLED = True
except ImportError:
    _njit = None
    JIT_ENABLED = False


def njit(func):
    """``numba.njit(cache=True)`` when enabled, identity otherwise.

    The undecorated function stays reachable as ``.py_func`` in both modes.
    """
    if _njit is None:
        func.py_func = func
        return func
    return _njit(cache=True)(func)
