"""Optional numba acceleration.

Set ``MATCHFIELD_DISABLE_JIT=1`` to run the pure numpy kernels instead of the
compiled ones, and ``MATCHFIELD_THREADS`` to cap numba's thread pool.
"""
from __future__ import annotations

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def jit_disabled() -> bool:
    return os.environ.get("MATCHFIELD_DISABLE_JIT", "").strip().lower() not in ("", "0", "false", "no")


def backend() -> str:
    """Name of the kernel backend selected by the environment."""
    return "numpy" if numba is None or jit_disabled() else "numba"


def njit(*args, **kwargs):
    """``numba.njit`` when numba is importable, otherwise a no-op decorator."""
    if numba is None:
        if args and callable(args[0]):
            return args[0]
        return lambda f: f
    return numba.njit(*args, **kwargs)


prange = range if numba is None else numba.prange


def configure_threads() -> int | None:
    value = os.environ.get("MATCHFIELD_THREADS")
    if numba is None or not value:
        return None
    n = max(1, min(int(value), numba.config.NUMBA_NUM_THREADS))
    numba.set_num_threads(n)
    return n
