"""Backend switch for the hot kernels.

Set ``MAXSUB_NUMBA=0`` in the environment to force the pure-numpy path.
The choice can also be flipped at runtime with :func:`set_backend`, which is
what the benchmark and the backend-agreement tests do.
"""

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None

_OFF = {"0", "false", "no", "off", "numpy"}
_backend = "numba" if HAVE_NUMBA and os.environ.get("MAXSUB_NUMBA", "1").lower() not in _OFF else "numpy"


def njit(fn):
    if numba is None:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)


def backend():
    return _backend


def set_backend(name):
    """Select ``"numba"`` or ``"numpy"``; returns the previous backend."""
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not importable")
    previous, _backend = _backend, name
    return previous
