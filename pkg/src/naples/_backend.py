"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
kernels take over.  ``NAPLES_BACKEND=python`` forces the fallback.
"""

import os
from contextlib import contextmanager

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_BACKENDS = {"python": _pykernels}
if _compiled is not None:
    _BACKENDS["cython"] = _compiled


def available():
    """Names of the importable backends, fastest first."""
    return [name for name in ("cython", "python") if name in _BACKENDS]


def _initial():
    forced = os.environ.get("NAPLES_BACKEND")
    if forced:
        if forced not in _BACKENDS:
            raise ImportError(f"NAPLES_BACKEND={forced!r} is not available; have {available()}")
        return forced
    return available()[0]


_active = _initial()


def name():
    return _active


def kernels(n=None):
    """Active kernel module.

    Passing ``n`` routes sizes beyond the compiled kernels' fixed-width
    range to the arbitrary-precision Python kernels.
    """
    mod = _BACKENDS[_active]
    limit = mod.MAX_N
    if n is not None and limit is not None and n > limit:
        return _pykernels
    return mod


def set_backend(backend):
    global _active
    if backend not in _BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; have {available()}")
    _active = backend


@contextmanager
def using(backend):
    """Temporarily switch backend (tests and benchmarks)."""
    previous = _active
    set_backend(backend)
    try:
        yield _BACKENDS[backend]
    finally:
        set_backend(previous)
