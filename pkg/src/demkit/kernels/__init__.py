"""Hot loops behind the graph and monitoring code.

The numba path is used when numba imports and ``DEMKIT_DISABLE_NUMBA`` is
unset (or ``0``); otherwise the numpy/pure-Python reference path runs.  Both
produce identical results.
"""
import os

from . import _ref


def _numba_wanted():
    flag = os.environ.get("DEMKIT_DISABLE_NUMBA", "").strip().lower()
    return flag in ("", "0", "false", "no")


USE_NUMBA = False
if _numba_wanted():
    try:
        from . import _jit as _impl
        USE_NUMBA = True
    except ImportError:  # numba missing or broken
        _impl = _ref
else:
    _impl = _ref

BACKEND = "numba" if USE_NUMBA else "numpy"

all_pairs_distances = _impl.all_pairs_distances
monitor_words = _impl.monitor_words
cover_search = _impl.cover_search
connected_masks = _impl.connected_masks
canonical_masks = _impl.canonical_masks


def set_threads(count):
    """Cap numba's thread pool; a no-op on the reference path."""
    if USE_NUMBA and count:
        import numba
        numba.set_num_threads(max(1, min(int(count), numba.config.NUMBA_NUM_THREADS)))


__all__ = [
    "BACKEND",
    "USE_NUMBA",
    "all_pairs_distances",
    "canonical_masks",
    "connected_masks",
    "cover_search",
    "monitor_words",
    "set_threads",
]
