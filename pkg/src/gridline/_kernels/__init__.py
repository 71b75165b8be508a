"""Kernel backend selection.

The compiled extension is used when it built; otherwise the pure-Python
mirror takes over.  Set GRIDLINE_PURE=1 to force the fallback (the
benchmark and the backend-equivalence tests do this).  Both backends
produce bit-identical output.
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("GRIDLINE_PURE"):
    _native = None
else:
    try:
        from . import _native
    except ImportError:
        _native = None

BACKEND = "pure" if _native is None else "native"

_impl = pure if _native is None else _native

cascade_trials = _impl.cascade_trials
betweenness = _impl.betweenness
