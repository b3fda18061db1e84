"""Backend selection for the enumeration kernel.

Imports the compiled kernel when present, the pure-Python fallback
otherwise.  Set ``FRAMECODES_PURE_PYTHON=1`` in the environment to force
the fallback (used by the test suite and the benchmark to exercise both
paths).
"""

from __future__ import annotations

import os

from . import _bitkernel_py

if os.environ.get("FRAMECODES_PURE_PYTHON"):
    _impl = _bitkernel_py
else:
    try:
        from . import _bitkernel as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _bitkernel_py

BACKEND = _impl.BACKEND

weight_counts = _impl.weight_counts
words_up_to_weight = _impl.words_up_to_weight


def available_backends():
    """Map backend name -> module for every importable kernel."""
    backends = {"python": _bitkernel_py}
    try:
        from . import _bitkernel
    except ImportError:
        pass
    else:
        backends["compiled"] = _bitkernel
    return backends
