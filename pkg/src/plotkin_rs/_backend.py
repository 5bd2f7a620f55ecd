"""Pick the compiled kernel when it is importable, else the pure-Python one.

Set ``PLOTKIN_RS_PURE=1`` to force the fallback.
"""
import os

from . import _pykernel

BACKEND = "python"
GFKernel = _pykernel.GFKernel

if os.environ.get("PLOTKIN_RS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel
    except ImportError:
        pass
    else:
        GFKernel = _ckernel.GFKernel
        BACKEND = "cython"


def kernel_classes():
    """All importable kernel implementations, keyed by name."""
    out = {"python": _pykernel.GFKernel}
    try:
        from . import _ckernel
    except ImportError:
        return out
    out["cython"] = _ckernel.GFKernel
    return out
