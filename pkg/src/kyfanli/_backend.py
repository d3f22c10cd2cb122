"""Kernel selection: compiled extension if importable, else pure Python.

Set ``KYFANLI_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and by the parity tests).
"""

import os

from . import _fallback

kernels = _fallback
COMPILED = False

if not os.environ.get("KYFANLI_PURE_PYTHON"):
    try:
        from . import _kernels
    except ImportError:  # extension not built
        pass
    else:
        kernels = _kernels
        COMPILED = True

BACKEND = "compiled" if COMPILED else "python"
