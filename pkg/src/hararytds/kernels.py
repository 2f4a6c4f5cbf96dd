"""Search-kernel backend selection.

The compiled extension is used when it imports and the graph fits in a 64-bit
mask; otherwise the pure-Python kernels run. Set ``HARARYTDS_PURE=1`` to force
the Python backend.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py

_compiled: ModuleType | None
if os.environ.get("HARARYTDS_PURE", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
WORD_BITS = 64


def backend_for(order: int, prefer: str | None = None) -> ModuleType:
    """Kernel module for a graph of ``order`` vertices.

    ``prefer`` may be ``"python"`` or ``"cython"``; asking for the compiled
    backend when it is unavailable raises ``RuntimeError``.
    """
    if prefer == "python":
        return _kernels_py
    if prefer == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        if order > WORD_BITS:
            raise ValueError(f"compiled kernels support order <= {WORD_BITS}")
        return _compiled
    if _compiled is not None and order <= WORD_BITS:
        return _compiled
    return _kernels_py


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _compiled is not None else [])
