"""Selects the compiled root-isolation kernels when available.

Set ``ACRKIT_PURE_PYTHON=1`` to force the pure-Python implementation.
"""

from __future__ import annotations

import os

if os.environ.get("ACRKIT_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl
        BACKEND = "python"

sign_variations = _impl.sign_variations
taylor_shift1 = _impl.taylor_shift1
descartes_01 = _impl.descartes_01
sign_at_dyadic = _impl.sign_at_dyadic
vca_isolate = _impl.vca_isolate

__all__ = ["BACKEND", "sign_variations", "taylor_shift1", "descartes_01", "sign_at_dyadic", "vca_isolate"]
