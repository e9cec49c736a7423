"""Backend selection for the hot kernels.

The compiled extension is preferred when it built; the pure-Python fallback
is always available.  Set ``TSCHIRN_PURE=1`` to force the fallback (useful
for benchmarking and for debugging suspected kernel mismatches).
"""

from __future__ import annotations

import os

if os.environ.get("TSCHIRN_PURE") == "1":
    from . import _speedups_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _speedups_py as _impl

        BACKEND = "python"

closure_elements = _impl.closure_elements
fixed_point_stats = _impl.fixed_point_stats
pair_orbit_count = _impl.pair_orbit_count


def backend_name() -> str:
    return BACKEND
