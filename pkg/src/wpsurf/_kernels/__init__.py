"""Kernel backend selection.

The compiled extension is preferred when present; set ``WPSURF_KERNEL=pure``
to force the reference implementation (or ``=c`` to require the compiled one).
"""

from __future__ import annotations

import os

_choice = os.environ.get("WPSURF_KERNEL", "auto").lower()

if _choice not in {"auto", "pure", "c"}:
    raise RuntimeError(f"WPSURF_KERNEL must be auto|pure|c, got {_choice!r}")

if _choice == "pure":
    from . import pure as _impl
else:
    try:
        from . import _celim as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _choice == "c":
            raise RuntimeError(
                "WPSURF_KERNEL=c but the compiled kernel is not built; "
                "reinstall with Cython and a C toolchain available"
            )
        from . import pure as _impl

normalize = _impl.normalize
reduce_against = _impl.reduce_against
BACKEND = _impl.BACKEND


def backend_name() -> str:
    """Active kernel backend: 'c' (compiled) or 'pure'."""
    return BACKEND
