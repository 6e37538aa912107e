"""Kernel selection: compiled extension when importable, numpy fallback otherwise.

Set ``BIQUANDLES_PURE=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels as pure

compiled = None
if os.environ.get("BIQUANDLES_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on the build
        compiled = None

_impl = compiled if compiled is not None else pure

COMPILED: bool = compiled is not None
solve_up = _impl.solve_up
admissible_downs = _impl.admissible_downs
apply_ops = _impl.apply_ops
count_fixed = _impl.count_fixed


def backend() -> str:
    return "compiled" if COMPILED else "python"
