"""Arithmetic kernel with a compiled fast lane and a pure-Python fallback.

The compiled module is preferred when importable; set ``GQ_KERNEL=pure`` or
``GQ_KERNEL=cython`` to force a lane (``auto`` or unset probes).  Both lanes
expose the same names, so callers import from this package only.
"""

import os

_choice = os.environ.get("GQ_KERNEL", "auto").strip().lower() or "auto"
if _choice not in ("auto", "pure", "cython"):
    raise ImportError(
        f"GQ_KERNEL must be 'auto', 'pure' or 'cython', got {_choice!r}"
    )

if _choice == "pure":
    from greenquadrics._kernel import pure as _impl
elif _choice == "cython":
    from greenquadrics._kernel import _cyquad as _impl
else:
    try:
        from greenquadrics._kernel import _cyquad as _impl
    except ImportError:
        from greenquadrics._kernel import pure as _impl

LANE = _impl.LANE
Rational = _impl.Rational
mat_mul = _impl.mat_mul
mat_add = _impl.mat_add
mat_sub = _impl.mat_sub
mat_neg = _impl.mat_neg
mat_scale = _impl.mat_scale
mat_det = _impl.mat_det
mat_trace = _impl.mat_trace
mat_inner = _impl.mat_inner

__all__ = [
    "LANE",
    "Rational",
    "mat_mul",
    "mat_add",
    "mat_sub",
    "mat_neg",
    "mat_scale",
    "mat_det",
    "mat_trace",
    "mat_inner",
]
