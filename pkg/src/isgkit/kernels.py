"""Backend selection for the table kernels.

The compiled extension `_fastcore` is used when importable; otherwise the
pure-Python twin `_kernels_py` takes over. `ISGKIT_BACKEND=pure` forces the
Python twin, `ISGKIT_BACKEND=c` insists on the compiled one.
"""

import os
from array import array

from . import _kernels_py

_requested = os.environ.get("ISGKIT_BACKEND", "auto")

_impl = None
if _requested in ("auto", "c"):
    try:
        from . import _fastcore as _impl
    except ImportError:
        if _requested == "c":
            raise
        _impl = None
if _impl is None:
    _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "pure"


def get_impl(name=None):
    """Return the active kernel module, or a specific one by name ('pure'/'compiled')."""
    if name is None:
        return _impl
    if name == "pure":
        return _kernels_py
    if name == "compiled":
        from . import _fastcore

        return _fastcore
    raise ValueError(f"unknown backend {name!r}")


def flatten_table(mult):
    """Row-major int32 buffer for an m x m list-of-lists table."""
    flat = array("i")
    for row in mult:
        flat.extend(row)
    return flat


def assoc_violation(flat, m, impl=None):
    return (impl or _impl).assoc_violation(flat, m)


def inverse_table(flat, m, impl=None):
    """Return (status, inv) where status is -1 on success (see _kernels_py)."""
    inv = array("i", bytes(4 * m))
    status = (impl or _impl).inverse_table(flat, m, inv)
    return status, inv


def idempotent_commute_violation(flat, m, impl=None):
    return (impl or _impl).idempotent_commute_violation(flat, m)


def order_matrix(flat, inv, m, impl=None):
    out = bytearray(m * m)
    (impl or _impl).order_matrix(flat, inv, m, out)
    return out


def saturate(flat, m, parent, pairs, impl=None):
    (impl or _impl).saturate(flat, m, parent, pairs)
