"""Backend selection for the bitmask kernels.

The compiled ``_speedups`` extension is used when it was built and the
graph fits in 64 bits; otherwise the pure-Python twin runs. Setting
``PSIGREEDOID_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

_compiled = None
if not os.environ.get("PSIGREEDOID_PURE_PYTHON"):
    try:
        from . import _speedups as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

_NAMES = (
    "alpha",
    "is_stable",
    "closed_nbhd",
    "is_local_max",
    "stable_masks",
    "psi_masks",
    "max_stable_masks",
    "matching_number",
    "maximum_matching_pairs",
    "count_perfect_matchings",
)


def backends() -> dict[str, object]:
    """Kernel modules available in this install, keyed by name."""
    out: dict[str, object] = {"python": _pykernels}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def _dispatch(name: str):
    py = getattr(_pykernels, name)
    if _compiled is None:
        return py
    fast = getattr(_compiled, name)

    def call(adj, *args):
        if len(adj) > 64:
            return py(adj, *args)
        return fast(adj, *args)

    call.__name__ = name
    call.__doc__ = py.__doc__
    return call


def _dispatch_family(name: str):
    py = getattr(_pykernels, name)
    if _compiled is None:
        return py
    fast = getattr(_compiled, name)

    def call(masks):
        if masks and max(masks).bit_length() > 64:
            return py(masks)
        return fast(masks)

    call.__name__ = name
    call.__doc__ = py.__doc__
    return call


alpha = _dispatch("alpha")
is_stable = _dispatch("is_stable")
closed_nbhd = _dispatch("closed_nbhd")
is_local_max = _dispatch("is_local_max")
stable_masks = _dispatch("stable_masks")
psi_masks = _dispatch("psi_masks")
max_stable_masks = _dispatch("max_stable_masks")
matching_number = _dispatch("matching_number")
maximum_matching_pairs = _dispatch("maximum_matching_pairs")
count_perfect_matchings = _dispatch("count_perfect_matchings")
accessibility_violation = _dispatch_family("accessibility_violation")
exchange_violation = _dispatch_family("exchange_violation")
