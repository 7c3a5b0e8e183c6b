"""Loop enumeration and counterexample search.

The cell-fill kernel exists twice: a compiled extension
(``_kernel_cy``) for speed and a pure-Python twin (``_kernel_py``) used
when the extension is unavailable.  Selection happens here at import
lookup time; the env var ``BOLFORGE_KERNEL`` (``python`` or ``cython``)
forces a backend.  Both produce identical output.
"""

from __future__ import annotations

import os


def get_kernel(backend: str | None = None):
    """Return the kernel module for the requested (or default) backend."""
    name = backend or os.environ.get("BOLFORGE_KERNEL") or "auto"
    if name not in ("auto", "cython", "python"):
        raise ValueError(f"unknown kernel backend {name!r}")
    if name in ("auto", "cython"):
        try:
            from . import _kernel_cy

            return _kernel_cy
        except ImportError:
            if name == "cython":
                raise
    from . import _kernel_py

    return _kernel_py


def active_backend() -> str:
    """Name of the kernel the default selection resolves to."""
    return get_kernel().BACKEND


from .canon import canonical_form  # noqa: E402
from .construct import construct_bruck_from_group  # noqa: E402
from .engine import (  # noqa: E402
    SearchResult,
    SearchSpec,
    SearchStats,
    SearchWitness,
    enumerate_loops,
    find_first,
)

__all__ = [
    "SearchResult",
    "SearchSpec",
    "SearchStats",
    "SearchWitness",
    "active_backend",
    "canonical_form",
    "construct_bruck_from_group",
    "enumerate_loops",
    "find_first",
    "get_kernel",
]
