"""Selection between the compiled and pure-Python search kernels.

The package ships two interchangeable DFS kernels: rep132._kernel (compiled
extension) and rep132._kernel_py (pure-Python reference). They implement
the identical traversal — same witnesses, same node/test counts — so which
one runs is purely a speed question. The compiled one is preferred when it
imported successfully; set REP132_BACKEND=python or REP132_BACKEND=c to
force a choice (forcing c raises if the extension is missing instead of
falling back silently).
"""

from __future__ import annotations

import os


def load_backend(name: str):
    """Return the kernel module for an explicit backend name."""
    if name == "python":
        from . import _kernel_py

        return _kernel_py
    if name == "c":
        from . import _kernel  # type: ignore[attr-defined]

        return _kernel
    raise ValueError(f"unknown backend {name!r} (expected 'c' or 'python')")


def _select():
    forced = os.environ.get("REP132_BACKEND", "").strip().lower()
    if forced:
        return load_backend(forced), forced
    try:
        return load_backend("c"), "c"
    except ImportError:
        return load_backend("python"), "python"


_impl, BACKEND = _select()

run_search = _impl.run_search
MAX_N = _impl.MAX_N


def backend_name() -> str:
    """Which kernel this process is using: 'c' or 'python'."""
    return BACKEND
