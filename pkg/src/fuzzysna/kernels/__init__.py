"""Bottleneck-path kernels with a compiled core and a pure-Python fallback.

The compiled extension (_bottleneck_cy, built from Cython at install time)
is preferred when importable; otherwise the pure-Python twin is used. Both
expose the same three functions with identical semantics and bit-identical
results, so everything above this package is backend-agnostic.

Set FUZZYSNA_KERNELS=python or FUZZYSNA_KERNELS=compiled to force a backend
(forcing "compiled" raises if the extension is missing).
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _bottleneck_py


def _load_compiled():
    from . import _bottleneck_cy

    return _bottleneck_cy


def _select() -> tuple[str, ModuleType]:
    forced = os.environ.get("FUZZYSNA_KERNELS", "").strip().lower()
    if forced == "python":
        return "python", _bottleneck_py
    if forced == "compiled":
        return "compiled", _load_compiled()
    if forced:
        raise ValueError(
            f"FUZZYSNA_KERNELS must be 'python' or 'compiled', got {forced!r}"
        )
    try:
        return "compiled", _load_compiled()
    except ImportError:
        return "python", _bottleneck_py


_BACKEND_NAME, _impl = _select()

bottleneck_table = _impl.bottleneck_table
shortest_lex_path = _impl.shortest_lex_path
enumerate_tied_paths = _impl.enumerate_tied_paths

NEG_INF = _bottleneck_py.NEG_INF
POS_INF = _bottleneck_py.POS_INF


def backend_name() -> str:
    """Name of the active backend: 'compiled' or 'python'."""
    return _BACKEND_NAME


def available_backends() -> dict[str, ModuleType]:
    """All importable backends, for parity tests and benchmarks."""
    backends: dict[str, ModuleType] = {"python": _bottleneck_py}
    try:
        backends["compiled"] = _load_compiled()
    except ImportError:
        pass
    return backends
