"""Kernel backend selection.

Prefers the compiled extension when it importable, otherwise falls back to
the pure-Python twin.  Set SUPERPATTERN_PURE_PYTHON=1 to force the fallback
(useful for the parity tests and the benchmark).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("SUPERPATTERN_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND

lex_min_embedding = _impl.lex_min_embedding
contains = _impl.contains
greedy_layer_indices = _impl.greedy_layer_indices
composition_at_rank = _impl.composition_at_rank
permutation_at_rank = _impl.permutation_at_rank
scan_layered = _impl.scan_layered
scan_all_perms = _impl.scan_all_perms
scan_perm_list = _impl.scan_perm_list
