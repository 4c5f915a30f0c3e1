"""Search-kernel backend selection.

Prefers the compiled Cython extension and falls back to the pure-Python
twin when the extension was not built.  ``ECWIDTH_KERNEL=pure`` in the
environment forces the fallback (used by the benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("ECWIDTH_KERNEL") == "pure":
    from . import _pure as backend
else:
    try:
        from . import _core as backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as backend

IMPL = backend.IMPL
width_of_tree = backend.width_of_tree
loads_of_tree = backend.loads_of_tree
enumerate_spanning_trees = backend.enumerate_spanning_trees
branch_and_bound = backend.branch_and_bound
