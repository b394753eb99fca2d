"""Backend selection for the pair detectors.

The compiled twin handles graphs with at most 64 vertices; anything wider, a
missing extension, or AVOIDCOL_PURE=1 in the environment selects the
pure-Python module.  Both backends expose the same six detector functions with
identical semantics.
"""

from __future__ import annotations

import os
from typing import Callable

from . import _pykernels

_compiled = None
if not os.environ.get("AVOIDCOL_PURE"):
    try:
        from . import _ckernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

DETECTOR_TAGS = ("K1pK1", "K2", "K2pK1", "P3", "P4", "TwoK2")


def backend_name() -> str:
    """Name of the best available backend ("compiled" or "pure")."""
    return "pure" if _compiled is None else "compiled"


def bound_detector(tag: str, graph) -> Callable[[int, int], bool]:
    """Bind the fastest detector for `tag` to `graph`.

    Returns f(amask, bmask) -> bool answering whether the union of the two
    classes contains an induced copy of the tagged pattern.  The caller must
    guarantee that the masks are disjoint independent sets of `graph`.
    """
    name = _pykernels.DETECTORS[tag].__name__
    if _compiled is not None and graph.n <= 64:
        fn = getattr(_compiled, name)
        words = graph.words
        return lambda a, b: fn(words, a, b)
    fn = _pykernels.DETECTORS[tag]
    adj = graph.adj
    return lambda a, b: fn(adj, a, b)
