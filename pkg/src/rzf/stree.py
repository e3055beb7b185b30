"""Online BP-linked suffix tree, compiled core with a pure-Python fallback.

Set ``RZ_BACKEND=python`` to force the fallback.  Both classes expose the
same interface; loci and node handles are opaque and only meaningful to
the tree that produced them.
"""

import os

from ._pystree import SuffixTree as PySuffixTree
from .locus import Locus

try:
    from ._core import SuffixTree as CSuffixTree
except ImportError:  # extension not built
    CSuffixTree = None

__all__ = ["Locus", "SuffixTree", "PySuffixTree", "CSuffixTree", "tree_class", "BACKEND"]


def tree_class(backend=None):
    """Resolve ``"python"``, ``"compiled"`` or None (auto) to a tree class."""
    if backend is None:
        backend = os.environ.get("RZ_BACKEND", "auto")
    if backend == "python":
        return PySuffixTree
    if backend == "compiled":
        if CSuffixTree is None:
            raise ImportError("rzf._core is not built")
        return CSuffixTree
    if backend != "auto":
        raise ValueError(f"unknown backend {backend!r}")
    return CSuffixTree or PySuffixTree


SuffixTree = tree_class()
BACKEND = SuffixTree.backend
