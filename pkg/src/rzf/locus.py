from typing import Any, NamedTuple


class Locus(NamedTuple):
    """A point in a suffix tree.

    ``off == 0``: the explicit internal node (or root) ``node`` itself.
    ``off > 0``: ``off`` bytes down the edge leaving ``node`` whose label
    starts with ``byte``.  Points on leaf edges always use the second form,
    even at the leaf tip, because a leaf's label grows with the text.
    """

    node: Any
    byte: int
    off: int
