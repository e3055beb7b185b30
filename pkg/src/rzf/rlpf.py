"""Streaming rightmost longest-previous-factor array."""

from typing import NamedTuple

from .stree import tree_class


class RlpfEntry(NamedTuple):
    len: int
    dist: int


class Rlpf:
    """Feed bytes one at a time; each push returns RLPF at that position.

    >>> r = Rlpf()
    >>> [tuple(r.push(c)) for c in b"aaab"]
    [(0, 1), (1, 1), (2, 1), (0, 1)]
    """

    def __init__(self, backend=None, fanout=None):
        self.tree = tree_class(backend)(fanout)

    def push(self, c):
        t = self.tree
        ln = t.extend(c)
        if ln == 0:
            return RlpfEntry(0, 1)
        # the lrs itself is not a leaf, so every leaf below it is earlier
        p = t.rightmost_leaf_begin(t.active_locus())
        i = len(t) - 1
        return RlpfEntry(ln, i - (p + ln - 1))


def rlpf(data, backend=None):
    r = Rlpf(backend)
    return [r.push(c) for c in data]
