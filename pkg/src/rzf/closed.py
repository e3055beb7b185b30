"""Online longest and minimum closed factorization arrays.

A closed suffix longer than one byte is determined by its longest border
``u``, a repeating suffix of the text: it starts where the rightmost
earlier occurrence of ``u`` starts.  For the lrs that occurrence is always
a leaf.  For a shorter repeating suffix ``u_m`` it may lie inside the lrs
itself, where there is no leaf; those occurrences are recovered from the
border array of the repeating suffixes: the nearest one ends at
``q - k + m`` for the smallest ``k`` whose suffix ``u_k`` has longest
border ``u_m``.
"""

from typing import NamedTuple

from .stree import tree_class


class LcfaEntry(NamedTuple):
    last_len: int
    count: int


class Lcfa:
    def __init__(self, backend=None, fanout=None):
        self.tree = tree_class(backend)(fanout)
        self.counts = [0]  # counts[k]: factor count of the length-k prefix

    def push(self, c):
        t = self.tree
        ln = t.extend(c)
        i = len(t) - 1
        if ln == 0:
            last = 1
        else:
            # second-rightmost occurrence of the lrs; the rightmost is itself
            last = i - t.rightmost_leaf_begin(t.active_locus()) + 1
        count = self.counts[i + 1 - last] + 1
        self.counts.append(count)
        return LcfaEntry(last, count)


def suffix_borders(text, q, ell):
    """beta[k] = longest border of text[q-k+1..q] for k = 1..ell (beta[0] unused)."""
    beta = [0] * (ell + 1)
    k = 0
    # failure function over the reversed window text[q], text[q-1], ...
    for j in range(2, ell + 1):
        c = text[q - j + 1]
        while k and text[q - k] != c:
            k = beta[k]
        if text[q - k] == c:
            k += 1
        beta[j] = k
    return beta


class Mcfa:
    def __init__(self, backend=None, fanout=None):
        self.tree = tree_class(backend)(fanout)
        self.mcf = [0]  # mcf[k]: minimum closed factorization size of the length-k prefix
        self.last_candidates = [1]

    def candidates(self):
        """Lengths of all closed suffixes of the current text."""
        t = self.tree
        ell = t.lrs
        q = len(t) - 1
        lens = [1]
        if not ell:
            return lens
        beta = suffix_borders(t.text, q, ell)
        nearest = [0] * (ell + 1)
        for k in range(2, ell + 1):
            b = beta[k]
            if b and not nearest[b]:
                nearest[b] = k
        loc = t.active_locus()
        for m in range(ell, 0, -1):
            k = nearest[m]
            if k:
                end = q - k + m
            else:
                end = t.rightmost_leaf_begin(loc) + m - 1
            lens.append(q - end + m)
            if m > 1:
                loc = t.suffix_link_step(loc)
        return lens

    def push(self, c):
        self.tree.extend(c)
        lens = self.candidates()
        self.last_candidates = lens
        n = len(self.tree)
        mcf = self.mcf
        best = min([mcf[n - ln] for ln in lens])
        mcf.append(best + 1)
        return best + 1


def lcfa(data, backend=None):
    z = Lcfa(backend)
    return [z.push(c) for c in data]


def mcfa(data, backend=None):
    z = Mcfa(backend)
    return [z.push(c) for c in data]
