"""Online rightmost LZ factorization.

A pending factor starting at ``i`` keeps growing while the longest
repeating suffix of the text is at least as long as the pending factor
plus the new byte.  When it falls short the factor is final, and at that
moment every earlier occurrence of it is a leaf of the suffix tree, so one
subtree-max query (skipping the factor's own leaf) yields the rightmost
reference.
"""

from .factors import Copy, Literal
from .stree import tree_class


class Rlz:
    def __init__(self, backend=None, fanout=None, leftmost=False):
        self.tree = tree_class(backend)(fanout)
        self.start = 0  # first byte of the pending factor
        self.plen = 0
        # distances the classic leftmost reference would use, one per Copy
        self.leftmost = [] if leftmost else None

    def push(self, c):
        t = self.tree
        ln = t.extend(c)
        q = len(t) - 1
        out = []
        if self.plen:
            if ln > self.plen:
                self.plen += 1
                return out
            out.append(self._copy())
        self.start = q
        if ln == 0:
            out.append(Literal(c))
            self.plen = 0
        else:
            self.plen = 1
        return out

    def _copy(self):
        t = self.tree
        i, m = self.start, self.plen
        loc = t.locus_of(i, i + m, trusted=True)
        p = t.rightmost_leaf_begin(loc, exclude=i)
        if self.leftmost is not None:
            self.leftmost.append(i - t.leftmost_leaf_begin(loc, exclude=i))
        return Copy(m, i - p)

    def finish(self):
        if not self.plen:
            return []
        t = self.tree
        n = len(t)
        i, m = self.start, self.plen
        lrs = t.lrs
        if lrs <= m:
            # every earlier occurrence is again a leaf
            out = [self._copy()]
        else:
            # Occurrences beginning in [n - lrs, i - 1] sit inside the
            # repeating suffix and have no leaf; they are the rightmost ones
            # if any exist.
            text = t.text
            f = bytes(text[i:n])
            p = text.rfind(f, n - lrs, n - 1)
            if p < 0:
                out = [self._copy()]
            else:
                if self.leftmost is not None:
                    loc = t.locus_of(i, n, trusted=True)
                    lm = t.leftmost_leaf_begin(loc, exclude=i)
                    self.leftmost.append(i - (lm if lm >= 0 else text.find(f, n - lrs)))
                out = [Copy(m, i - p)]
        self.plen = 0
        self.start = n
        return out


def rlz(data, backend=None):
    z = Rlz(backend)
    out = []
    for c in data:
        out += z.push(c)
    return out + z.finish()
