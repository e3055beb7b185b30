"""Sliding-window rightmost LZ factorization in O(d) space.

References must begin inside the window of the ``d`` bytes preceding the
factor.  The suffix tree covers at most ``4d`` bytes: at a factor boundary
where more than ``2d`` bytes precede the factor, it is rebuilt over just
the last ``d`` of them.  A factor that reaches length ``2d`` has a period
``p <= d`` equal to its reference distance; from there it is extended by
direct comparison against its first ``p`` bytes without touching the tree.
"""

from .errors import UsageError
from .factors import Copy, Literal
from .stree import tree_class


class Slz:
    def __init__(self, d, backend=None, fanout=None, leftmost=False, eager=False):
        if d < 1:
            raise UsageError(f"window size must be >= 1, got {d}")
        self.d = d
        self._cls = tree_class(backend)
        self._fanout = fanout
        self.tree = self._cls(fanout)
        self.base = 0  # global position of tree.text[0]
        self.pos = 0  # bytes consumed so far
        self.start = 0  # global start of the pending factor
        self.plen = 0
        self.best = -1  # rightmost valid reference begin for the pending prefix
        self.loc = None
        self.period = 0  # nonzero while extending periodically
        self.leftmost = [] if leftmost else None
        self._period_left = 0
        self.rebuilds = 0
        self.peak_nodes = 1
        self.peak_buffer = 0
        self.eager = eager  # rebuild at every factor boundary (testing)

    # ---- window maintenance ---------------------------------------------

    def _window_byte(self, x):
        t, off = self.tree, x - self.base
        if off < len(t):
            return t.text[off]
        # beyond the tree only while a periodic factor is running
        return t.text[self.start - self.base + (x - self.start) % self.period]

    def _rebuild(self, q):
        lo = max(0, q - self.d)
        window = bytes(self._window_byte(x) for x in range(lo, q))
        t = self._cls(self._fanout)
        for c in window:
            t.extend(c)
        self.tree = t
        self.base = lo
        self.rebuilds += 1

    def _stale(self, q):
        # the tree must end exactly at q - 1 and hold at most 2d bytes before q
        return (self.eager or q - self.base > 2 * self.d
                or self.base + len(self.tree) != q)

    # ---- per-byte validity check ----------------------------------------

    def _check(self, q, c):
        """Rightmost begin in the window of an occurrence of S[start..q], or -1."""
        t = self.tree
        base, i = self.base, self.start
        ell = self.plen + 1
        self.loc = t.advance(self.loc, c)
        text = t.text
        best = self.best
        if best >= 0 and text[best - base + ell - 1] == c:
            # rightmost reference of the shorter prefix still extends
            return best
        lo = max(0, i - self.d)
        hi = best - 1 if best >= 0 else i - 1
        # Occurrences beginning at or after q + 1 - lrs lie inside the longest
        # repeating suffix and have no leaf of their own.
        zone = max(q + 1 - t.lrs, lo)
        if zone <= hi:
            b = text.rfind(text[i - base:q + 1 - base], zone - base, hi - base + ell)
            if b >= 0:
                return b + base
        b = t.rightmost_leaf_begin(self.loc, exclude=i - base)
        if b >= 0 and b + base >= lo:
            return b + base
        return -1

    def _leftmost_dist(self):
        i, m, base = self.start, self.plen, self.base
        if self.period:
            return self._period_left
        text = self.tree.text
        lo = max(0, i - self.d)
        return i - (text.find(text[i - base:i - base + m], lo - base, i - 1 - base + m) + base)

    def _emit(self):
        if self.leftmost is not None:
            self.leftmost.append(self._leftmost_dist())
        return Copy(self.plen, self.period or self.start - self.best)

    def _enter_periodic(self):
        p = self.start - self.best
        self.period = p
        if self.leftmost is not None:
            # leftmost shift: largest multiple of p inside the window whose
            # preceding block matches the factor's first block
            text, i = self.tree.text, self.start - self.base
            s = p * (min(self.d, self.start) // p)
            while s > p and text[i - s:i] != text[i:i + s]:
                s -= p
            self._period_left = s

    # ---- streaming ------------------------------------------------------

    def push(self, c):
        q = self.pos
        self.pos += 1
        out = []
        if self.period:
            p = self.period
            t = self.tree
            if c == t.text[self.start - self.base + self.plen % p]:
                self.plen += 1
                return out
            out.append(self._emit())
            self._rebuild(q)
            self.period = 0
            self.start, self.plen = q, 0
            self.tree.extend(c)
        elif self.plen:
            self.tree.extend(c)
            b = self._check(q, c)
            if b >= 0:
                self.plen += 1
                self.best = b
                if self.plen == 2 * self.d:
                    self._enter_periodic()
                self._track()
                return out
            out.append(self._emit())
            self.start, self.plen = q, 0
            if self.eager or q - self.base > 2 * self.d:
                self._rebuild(q)
                self.tree.extend(c)
        else:
            self.start = q
            if self._stale(q):
                self._rebuild(q)
            self.tree.extend(c)
        # c opens a new factor
        self.best = -1
        self.loc = self.tree.root_locus()
        b = self._check(q, c)
        if b < 0:
            out.append(Literal(c))
            self.start = q + 1
        else:
            self.plen = 1
            self.best = b
        self._track()
        return out

    def _track(self):
        t = self.tree
        if t.node_count > self.peak_nodes:
            self.peak_nodes = t.node_count
        if len(t) > self.peak_buffer:
            self.peak_buffer = len(t)

    def finish(self):
        if not self.plen:
            return []
        out = [self._emit()]
        self.start, self.plen, self.period, self.best = self.pos, 0, 0, -1
        return out


def slz(data, d, backend=None):
    z = Slz(d, backend)
    out = []
    for c in data:
        out += z.push(c)
    return out + z.finish()
