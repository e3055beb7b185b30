"""Dynamic weighted sequence with range min/max between two elements.

The sequence is stored as the leaf level of a height-balanced tree whose
inner nodes hold between ceil(B/2) and B children and cache the (min, max)
of everything beneath them.  Every element carries two weights: a
*min-view* weight read by :meth:`AggList.range_min` and a *max-view*
weight read by :meth:`AggList.range_max`.  Passing a single weight sets
both views.

Handles returned by the insert methods stay valid until the element is
deleted.  ``None`` is used as the FRONT/END boundary marker.
"""

import os

from .errors import UsageError

NEG_INF = -(1 << 63)
POS_INF = (1 << 63) - 1

FRONT = None
END = None


def default_fanout():
    return int(os.environ.get("RZ_FANOUT", "16"))


class Elem:
    """One element of an :class:`AggList`; treat as an opaque handle."""

    __slots__ = ("parent", "mn", "mx", "data")

    def __init__(self, mn, mx, data=None):
        self.parent = None
        self.mn = mn
        self.mx = mx
        self.data = data

    def __repr__(self):
        return f"Elem({self.mn}, {self.mx})"


class _Inner:
    __slots__ = ("parent", "children", "mn", "mx", "bottom")

    def __init__(self, bottom):
        self.parent = None
        self.children = []
        self.mn = POS_INF
        self.mx = NEG_INF
        self.bottom = bottom

    def recompute(self):
        ch = self.children
        if ch:
            self.mn = min([c.mn for c in ch])
            self.mx = max([c.mx for c in ch])
        else:
            self.mn = POS_INF
            self.mx = NEG_INF


class AggList:
    def __init__(self, fanout=None):
        fanout = default_fanout() if fanout is None else fanout
        if fanout < 2:
            raise UsageError(f"fanout must be >= 2, got {fanout}")
        self.fanout = fanout
        # B = 2 would allow one-child inner nodes with no sibling to borrow
        # from, so it runs as a 2-3 tree
        self.cap = max(fanout, 3)
        self.min_fill = max(2, (fanout + 1) // 2)
        self.root = _Inner(bottom=True)
        self._len = 0
        # edit counters, read by instrumentation tests
        self.n_inserts = 0
        self.n_deletes = 0

    def __len__(self):
        return self._len

    def __iter__(self):
        e = self.first()
        while e is not None:
            yield e
            e = self.next(e)

    def _check(self, e):
        if not isinstance(e, Elem) or e.parent is None:
            raise UsageError("dead or foreign element handle")
        # a handle from another list climbs to a different root
        x = e.parent
        while x.parent is not None:
            x = x.parent
        if x is not self.root:
            raise UsageError("element belongs to a different list")

    # ---- navigation -------------------------------------------------

    def first(self):
        x = self.root
        while not x.bottom:
            x = x.children[0]
        return x.children[0] if x.children else None

    def last(self):
        x = self.root
        while not x.bottom:
            x = x.children[-1]
        return x.children[-1] if x.children else None

    def next(self, e):
        self._check(e)
        x = e
        while x.parent is not None:
            p = x.parent
            ch = p.children
            i = ch.index(x)
            if i + 1 < len(ch):
                y = ch[i + 1]
                while not isinstance(y, Elem):
                    y = y.children[0]
                return y
            x = p
        return END

    def prev(self, e):
        self._check(e)
        x = e
        while x.parent is not None:
            p = x.parent
            ch = p.children
            i = ch.index(x)
            if i > 0:
                y = ch[i - 1]
                while not isinstance(y, Elem):
                    y = y.children[-1]
                return y
            x = p
        return FRONT

    def weight(self, e):
        """Min-view weight of ``e``."""
        self._check(e)
        return e.mn

    def weights(self, e):
        self._check(e)
        return e.mn, e.mx

    # ---- mutation ---------------------------------------------------

    def insert_after(self, prev, w, wmax=None, data=None):
        if prev is FRONT:
            node = self.root
            while not node.bottom:
                node = node.children[0]
            idx = 0
        else:
            self._check(prev)
            node = prev.parent
            idx = node.children.index(prev) + 1
        return self._insert(node, idx, w, w if wmax is None else wmax, data)

    def insert_before(self, nxt, w, wmax=None, data=None):
        self._check(nxt)
        node = nxt.parent
        return self._insert(node, node.children.index(nxt), w,
                            w if wmax is None else wmax, data)

    def _insert(self, node, idx, mn, mx, data):
        e = Elem(mn, mx, data)
        e.parent = node
        node.children.insert(idx, e)
        self._len += 1
        self.n_inserts += 1
        x = node
        while x is not None:
            if mn < x.mn:
                x.mn = mn
            if mx > x.mx:
                x.mx = mx
            if len(x.children) > self.cap:
                self._split(x)
            x = x.parent
        return e

    def _split(self, x):
        half = len(x.children) // 2
        y = _Inner(x.bottom)
        y.children = x.children[half:]
        del x.children[half:]
        for c in y.children:
            c.parent = y
        x.recompute()
        y.recompute()
        p = x.parent
        grown = p is None
        if grown:
            p = _Inner(bottom=False)
            p.children = [x]
            x.parent = p
            self.root = p
        p.children.insert(p.children.index(x) + 1, y)
        y.parent = p
        if grown:
            p.recompute()

    def delete(self, e):
        self._check(e)
        x = e.parent
        x.children.remove(e)
        e.parent = None
        self._len -= 1
        self.n_deletes += 1
        while x.parent is not None and len(x.children) < self.min_fill:
            x = self._rebalance(x)
        while x is not None:
            x.recompute()
            x = x.parent
        r = self.root
        if not r.bottom and len(r.children) == 1:
            self.root = r.children[0]
            self.root.parent = None

    def _rebalance(self, x):
        """Fix an underfull ``x``; return the lowest node still needing a recompute."""
        p = x.parent
        ch = p.children
        i = ch.index(x)
        if i > 0:
            left, right = ch[i - 1], x
        else:
            left, right = x, ch[i + 1]
        if len(left.children) + len(right.children) > self.cap:
            # borrow one child across the boundary
            if left is x:
                c = right.children.pop(0)
                left.children.append(c)
                c.parent = left
            else:
                c = left.children.pop()
                right.children.insert(0, c)
                c.parent = right
            left.recompute()
            right.recompute()
            return p
        for c in right.children:
            c.parent = left
        left.children.extend(right.children)
        right.children = []
        ch.remove(right)
        right.parent = None
        left.recompute()
        return p

    def update_weight(self, e, w, wmax=None):
        self._check(e)
        e.mn = w
        e.mx = w if wmax is None else wmax
        x = e.parent
        while x is not None:
            x.recompute()
            x = x.parent

    # ---- queries ----------------------------------------------------

    def range_min(self, l, r):
        """Leftmost element of minimum min-view weight in ``[l, r]``."""
        e = self._range(l, r, False)
        return e, e.mn

    def range_max(self, l, r):
        """Leftmost element of maximum max-view weight in ``[l, r]``."""
        e = self._range(l, r, True)
        return e, e.mx

    def _range(self, l, r, want_max):
        self._check(l)
        self._check(r)
        if l is r:
            return l
        if want_max:
            def better(a, b):
                return a > b
            key = "mx"
        else:
            def better(a, b):
                return a < b
            key = "mn"

        # Left-side candidates are met in left-to-right order while climbing;
        # right-side ones are met right-to-left, so they are kept per level.
        best = l
        bval = getattr(l, key)
        right_levels = [[r]]
        x, y = l, r
        while True:
            px, py = x.parent, y.parent
            if px is py:
                ch = px.children
                ix, iy = ch.index(x), ch.index(y)
                if ix > iy:
                    raise UsageError("range endpoints out of order")
                for c in ch[ix + 1:iy]:
                    v = getattr(c, key)
                    if better(v, bval):
                        best, bval = c, v
                break
            chx = px.children
            for c in chx[chx.index(x) + 1:]:
                v = getattr(c, key)
                if better(v, bval):
                    best, bval = c, v
            chy = py.children
            right_levels.append(chy[:chy.index(y)])
            x, y = px, py
        for level in reversed(right_levels):
            for c in level:
                v = getattr(c, key)
                if better(v, bval):
                    best, bval = c, v
        while not isinstance(best, Elem):
            for c in best.children:
                if getattr(c, key) == bval:
                    best = c
                    break
        return best

    # ---- debugging --------------------------------------------------

    def check_aggregates(self):
        """Recompute every aggregate bottom-up; return True if nothing changed."""
        ok = True

        def walk(x):
            nonlocal ok
            if isinstance(x, Elem):
                return x.mn, x.mx
            if x.parent is not None and not (self.min_fill <= len(x.children) <= self.cap):
                ok = False
            vals = [walk(c) for c in x.children]
            for c in x.children:
                if c.parent is not x:
                    ok = False
            mn = min((v[0] for v in vals), default=POS_INF)
            mx = max((v[1] for v in vals), default=NEG_INF)
            if (mn, mx) != (x.mn, x.mx):
                ok = False
            return mn, mx

        walk(self.root)
        return ok
