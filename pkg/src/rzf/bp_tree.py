"""Explicit ordered tree mirrored into a balanced-parentheses sequence.

Each node owns an open and a close element in an :class:`AggList`.  The
open element carries the node weight in both views; the close element is
neutral (``POS_INF`` for the min view, ``NEG_INF`` for the max view), so a
range query over ``[open(v), close(v)]`` is a query over the subtree of v.
A node weight of ``None`` makes the open element neutral as well.
"""

from .agg_list import NEG_INF, POS_INF, AggList
from .errors import UsageError

FIRST = None


class TreeNode:
    __slots__ = ("parent", "first_child", "last_child", "prev_sib", "next_sib",
                 "open", "close", "payload")

    def __init__(self, payload=None):
        self.parent = None
        self.first_child = None
        self.last_child = None
        self.prev_sib = None
        self.next_sib = None
        self.open = None
        self.close = None
        self.payload = payload

    def children(self):
        c = self.first_child
        while c is not None:
            yield c
            c = c.next_sib


def _views(w):
    if w is None:
        return POS_INF, NEG_INF
    return w, w


class BpTree:
    def __init__(self, fanout=None):
        self.seq = AggList(fanout)
        self.root = None
        self.count = 0

    def _check(self, v):
        if not isinstance(v, TreeNode) or v.open is None:
            raise UsageError("dead or foreign tree node")

    def _new(self, w, payload):
        v = TreeNode(payload)
        self.count += 1
        return v, _views(w)

    # ---- child-list plumbing ----------------------------------------

    @staticmethod
    def _link_after(parent, after, v):
        v.parent = parent
        if after is FIRST:
            v.prev_sib = None
            v.next_sib = parent.first_child
            parent.first_child = v
        else:
            v.prev_sib = after
            v.next_sib = after.next_sib
            after.next_sib = v
        if v.next_sib is None:
            parent.last_child = v
        else:
            v.next_sib.prev_sib = v

    @staticmethod
    def _unlink(v):
        p = v.parent
        if v.prev_sib is None:
            p.first_child = v.next_sib
        else:
            v.prev_sib.next_sib = v.next_sib
        if v.next_sib is None:
            p.last_child = v.prev_sib
        else:
            v.next_sib.prev_sib = v.prev_sib
        v.parent = v.prev_sib = v.next_sib = None

    # ---- edits --------------------------------------------------------

    def insert_root(self, w=None, payload=None):
        v, (mn, mx) = self._new(w, payload)
        seq = self.seq
        old = self.root
        if old is None:
            v.open = seq.insert_after(None, mn, mx, data=v)
            v.close = seq.insert_after(v.open, POS_INF, NEG_INF, data=v)
        else:
            v.open = seq.insert_before(old.open, mn, mx, data=v)
            v.close = seq.insert_after(old.close, POS_INF, NEG_INF, data=v)
            old.parent = v
            v.first_child = v.last_child = old
        self.root = v
        return v

    def insert_leaf(self, parent, after_sibling=FIRST, w=None, payload=None):
        self._check(parent)
        if after_sibling is not FIRST:
            self._check(after_sibling)
            if after_sibling.parent is not parent:
                raise UsageError("after_sibling is not a child of parent")
        v, (mn, mx) = self._new(w, payload)
        anchor = parent.open if after_sibling is FIRST else after_sibling.close
        v.open = self.seq.insert_after(anchor, mn, mx, data=v)
        v.close = self.seq.insert_after(v.open, POS_INF, NEG_INF, data=v)
        self._link_after(parent, after_sibling, v)
        return v

    def split_edge(self, child, w=None, payload=None):
        """Insert a node between ``child`` and its parent; return it."""
        self._check(child)
        if child.parent is None:
            raise UsageError("cannot split above the root")
        v, (mn, mx) = self._new(w, payload)
        v.open = self.seq.insert_before(child.open, mn, mx, data=v)
        v.close = self.seq.insert_after(child.close, POS_INF, NEG_INF, data=v)
        p = child.parent
        v.parent = p
        v.prev_sib, v.next_sib = child.prev_sib, child.next_sib
        if v.prev_sib is None:
            p.first_child = v
        else:
            v.prev_sib.next_sib = v
        if v.next_sib is None:
            p.last_child = v
        else:
            v.next_sib.prev_sib = v
        child.parent = v
        child.prev_sib = child.next_sib = None
        v.first_child = v.last_child = child
        return v

    def delete_node(self, v):
        """Remove non-root ``v``; its children take its place, in order."""
        self._check(v)
        if v.parent is None:
            raise UsageError("cannot delete the root")
        p = v.parent
        anchor = v.prev_sib
        kids = list(v.children())
        self._unlink(v)
        for c in kids:
            self._link_after(p, anchor, c)
            anchor = c
        self.seq.delete(v.open)
        self.seq.delete(v.close)
        v.open = v.close = None
        v.first_child = v.last_child = None
        self.count -= 1

    def update_node_weight(self, v, w):
        self._check(v)
        self.seq.update_weight(v.open, *_views(w))

    def weight(self, v):
        self._check(v)
        return self.seq.weight(v.open)

    # ---- subtree queries ------------------------------------------------

    def subtree_min(self, v):
        self._check(v)
        e, w = self.seq.range_min(v.open, v.close)
        return e.data, w

    def subtree_max(self, v):
        self._check(v)
        e, w = self.seq.range_max(v.open, v.close)
        return e.data, w

    # ---- debugging --------------------------------------------------------

    def bp_string(self):
        out = []
        for e in self.seq:
            out.append("(" if e is e.data.open else ")")
        return "".join(out)

    def dfs_string(self):
        """BP string from a fresh preorder walk of the explicit tree."""
        out = []
        if self.root is None:
            return ""
        stack = [(self.root, False)]
        while stack:
            v, done = stack.pop()
            if done:
                out.append(")")
                continue
            out.append("(")
            stack.append((v, True))
            stack.extend((c, False) for c in reversed(list(v.children())))
        return "".join(out)
