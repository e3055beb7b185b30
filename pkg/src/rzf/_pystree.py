"""Pure-Python online suffix tree (Ukkonen) mirrored into a BP-linked tree."""

from .agg_list import NEG_INF, POS_INF
from .bp_tree import FIRST, BpTree
from .errors import UsageError
from .locus import Locus


class STNode:
    __slots__ = ("start", "end", "depth", "link", "parent", "children", "bp", "begin")

    def __init__(self, start, end, depth=0, begin=-1):
        self.start = start
        self.end = end  # -1: open leaf edge, runs to the current text end
        self.depth = depth  # string depth; internal nodes only
        self.link = None
        self.parent = None
        self.children = {}
        self.bp = None
        self.begin = begin

    @property
    def is_leaf(self):
        return self.end < 0


class SuffixTree:
    backend = "python"

    def __init__(self, fanout=None):
        self.text = bytearray()
        self.bp = BpTree(fanout)
        root = STNode(0, 0)
        root.bp = self.bp.insert_root(None, payload=root)
        self.root = root
        self.leaves = []  # leaves[begin] -> leaf node
        self.node_count = 1
        self._anode = root
        self._aedge = 0
        self._alen = 0
        self._rem = 0

    def __len__(self):
        return len(self.text)

    @property
    def lrs(self):
        """Length of the longest repeating suffix of the current text."""
        return self._rem

    def edge_len(self, v):
        return (len(self.text) if v.end < 0 else v.end) - v.start

    # ---- construction -------------------------------------------------

    def _add_leaf(self, parent, begin, start):
        leaf = STNode(start, -1, begin=begin)
        leaf.parent = parent
        parent.children[self.text[start]] = leaf
        leaf.bp = self.bp.insert_leaf(parent.bp, FIRST, begin, payload=leaf)
        self.leaves.append(leaf)
        self.node_count += 1

    def _split(self, u, child, k):
        text = self.text
        mid = STNode(child.start, child.start + k, u.depth + k)
        mid.parent = u
        u.children[text[child.start]] = mid
        child.start += k
        child.parent = mid
        mid.children[text[child.start]] = child
        mid.bp = self.bp.split_edge(child.bp, None, payload=mid)
        self.node_count += 1
        return mid

    def extend(self, c):
        """Append byte ``c``; return the new lrs length."""
        text = self.text
        text.append(c)
        pos = len(text) - 1
        root = self.root
        self._rem += 1
        last = None
        while self._rem:
            if self._alen == 0:
                self._aedge = pos
            an = self._anode
            child = an.children.get(text[self._aedge])
            if child is None:
                self._add_leaf(an, pos - self._rem + 1, pos)
                if last is not None:
                    last.link = an
                    last = None
            else:
                elen = self.edge_len(child)
                if self._alen >= elen:
                    self._aedge += elen
                    self._alen -= elen
                    self._anode = child
                    continue
                if text[child.start + self._alen] == c:
                    if last is not None:
                        last.link = an
                    self._alen += 1
                    break
                mid = self._split(an, child, self._alen)
                self._add_leaf(mid, pos - self._rem + 1, pos)
                if last is not None:
                    last.link = mid
                last = mid
            self._rem -= 1
            if an is root:
                if self._alen > 0:
                    self._alen -= 1
                    self._aedge = pos - self._rem + 1
            else:
                self._anode = an.link if an.link is not None else root
        return self._rem

    # ---- loci ---------------------------------------------------------

    def _descend(self, v, edge, off):
        """Canonical locus ``off`` bytes below ``v`` along text from ``edge``."""
        text = self.text
        while off:
            child = v.children[text[edge]]
            elen = self.edge_len(child)
            if off < elen or child.end < 0:
                return Locus(v, text[edge], off)
            v = child
            edge += elen
            off -= elen
        return Locus(v, -1, 0)

    def root_locus(self):
        return Locus(self.root, -1, 0)

    def active_locus(self):
        loc = self._descend(self._anode, self._aedge, self._alen)
        # keep the walk-down so later phases do not redo it
        self._anode = loc.node
        self._alen = loc.off
        self._aedge = len(self.text) - self._rem + loc.node.depth
        return loc

    def depth(self, loc):
        return loc.node.depth + loc.off

    def below(self, loc):
        return loc.node if loc.off == 0 else loc.node.children[loc.byte]

    def locus_of(self, start, end, trusted=False):
        """Locus spelling ``text[start:end]``, or None if it does not occur.

        With ``trusted`` the caller guarantees presence and edges are skipped
        without comparing bytes.
        """
        if trusted:
            return self._descend(self.root, start, end - start)
        text = self.text
        v = self.root
        k = start
        while k < end:
            child = v.children.get(text[k])
            if child is None:
                return None
            elen = self.edge_len(child)
            s = child.start
            m = min(elen, end - k)
            if text[s:s + m] != text[k:k + m]:
                return None
            k += m
            if m < elen or child.end < 0:
                return Locus(v, text[s], m)
            v = child
        return Locus(v, -1, 0)

    def suffix_link_step(self, loc):
        """Locus of ``str(loc)`` minus its first byte."""
        v, byte, off = loc
        if off == 0:
            if v is self.root:
                raise UsageError("suffix link step from the root")
            return Locus(v.link, -1, 0)
        edge = v.children[byte].start
        if v is self.root:
            return self._descend(v, edge + 1, off - 1)
        return self._descend(v.link, edge, off)

    def advance(self, loc, c):
        """Extend the spelled string by byte ``c``; None if absent."""
        text = self.text
        v, byte, off = loc
        if off:
            child = v.children[byte]
            elen = self.edge_len(child)
            # splits since ``loc`` was taken may have cut this edge
            while off >= elen and child.end >= 0:
                v = child
                off -= elen
                if off == 0:
                    break
                child = v.children[text[child.start + elen]]
                elen = self.edge_len(child)
        if off == 0:
            child = v.children.get(c)
            if child is None:
                return None
            if child.end >= 0 and child.end - child.start == 1:
                return Locus(child, -1, 0)
            return Locus(v, c, 1)
        if off >= elen or text[child.start + off] != c:
            return None
        off += 1
        if off == elen and child.end >= 0:
            return Locus(child, -1, 0)
        return Locus(v, text[child.start], off)

    # ---- occurrence queries ------------------------------------------

    def rightmost_leaf_begin(self, loc, exclude=-1):
        """Largest leaf begin under ``loc`` other than ``exclude``; -1 if none."""
        return self._extreme(loc, exclude, True)

    def leftmost_leaf_begin(self, loc, exclude=-1):
        return self._extreme(loc, exclude, False)

    def _extreme(self, loc, exclude, want_max):
        w = self.below(loc)
        if w.end < 0:
            return -1 if w.begin == exclude else w.begin
        seq = self.bp.seq
        query = seq.range_max if want_max else seq.range_min
        none = NEG_INF if want_max else POS_INF
        lo, hi = w.bp.open, w.bp.close
        _, val = query(lo, hi)
        if val == exclude and exclude >= 0:
            leaf = self.leaves[exclude].bp
            _, a = query(lo, seq.prev(leaf.open))
            _, b = query(seq.next(leaf.close), hi)
            val = max(a, b) if want_max else min(a, b)
        return -1 if val == none else val

    # ---- debugging ----------------------------------------------------

    def nodes(self):
        stack = [self.root]
        while stack:
            v = stack.pop()
            yield v
            stack.extend(v.children.values())

    def is_leaf(self, v):
        return v.end < 0

    def parent(self, v):
        return v.parent

    def children(self, v):
        return list(v.children.values())

    def leaf_begin(self, v):
        return v.begin

    def suffix_link(self, v):
        return v.link

    def label(self, v):
        """Full path string of node ``v``."""
        parts = []
        while v is not self.root:
            parts.append(bytes(self.text[v.start:v.start + self.edge_len(v)]))
            v = v.parent
        return b"".join(reversed(parts))

    def spell(self, loc):
        base = self.label(loc.node)
        if loc.off == 0:
            return base
        s = loc.node.children[loc.byte].start
        return base + bytes(self.text[s:s + loc.off])

    def bp_consistent(self):
        return self.bp.bp_string() == self.bp.dfs_string()
