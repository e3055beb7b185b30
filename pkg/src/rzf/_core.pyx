# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled AggList and SuffixTree.

Same interface and semantics as :mod:`rzf.agg_list` and
:mod:`rzf._pystree`; element and node handles are plain ints.
"""

import os

from cpython.bytearray cimport PyByteArray_AS_STRING
from libc.stdint cimport INT64_MAX, INT64_MIN, int32_t, int64_t
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcpy, memmove

from .errors import UsageError
from .locus import Locus

cdef int64_t NEG = INT64_MIN
cdef int64_t POS = INT64_MAX
cdef int MAX_HEIGHT = 64


cdef void *_grow(void *p, Py_ssize_t n, size_t item) except NULL:
    cdef void *q = realloc(p, n * item)
    if q == NULL:
        raise MemoryError()
    return q


cdef class AggList:
    cdef readonly int fanout
    cdef int cap
    cdef int min_fill
    cdef int stride
    # elements (leaves of the B-tree)
    cdef int32_t *e_parent  # -1: dead
    cdef int64_t *e_mn
    cdef int64_t *e_mx
    cdef Py_ssize_t e_cap, e_top
    cdef int32_t *e_free
    cdef Py_ssize_t e_nfree
    # inner nodes
    cdef int32_t *i_parent
    cdef int32_t *i_count
    cdef int32_t *i_child
    cdef int64_t *i_mn
    cdef int64_t *i_mx
    cdef char *i_bottom
    cdef Py_ssize_t i_cap, i_top
    cdef int32_t *i_free
    cdef Py_ssize_t i_nfree
    cdef int32_t root
    cdef Py_ssize_t length
    cdef public Py_ssize_t n_inserts, n_deletes

    def __cinit__(self, fanout=None):
        if fanout is None:
            fanout = int(os.environ.get("RZ_FANOUT", "16"))
        if fanout < 2:
            raise UsageError(f"fanout must be >= 2, got {fanout}")
        self.fanout = fanout
        self.cap = max(fanout, 3)  # B = 2 runs as a 2-3 tree
        self.min_fill = max(2, (fanout + 1) // 2)
        self.stride = self.cap + 1
        self.e_cap = self.i_cap = 0
        self.e_top = self.i_top = 0
        self.e_nfree = self.i_nfree = 0
        self._reserve_e(16)
        self._reserve_i(4)
        self.root = self._new_inner(1)
        self.length = 0
        self.n_inserts = self.n_deletes = 0

    def __dealloc__(self):
        free(self.e_parent); free(self.e_mn); free(self.e_mx); free(self.e_free)
        free(self.i_parent); free(self.i_count); free(self.i_child)
        free(self.i_mn); free(self.i_mx); free(self.i_bottom); free(self.i_free)

    cdef int _reserve_e(self, Py_ssize_t cap) except -1:
        if cap <= self.e_cap:
            return 0
        self.e_parent = <int32_t*>_grow(self.e_parent, cap, sizeof(int32_t))
        self.e_mn = <int64_t*>_grow(self.e_mn, cap, sizeof(int64_t))
        self.e_mx = <int64_t*>_grow(self.e_mx, cap, sizeof(int64_t))
        self.e_free = <int32_t*>_grow(self.e_free, cap, sizeof(int32_t))
        self.e_cap = cap
        return 0

    cdef int _reserve_i(self, Py_ssize_t cap) except -1:
        if cap <= self.i_cap:
            return 0
        self.i_parent = <int32_t*>_grow(self.i_parent, cap, sizeof(int32_t))
        self.i_count = <int32_t*>_grow(self.i_count, cap, sizeof(int32_t))
        self.i_child = <int32_t*>_grow(self.i_child, cap * self.stride, sizeof(int32_t))
        self.i_mn = <int64_t*>_grow(self.i_mn, cap, sizeof(int64_t))
        self.i_mx = <int64_t*>_grow(self.i_mx, cap, sizeof(int64_t))
        self.i_bottom = <char*>_grow(self.i_bottom, cap, sizeof(char))
        self.i_free = <int32_t*>_grow(self.i_free, cap, sizeof(int32_t))
        self.i_cap = cap
        return 0

    cdef int32_t _new_elem(self, int64_t mn, int64_t mx) except -1:
        cdef int32_t e
        if self.e_nfree:
            self.e_nfree -= 1
            e = self.e_free[self.e_nfree]
        else:
            if self.e_top == self.e_cap:
                self._reserve_e(2 * self.e_cap)
            e = <int32_t>self.e_top
            self.e_top += 1
        self.e_mn[e] = mn
        self.e_mx[e] = mx
        return e

    cdef int32_t _new_inner(self, char bottom) except -1:
        cdef int32_t x
        if self.i_nfree:
            self.i_nfree -= 1
            x = self.i_free[self.i_nfree]
        else:
            if self.i_top == self.i_cap:
                self._reserve_i(2 * self.i_cap)
            x = <int32_t>self.i_top
            self.i_top += 1
        self.i_parent[x] = -1
        self.i_count[x] = 0
        self.i_mn[x] = POS
        self.i_mx[x] = NEG
        self.i_bottom[x] = bottom
        return x

    cdef inline int32_t *_ch(self, int32_t x) noexcept:
        return self.i_child + <Py_ssize_t>x * self.stride

    cdef inline int _idx(self, int32_t x, int32_t c) noexcept:
        cdef int32_t *ch = self._ch(x)
        cdef int k
        for k in range(self.i_count[x]):
            if ch[k] == c:
                return k
        return -1

    cdef void _recompute(self, int32_t x) noexcept:
        cdef int32_t *ch = self._ch(x)
        cdef int k
        cdef int32_t c
        cdef int64_t mn = POS, mx = NEG
        if self.i_bottom[x]:
            for k in range(self.i_count[x]):
                c = ch[k]
                if self.e_mn[c] < mn:
                    mn = self.e_mn[c]
                if self.e_mx[c] > mx:
                    mx = self.e_mx[c]
        else:
            for k in range(self.i_count[x]):
                c = ch[k]
                if self.i_mn[c] < mn:
                    mn = self.i_mn[c]
                if self.i_mx[c] > mx:
                    mx = self.i_mx[c]
        self.i_mn[x] = mn
        self.i_mx[x] = mx

    cdef inline void _set_parent(self, int32_t x, int32_t c) noexcept:
        if self.i_bottom[x]:
            self.e_parent[c] = x
        else:
            self.i_parent[c] = x

    cdef int _put(self, int32_t x, int idx, int32_t c) except -1:
        cdef int32_t *ch = self._ch(x)
        memmove(ch + idx + 1, ch + idx, (self.i_count[x] - idx) * sizeof(int32_t))
        ch[idx] = c
        self.i_count[x] += 1
        self._set_parent(x, c)
        return 0

    cdef int _split(self, int32_t x) except -1:
        cdef int32_t y = self._new_inner(self.i_bottom[x])
        cdef int32_t p
        cdef int cnt = self.i_count[x], half = cnt // 2, k
        cdef int32_t *cx = self._ch(x)
        cdef int32_t *cy = self._ch(y)
        memcpy(cy, cx + half, (cnt - half) * sizeof(int32_t))
        self.i_count[y] = cnt - half
        self.i_count[x] = half
        for k in range(cnt - half):
            self._set_parent(y, cy[k])
        self._recompute(x)
        self._recompute(y)
        p = self.i_parent[x]
        if p == -1:
            p = self._new_inner(0)
            self._ch(p)[0] = x
            self.i_count[p] = 1
            self.i_parent[x] = p
            self.root = p
            self._put(p, 1, y)
            self._recompute(p)
        else:
            self._put(p, self._idx(p, x) + 1, y)
        return 0

    cdef int32_t c_insert(self, int32_t x, int idx, int64_t mn, int64_t mx) except -1:
        cdef int32_t e = self._new_elem(mn, mx)
        self._put(x, idx, e)
        self.length += 1
        self.n_inserts += 1
        while x != -1:
            if mn < self.i_mn[x]:
                self.i_mn[x] = mn
            if mx > self.i_mx[x]:
                self.i_mx[x] = mx
            if self.i_count[x] > self.cap:
                self._split(x)
            x = self.i_parent[x]
        return e

    cdef inline int32_t c_insert_after(self, int32_t e, int64_t mn, int64_t mx) except -1:
        cdef int32_t x = self.e_parent[e]
        return self.c_insert(x, self._idx(x, e) + 1, mn, mx)

    cdef inline int32_t c_insert_before(self, int32_t e, int64_t mn, int64_t mx) except -1:
        cdef int32_t x = self.e_parent[e]
        return self.c_insert(x, self._idx(x, e), mn, mx)

    cdef int32_t c_insert_front(self, int64_t mn, int64_t mx) except -1:
        cdef int32_t x = self.root
        while not self.i_bottom[x]:
            x = self._ch(x)[0]
        return self.c_insert(x, 0, mn, mx)

    cdef void _remove_at(self, int32_t x, int idx) noexcept:
        cdef int32_t *ch = self._ch(x)
        memmove(ch + idx, ch + idx + 1, (self.i_count[x] - idx - 1) * sizeof(int32_t))
        self.i_count[x] -= 1

    cdef int32_t _rebalance(self, int32_t x) noexcept:
        cdef int32_t p = self.i_parent[x]
        cdef int i = self._idx(p, x), k
        cdef int32_t left, right, c
        cdef int32_t *cl
        cdef int32_t *cr
        if i > 0:
            left, right = self._ch(p)[i - 1], x
        else:
            left, right = x, self._ch(p)[i + 1]
        cl = self._ch(left)
        cr = self._ch(right)
        if self.i_count[left] + self.i_count[right] > self.cap:
            if left == x:
                c = cr[0]
                self._remove_at(right, 0)
                cl[self.i_count[left]] = c
                self.i_count[left] += 1
                self._set_parent(left, c)
            else:
                c = cl[self.i_count[left] - 1]
                self.i_count[left] -= 1
                memmove(cr + 1, cr, self.i_count[right] * sizeof(int32_t))
                cr[0] = c
                self.i_count[right] += 1
                self._set_parent(right, c)
            self._recompute(left)
            self._recompute(right)
            return p
        for k in range(self.i_count[right]):
            c = cr[k]
            cl[self.i_count[left] + k] = c
            self._set_parent(left, c)
        self.i_count[left] += self.i_count[right]
        self.i_count[right] = 0
        self._remove_at(p, self._idx(p, right))
        self.i_free[self.i_nfree] = right
        self.i_nfree += 1
        self._recompute(left)
        return p

    cdef void c_delete(self, int32_t e) noexcept:
        cdef int32_t x = self.e_parent[e], r
        self._remove_at(x, self._idx(x, e))
        self.e_parent[e] = -1
        self.e_free[self.e_nfree] = e
        self.e_nfree += 1
        self.length -= 1
        self.n_deletes += 1
        while self.i_parent[x] != -1 and self.i_count[x] < self.min_fill:
            x = self._rebalance(x)
        while x != -1:
            self._recompute(x)
            x = self.i_parent[x]
        r = self.root
        if not self.i_bottom[r] and self.i_count[r] == 1:
            self.root = self._ch(r)[0]
            self.i_parent[self.root] = -1
            self.i_free[self.i_nfree] = r
            self.i_nfree += 1

    cdef void c_update(self, int32_t e, int64_t mn, int64_t mx) noexcept:
        cdef int32_t x = self.e_parent[e]
        self.e_mn[e] = mn
        self.e_mx[e] = mx
        while x != -1:
            self._recompute(x)
            x = self.i_parent[x]

    cdef inline int64_t _val(self, int32_t c, int lvl, bint want_max) noexcept:
        if lvl == 0:
            return self.e_mx[c] if want_max else self.e_mn[c]
        return self.i_mx[c] if want_max else self.i_mn[c]

    cdef int32_t c_range(self, int32_t l, int32_t r, bint want_max) except -2:
        """Leftmost extreme element in [l, r]; -1 when l is after r."""
        cdef int32_t best = l, x = l, y = r, px, py, c
        cdef int best_lvl = 0, lvl = 0, ix, iy, k, top = 0
        cdef int64_t bval = self._val(l, 0, want_max), v
        cdef int32_t rnode[64]
        cdef int rlim[64]
        cdef int32_t *ch
        if l == r:
            return l
        while True:
            if lvl == 0:
                px, py = self.e_parent[x], self.e_parent[y]
            else:
                px, py = self.i_parent[x], self.i_parent[y]
            ix = self._idx(px, x)
            ch = self._ch(px)
            if px == py:
                iy = self._idx(px, y)
                if ix > iy:
                    return -1
                for k in range(ix + 1, iy):
                    v = self._val(ch[k], lvl, want_max)
                    if (v > bval) if want_max else (v < bval):
                        best, bval, best_lvl = ch[k], v, lvl
                break
            for k in range(ix + 1, self.i_count[px]):
                v = self._val(ch[k], lvl, want_max)
                if (v > bval) if want_max else (v < bval):
                    best, bval, best_lvl = ch[k], v, lvl
            rnode[top] = py
            rlim[top] = self._idx(py, y)
            top += 1
            x, y = px, py
            lvl += 1
        while top > 0:
            top -= 1
            ch = self._ch(rnode[top])
            for k in range(rlim[top]):
                v = self._val(ch[k], top, want_max)
                if (v > bval) if want_max else (v < bval):
                    best, bval, best_lvl = ch[k], v, top
        v = self._val(r, 0, want_max)
        if (v > bval) if want_max else (v < bval):
            best, bval, best_lvl = r, v, 0
        while best_lvl > 0:
            ch = self._ch(best)
            best_lvl -= 1
            for k in range(self.i_count[best]):
                if self._val(ch[k], best_lvl, want_max) == bval:
                    best = ch[k]
                    break
        return best

    cdef int32_t c_next(self, int32_t e) noexcept:
        cdef int32_t x = e, p
        cdef int lvl = 0, i
        while True:
            p = self.e_parent[x] if lvl == 0 else self.i_parent[x]
            if p == -1:
                return -1
            i = self._idx(p, x)
            if i + 1 < self.i_count[p]:
                x = self._ch(p)[i + 1]
                while lvl > 0:
                    x = self._ch(x)[0]
                    lvl -= 1
                return x
            x = p
            lvl += 1

    cdef int32_t c_prev(self, int32_t e) noexcept:
        cdef int32_t x = e, p
        cdef int lvl = 0, i
        while True:
            p = self.e_parent[x] if lvl == 0 else self.i_parent[x]
            if p == -1:
                return -1
            i = self._idx(p, x)
            if i > 0:
                x = self._ch(p)[i - 1]
                while lvl > 0:
                    x = self._ch(x)[self.i_count[x] - 1]
                    lvl -= 1
                return x
            x = p
            lvl += 1

    # ---- Python interface -------------------------------------------------

    cdef int32_t _live(self, e) except -1:
        if e is None or not isinstance(e, int) or not (0 <= e < self.e_top) \
                or self.e_parent[<int32_t>e] == -1:
            raise UsageError("dead or foreign element handle")
        return <int32_t>e

    def __len__(self):
        return self.length

    def __iter__(self):
        e = self.first()
        while e is not None:
            yield e
            e = self.next(e)

    def first(self):
        cdef int32_t x = self.root
        while not self.i_bottom[x]:
            x = self._ch(x)[0]
        return self._ch(x)[0] if self.i_count[x] else None

    def last(self):
        cdef int32_t x = self.root
        while not self.i_bottom[x]:
            x = self._ch(x)[self.i_count[x] - 1]
        return self._ch(x)[self.i_count[x] - 1] if self.i_count[x] else None

    def next(self, e):
        cdef int32_t r = self.c_next(self._live(e))
        return None if r == -1 else r

    def prev(self, e):
        cdef int32_t r = self.c_prev(self._live(e))
        return None if r == -1 else r

    def weight(self, e):
        return self.e_mn[self._live(e)]

    def weights(self, e):
        cdef int32_t h = self._live(e)
        return self.e_mn[h], self.e_mx[h]

    def insert_after(self, prev, w, wmax=None, data=None):
        if wmax is None:
            wmax = w
        if prev is None:
            return self.c_insert_front(w, wmax)
        return self.c_insert_after(self._live(prev), w, wmax)

    def insert_before(self, nxt, w, wmax=None, data=None):
        if wmax is None:
            wmax = w
        return self.c_insert_before(self._live(nxt), w, wmax)

    def delete(self, e):
        self.c_delete(self._live(e))

    def update_weight(self, e, w, wmax=None):
        self.c_update(self._live(e), w, w if wmax is None else wmax)

    def range_min(self, l, r):
        cdef int32_t h = self.c_range(self._live(l), self._live(r), False)
        if h == -1:
            raise UsageError("range endpoints out of order")
        return h, self.e_mn[h]

    def range_max(self, l, r):
        cdef int32_t h = self.c_range(self._live(l), self._live(r), True)
        if h == -1:
            raise UsageError("range endpoints out of order")
        return h, self.e_mx[h]

    def check_aggregates(self):
        return self._check(self.root) is not None

    cdef object _check(self, int32_t x):
        cdef int k
        cdef int32_t c
        cdef int64_t mn = POS, mx = NEG
        cdef int32_t *ch = self._ch(x)
        if x != self.root and not (self.min_fill <= self.i_count[x] <= self.cap):
            return None
        for k in range(self.i_count[x]):
            c = ch[k]
            if self.i_bottom[x]:
                if self.e_parent[c] != x:
                    return None
                mn = min(mn, self.e_mn[c])
                mx = max(mx, self.e_mx[c])
            else:
                if self.i_parent[c] != x or self._check(c) is None:
                    return None
                mn = min(mn, self.i_mn[c])
                mx = max(mx, self.i_mx[c])
        if mn != self.i_mn[x] or mx != self.i_mx[x]:
            return None
        return True


cdef class SuffixTree:
    cdef readonly AggList seq
    cdef readonly bytearray text
    cdef int64_t *n_start
    cdef int64_t *n_end  # -1: open leaf edge
    cdef int64_t *n_depth
    cdef int64_t *n_begin
    cdef int32_t *n_link
    cdef int32_t *n_parent
    cdef int32_t *n_open
    cdef int32_t *n_close
    cdef Py_ssize_t n_cap, n_top
    cdef int32_t *leaf_of
    cdef Py_ssize_t leaf_cap
    # child table: open addressing on (node << 8 | byte)
    cdef int64_t *h_key
    cdef int32_t *h_val
    cdef Py_ssize_t h_cap, h_used
    cdef int32_t anode
    cdef int64_t aedge, alen, rem

    backend = "compiled"

    def __cinit__(self, fanout=None):
        self.seq = AggList(fanout)
        self.text = bytearray()
        self.n_cap = self.n_top = 0
        self.leaf_cap = 0
        self._reserve_nodes(16)
        self._reserve_leaves(16)
        self.h_cap = 0
        self._rehash(64)
        self.n_top = 1
        self.n_start[0] = 0
        self.n_end[0] = 0
        self.n_depth[0] = 0
        self.n_begin[0] = -1
        self.n_link[0] = 0
        self.n_parent[0] = -1
        self.n_open[0] = self.seq.c_insert_front(POS, NEG)
        self.n_close[0] = self.seq.c_insert_after(self.n_open[0], POS, NEG)
        self.anode = 0
        self.aedge = self.alen = self.rem = 0

    def __dealloc__(self):
        free(self.n_start); free(self.n_end); free(self.n_depth); free(self.n_begin)
        free(self.n_link); free(self.n_parent); free(self.n_open); free(self.n_close)
        free(self.leaf_of); free(self.h_key); free(self.h_val)

    cdef int _reserve_nodes(self, Py_ssize_t cap) except -1:
        if cap <= self.n_cap:
            return 0
        self.n_start = <int64_t*>_grow(self.n_start, cap, sizeof(int64_t))
        self.n_end = <int64_t*>_grow(self.n_end, cap, sizeof(int64_t))
        self.n_depth = <int64_t*>_grow(self.n_depth, cap, sizeof(int64_t))
        self.n_begin = <int64_t*>_grow(self.n_begin, cap, sizeof(int64_t))
        self.n_link = <int32_t*>_grow(self.n_link, cap, sizeof(int32_t))
        self.n_parent = <int32_t*>_grow(self.n_parent, cap, sizeof(int32_t))
        self.n_open = <int32_t*>_grow(self.n_open, cap, sizeof(int32_t))
        self.n_close = <int32_t*>_grow(self.n_close, cap, sizeof(int32_t))
        self.n_cap = cap
        return 0

    cdef int _reserve_leaves(self, Py_ssize_t cap) except -1:
        if cap <= self.leaf_cap:
            return 0
        self.leaf_of = <int32_t*>_grow(self.leaf_of, cap, sizeof(int32_t))
        self.leaf_cap = cap
        return 0

    # ---- child table --------------------------------------------------------

    cdef inline Py_ssize_t _slot(self, int64_t key) noexcept:
        cdef unsigned long long h = <unsigned long long>key * 0x9E3779B97F4A7C15ULL
        cdef Py_ssize_t mask = self.h_cap - 1
        cdef Py_ssize_t s = <Py_ssize_t>(h >> 20) & mask
        while self.h_key[s] != -1 and self.h_key[s] != key:
            s = (s + 1) & mask
        return s

    cdef int _rehash(self, Py_ssize_t cap) except -1:
        cdef int64_t *ok = self.h_key
        cdef int32_t *ov = self.h_val
        cdef Py_ssize_t oc = self.h_cap, k, s
        self.h_key = <int64_t*>malloc(cap * sizeof(int64_t))
        self.h_val = <int32_t*>malloc(cap * sizeof(int32_t))
        if self.h_key == NULL or self.h_val == NULL:
            raise MemoryError()
        self.h_cap = cap
        for k in range(cap):
            self.h_key[k] = -1
        for k in range(oc):
            if ok[k] != -1:
                s = self._slot(ok[k])
                self.h_key[s] = ok[k]
                self.h_val[s] = ov[k]
        free(ok)
        free(ov)
        return 0

    cdef inline int32_t _child(self, int32_t v, int c) noexcept:
        cdef Py_ssize_t s = self._slot((<int64_t>v << 8) | c)
        return self.h_val[s] if self.h_key[s] != -1 else -1

    cdef int _set_child(self, int32_t v, int c, int32_t w) except -1:
        cdef int64_t key = (<int64_t>v << 8) | c
        cdef Py_ssize_t s = self._slot(key)
        if self.h_key[s] == -1:
            if 2 * (self.h_used + 1) > self.h_cap:
                self._rehash(2 * self.h_cap)
                s = self._slot(key)
            self.h_key[s] = key
            self.h_used += 1
        self.h_val[s] = w
        return 0

    # ---- construction -------------------------------------------------------

    cdef inline int64_t _elen(self, int32_t v) noexcept:
        cdef int64_t e = self.n_end[v]
        return (len(self.text) if e < 0 else e) - self.n_start[v]

    cdef int32_t _new_node(self, int64_t start, int64_t end, int64_t depth, int64_t begin,
                           int32_t parent) except -1:
        cdef int32_t v
        if self.n_top == self.n_cap:
            self._reserve_nodes(2 * self.n_cap)
        v = <int32_t>self.n_top
        self.n_top += 1
        self.n_start[v] = start
        self.n_end[v] = end
        self.n_depth[v] = depth
        self.n_begin[v] = begin
        self.n_link[v] = 0
        self.n_parent[v] = parent
        return v

    cdef int _add_leaf(self, int32_t u, int64_t begin, int64_t start, int c) except -1:
        cdef int32_t leaf = self._new_node(start, -1, 0, begin, u)
        self._set_child(u, c, leaf)
        self.n_open[leaf] = self.seq.c_insert_after(self.n_open[u], begin, begin)
        self.n_close[leaf] = self.seq.c_insert_after(self.n_open[leaf], POS, NEG)
        if begin >= self.leaf_cap:
            self._reserve_leaves(2 * self.leaf_cap)
        self.leaf_of[begin] = leaf
        return 0

    cdef int32_t _split(self, int32_t u, int32_t child, int64_t k,
                        unsigned char *T) except -1:
        cdef int64_t s = self.n_start[child]
        cdef int32_t mid = self._new_node(s, s + k, self.n_depth[u] + k, -1, u)
        self._set_child(u, T[s], mid)
        self.n_start[child] = s + k
        self.n_parent[child] = mid
        self._set_child(mid, T[s + k], child)
        self.n_open[mid] = self.seq.c_insert_before(self.n_open[child], POS, NEG)
        self.n_close[mid] = self.seq.c_insert_after(self.n_close[child], POS, NEG)
        return mid

    cpdef int64_t extend(self, int c) except -1:
        """Append byte ``c``; return the new lrs length."""
        cdef int32_t an, child, mid, last = -1
        cdef int64_t pos, elen
        cdef unsigned char *T
        self.text.append(c)
        T = <unsigned char*>PyByteArray_AS_STRING(self.text)
        pos = len(self.text) - 1
        self.rem += 1
        while self.rem:
            if self.alen == 0:
                self.aedge = pos
            an = self.anode
            child = self._child(an, T[self.aedge])
            if child == -1:
                self._add_leaf(an, pos - self.rem + 1, pos, T[pos])
                if last != -1:
                    self.n_link[last] = an
                    last = -1
            else:
                elen = self._elen(child)
                if self.alen >= elen:
                    self.aedge += elen
                    self.alen -= elen
                    self.anode = child
                    continue
                if T[self.n_start[child] + self.alen] == c:
                    if last != -1:
                        self.n_link[last] = an
                    self.alen += 1
                    break
                mid = self._split(an, child, self.alen, T)
                self._add_leaf(mid, pos - self.rem + 1, pos, T[pos])
                if last != -1:
                    self.n_link[last] = mid
                last = mid
            self.rem -= 1
            if an == 0:
                if self.alen > 0:
                    self.alen -= 1
                    self.aedge = pos - self.rem + 1
            else:
                self.anode = self.n_link[an]
        return self.rem

    # ---- loci ---------------------------------------------------------------

    def __len__(self):
        return len(self.text)

    @property
    def lrs(self):
        return self.rem

    @property
    def node_count(self):
        return self.n_top

    @property
    def root(self):
        return 0

    def edge_len(self, v):
        return self._elen(v)

    cdef object _descend(self, int32_t v, int64_t edge, int64_t off):
        cdef unsigned char *T = <unsigned char*>PyByteArray_AS_STRING(self.text)
        cdef int32_t child
        cdef int64_t elen
        while off:
            child = self._child(v, T[edge])
            elen = self._elen(child)
            if off < elen or self.n_end[child] < 0:
                return Locus(v, T[edge], off)
            v = child
            edge += elen
            off -= elen
        return Locus(v, -1, 0)

    def root_locus(self):
        return Locus(0, -1, 0)

    def active_locus(self):
        loc = self._descend(self.anode, self.aedge, self.alen)
        self.anode = loc[0]
        self.alen = loc[2]
        self.aedge = len(self.text) - self.rem + self.n_depth[self.anode]
        return loc

    def depth(self, loc):
        return self.n_depth[<int32_t>loc[0]] + loc[2]

    def below(self, loc):
        if loc[2] == 0:
            return loc[0]
        return self._child(loc[0], loc[1])

    def locus_of(self, Py_ssize_t start, Py_ssize_t end, bint trusted=False):
        """Locus spelling ``text[start:end]``, or None if it does not occur."""
        cdef unsigned char *T = <unsigned char*>PyByteArray_AS_STRING(self.text)
        cdef int32_t v = 0, child
        cdef Py_ssize_t k = start, m, j
        cdef int64_t elen, s
        if trusted:
            return self._descend(0, start, end - start)
        while k < end:
            child = self._child(v, T[k])
            if child == -1:
                return None
            elen = self._elen(child)
            s = self.n_start[child]
            m = min(elen, end - k)
            for j in range(m):
                if T[s + j] != T[k + j]:
                    return None
            k += m
            if m < elen or self.n_end[child] < 0:
                return Locus(v, T[s], m)
            v = child
        return Locus(v, -1, 0)

    def suffix_link_step(self, loc):
        cdef int32_t v = loc[0]
        cdef int64_t off = loc[2], edge
        if off == 0:
            if v == 0:
                raise UsageError("suffix link step from the root")
            return Locus(self.n_link[v], -1, 0)
        edge = self.n_start[self._child(v, loc[1])]
        if v == 0:
            return self._descend(0, edge + 1, off - 1)
        return self._descend(self.n_link[v], edge, off)

    def advance(self, loc, int c):
        """Extend the spelled string by byte ``c``; None if absent."""
        cdef unsigned char *T = <unsigned char*>PyByteArray_AS_STRING(self.text)
        cdef int32_t v = loc[0], child = -1
        cdef int64_t off = loc[2], elen = 0
        if off:
            child = self._child(v, loc[1])
            elen = self._elen(child)
            while off >= elen and self.n_end[child] >= 0:
                v = child
                off -= elen
                if off == 0:
                    break
                child = self._child(v, T[self.n_start[child] + elen])
                elen = self._elen(child)
        if off == 0:
            child = self._child(v, c)
            if child == -1:
                return None
            if self.n_end[child] >= 0 and self.n_end[child] - self.n_start[child] == 1:
                return Locus(child, -1, 0)
            return Locus(v, c, 1)
        if off >= elen or T[self.n_start[child] + off] != c:
            return None
        off += 1
        if off == elen and self.n_end[child] >= 0:
            return Locus(child, -1, 0)
        return Locus(v, T[self.n_start[child]], off)

    # ---- occurrence queries -------------------------------------------------

    cdef int64_t _extreme(self, int32_t v, int c, int64_t off, int64_t exclude,
                          bint want_max) except? -3:
        cdef int32_t w = v if off == 0 else self._child(v, c)
        cdef int32_t lo, hi, leaf, h
        cdef int64_t val, a, b
        cdef int64_t none = NEG if want_max else POS
        cdef AggList seq = self.seq
        if self.n_end[w] < 0:
            return -1 if self.n_begin[w] == exclude else self.n_begin[w]
        lo, hi = self.n_open[w], self.n_close[w]
        h = seq.c_range(lo, hi, want_max)
        val = seq.e_mx[h] if want_max else seq.e_mn[h]
        if val == exclude and exclude >= 0:
            leaf = self.leaf_of[exclude]
            h = seq.c_range(lo, seq.c_prev(self.n_open[leaf]), want_max)
            a = seq.e_mx[h] if want_max else seq.e_mn[h]
            h = seq.c_range(seq.c_next(self.n_close[leaf]), hi, want_max)
            b = seq.e_mx[h] if want_max else seq.e_mn[h]
            val = (a if a > b else b) if want_max else (a if a < b else b)
        return -1 if val == none else val

    def rightmost_leaf_begin(self, loc, int64_t exclude=-1):
        """Largest leaf begin under ``loc`` other than ``exclude``; -1 if none."""
        return self._extreme(loc[0], loc[1], loc[2], exclude, True)

    def leftmost_leaf_begin(self, loc, int64_t exclude=-1):
        return self._extreme(loc[0], loc[1], loc[2], exclude, False)

    # ---- debugging ----------------------------------------------------------

    def nodes(self):
        return range(self.n_top)

    def is_leaf(self, v):
        return self.n_end[<int32_t>v] < 0

    def parent(self, v):
        return self.n_parent[<int32_t>v]

    def children(self, v):
        """Children of ``v`` (scans all nodes; debugging only)."""
        return [w for w in range(1, self.n_top) if self.n_parent[w] == v]

    def leaf_begin(self, v):
        return self.n_begin[<int32_t>v]

    def suffix_link(self, v):
        return self.n_link[<int32_t>v]

    def label(self, v):
        parts = []
        while v != 0:
            s = self.n_start[<int32_t>v]
            parts.append(bytes(self.text[s:s + self._elen(v)]))
            v = self.n_parent[<int32_t>v]
        return b"".join(reversed(parts))

    def spell(self, loc):
        base = self.label(loc[0])
        if loc[2] == 0:
            return base
        s = self.n_start[self._child(loc[0], loc[1])]
        return base + bytes(self.text[s:s + loc[2]])

    def bp_nesting(self):
        """(node, parent) pairs read back from the BP sequence."""
        owner = {}
        for v in range(self.n_top):
            owner[self.n_open[v]] = (v, True)
            owner[self.n_close[v]] = (v, False)
        stack, pairs = [], []
        for e in self.seq:
            v, is_open = owner[e]
            if is_open:
                pairs.append((v, stack[len(stack) - 1] if stack else -1))
                stack.append(v)
            elif not stack or stack.pop() != v:
                return None
        return pairs if not stack else None

    def bp_consistent(self):
        pairs = self.bp_nesting()
        if pairs is None or len(pairs) != self.n_top:
            return False
        return all(self.n_parent[v] == p for v, p in pairs)
