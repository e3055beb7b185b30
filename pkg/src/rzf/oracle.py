"""Brute-force reference implementations.

Everything here works by scanning the raw text against the definitions and
shares no code with the tree-based modules.  Cost is cubic or worse, so
inputs are capped.
"""

from .errors import OracleRefused
from .factors import Copy, Literal

DEFAULT_CAP = 512


def _guard(s, cap):
    s = bytes(s)
    if cap is not None and len(s) > cap:
        raise OracleRefused(f"input of {len(s)} bytes exceeds oracle cap {cap}")
    return s


def oracle_rlpf(s, cap=DEFAULT_CAP):
    s = _guard(s, cap)
    out = []
    for i in range(len(s)):
        best = (0, 1)
        for ln in range(1, i + 1):
            # rightmost earlier occurrence must end at or before i - 1
            b = s.rfind(s[i - ln + 1:i + 1], 0, i)
            if b < 0:
                break
            best = (ln, i - (b + ln - 1))
        out.append(best)
    return out


def _greedy(s, lo_of):
    out = []
    i = 0
    n = len(s)
    while i < n:
        lo = lo_of(i)
        ln, dist = 0, 0
        while i + ln < n:
            # occurrence must begin in [lo, i - 1]; it may run past i
            b = s.rfind(s[i:i + ln + 1], lo, i + ln)
            if b < 0:
                break
            ln, dist = ln + 1, i - b
        if ln == 0:
            out.append(Literal(s[i]))
            i += 1
        else:
            out.append(Copy(ln, dist))
            i += ln
    return out


def oracle_rlz(s, cap=DEFAULT_CAP):
    return _greedy(_guard(s, cap), lambda i: 0)


def oracle_slz(s, d, cap=DEFAULT_CAP):
    if d < 1:
        raise ValueError("window size must be >= 1")
    return _greedy(_guard(s, cap), lambda i: max(0, i - d))


def _longest_borders(s):
    """border[b][e]: longest border length of s[b:e+1], by direct comparison."""
    n = len(s)
    table = []
    for b in range(n):
        row = [0] * n
        cands = []  # all border lengths of s[b:e+1]
        for e in range(b + 1, n):
            # a border of length k+1 of s[b:e+1] extends a border of length k
            # of s[b:e] (or the empty one) by a matching byte
            nxt = [k + 1 for k in [0] + cands if s[b + k] == s[e]]
            cands = [k for k in nxt if k < e - b + 1]
            row[e] = max(cands, default=0)
        table.append(row)
    return table


def closed_suffixes(s, cap=DEFAULT_CAP):
    """For each end q, the sorted lengths of the closed suffixes of s[:q+1]."""
    s = _guard(s, cap)
    border = _longest_borders(s)
    out = []
    for q in range(len(s)):
        lens = [1]
        for b in range(q):
            k = border[b][q]
            if k == 0:
                continue
            w = s[b:q + 1]
            # closed: the border's second occurrence is the suffix one
            if w.find(w[:k], 1) == len(w) - k:
                lens.append(q - b + 1)
        out.append(sorted(lens))
    return out


def oracle_lcfa(s, cap=DEFAULT_CAP):
    count = [0]
    out = []
    for q, lens in enumerate(closed_suffixes(s, cap)):
        last = max(lens)
        count.append(count[q + 1 - last] + 1)
        out.append((last, count[-1]))
    return out


def oracle_mcfa(s, cap=DEFAULT_CAP):
    mcf = [0]
    for q, lens in enumerate(closed_suffixes(s, cap)):
        mcf.append(1 + min(mcf[q + 1 - ln] for ln in lens))
    return mcf[1:]
