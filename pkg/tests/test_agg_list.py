import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rzf.agg_list import NEG_INF, POS_INF
from rzf.errors import UsageError


def build(AL, ws, fanout=None):
    a = AL(fanout)
    hs = []
    prev = None
    for w in ws:
        prev = a.insert_after(prev, w)
        hs.append(prev)
    return a, hs


def contents(a):
    return [a.weight(h) for h in a]


def scan(ws, i, j, want_max):
    span = ws[i:j + 1]
    best = max(span) if want_max else min(span)
    return i + span.index(best), best


# ---- small examples ---------------------------------------------------------

def test_insert_front_on_empty(AL):
    a = AL()
    h = a.insert_after(None, 5)
    assert contents(a) == [5]
    assert a.first() == h and a.last() == h


def test_range_min_pair(AL):
    a, (h5, h3) = build(AL, [5, 3])
    assert a.range_min(h5, h3) == (h3, 3)


def test_delete_front(AL):
    a, (h5, h3) = build(AL, [5, 3])
    a.delete(h5)
    assert contents(a) == [3]


def test_delete_middle_then_max(AL):
    a, (h2, h9, h4) = build(AL, [2, 9, 4])
    a.delete(h9)
    assert a.range_max(h2, h4) == (h4, 4)


def test_update_then_max(AL):
    a, (h5, h3) = build(AL, [5, 3])
    a.update_weight(h3, 7)
    assert a.range_max(h5, h3) == (h3, 7)


def test_tie_goes_left(AL):
    a, (h1, h2, h3) = build(AL, [4, 8, 6])
    a.update_weight(h3, 4)
    assert a.range_min(h1, h3) == (h1, 4)
    a.update_weight(h1, 8)
    assert a.range_max(h1, h3) == (h1, 8)
    assert a.range_max(h2, h3)[0] == h2


def test_min_of_three(AL):
    a, (h5, h3, h9) = build(AL, [5, 3, 9])
    assert a.range_min(h5, h9) == (h3, 3)
    assert a.range_min(h9, h9) == (h9, 9)


def test_navigation(AL):
    a, hs = build(AL, [5, 3])
    assert a.next(hs[0]) == hs[1]
    assert a.next(hs[1]) is None
    assert a.prev(hs[0]) is None
    a, hs = build(AL, range(100), fanout=3)
    assert list(a) == hs
    walk, h = [], a.last()
    while h is not None:
        walk.append(h)
        h = a.prev(h)
    assert walk == hs[::-1]


def test_dead_handle_rejected(AL):
    a, (h5, h3) = build(AL, [5, 3])
    a.delete(h5)
    for op in (a.delete, a.next, a.prev, a.weight, lambda h: a.insert_after(h, 1),
               lambda h: a.update_weight(h, 1), lambda h: a.range_min(h, h3)):
        with pytest.raises(UsageError):
            op(h5)


def test_reversed_range_rejected(AL):
    a, hs = build(AL, range(50), fanout=4)
    with pytest.raises(UsageError):
        a.range_min(hs[30], hs[3])
    with pytest.raises(UsageError):
        a.range_max(hs[1], hs[0])


def test_fanout_validated(AL):
    with pytest.raises(UsageError):
        AL(1)


def test_fanout_from_env(AL, monkeypatch):
    monkeypatch.setenv("RZ_FANOUT", "5")
    assert AL().fanout == 5


def test_two_views():
    # close parens carry (POS_INF, NEG_INF): neutral for both queries
    from conftest import list_classes
    for AL in list_classes():
        a = AL(4)
        h1 = a.insert_after(None, 7)
        h2 = a.insert_after(h1, POS_INF, NEG_INF)
        h3 = a.insert_after(h2, 2)
        assert a.weights(h2) == (POS_INF, NEG_INF)
        assert a.range_max(h1, h3) == (h1, 7)
        assert a.range_min(h1, h3) == (h3, 2)
        assert a.range_max(h2, h2) == (h2, NEG_INF)


def test_all_spans_of_200(AL, rng):
    ws = [rng.randrange(-50, 50) for _ in range(200)]
    a, hs = build(AL, ws, fanout=4)
    for i in range(200):
        for j in range(i, 200):
            h, w = a.range_min(hs[i], hs[j])
            k, v = scan(ws, i, j, False)
            assert (h, w) == (hs[k], v)
            h, w = a.range_max(hs[i], hs[j])
            k, v = scan(ws, i, j, True)
            assert (h, w) == (hs[k], v)


def replay(AL, ops, seed, fanout, check_every=0):
    """Random ops mirrored on a plain list; every query is compared."""
    rng = random.Random(seed)
    a = AL(fanout)
    hs, ws = [], []
    queries = 0
    for step in range(ops):
        r = rng.random()
        if not hs or r < 0.35:
            k = rng.randint(0, len(hs))
            w = rng.randrange(-1000, 1000)
            if k == 0 and rng.random() < 0.5:
                h = a.insert_after(None, w)
            elif k == len(hs):
                h = a.insert_after(hs[-1] if hs else None, w)
            else:
                h = a.insert_before(hs[k], w)
            hs.insert(k, h)
            ws.insert(k, w)
        elif r < 0.55:
            k = rng.randrange(len(hs))
            a.delete(hs.pop(k))
            ws.pop(k)
        elif r < 0.7:
            k = rng.randrange(len(hs))
            w = rng.randrange(-1000, 1000)
            a.update_weight(hs[k], w)
            ws[k] = w
        else:
            i = rng.randrange(len(hs))
            j = rng.randrange(i, min(len(hs), i + 300))
            want_max = r < 0.85
            h, w = a.range_max(hs[i], hs[j]) if want_max else a.range_min(hs[i], hs[j])
            k, v = scan(ws, i, j, want_max)
            assert (h, w) == (hs[k], v), step
            queries += 1
        if check_every and step % check_every == 0:
            assert a.check_aggregates()
    assert len(a) == len(ws)
    assert contents(a) == ws
    assert list(a) == hs
    assert a.check_aggregates()
    return queries


@pytest.mark.parametrize("fanout", [2, 3, 16])
def test_random_ops_small(AL, fanout):
    replay(AL, 3000, fanout, fanout, check_every=1)


def test_random_ops_1e5(AL):
    assert replay(AL, 100_000, 7, 16) > 10_000


def test_untouched_handles_stable(AL, rng):
    a, hs = build(AL, range(300), fanout=3)
    for h in hs[100:200]:
        a.delete(h)
    for k in range(100):
        a.insert_after(hs[50], 1000 + k)
    keep = hs[:50] + hs[200:]
    assert [a.weight(h) for h in keep] == list(range(50)) + list(range(200, 300))
    assert a.next(hs[199 + 1]) == hs[201]


def test_counters(AL):
    a, hs = build(AL, [1, 2, 3])
    a.delete(hs[0])
    assert (a.n_inserts, a.n_deletes) == (3, 1)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 10**6),
                          st.integers(-10**12, 10**12)), max_size=120),
       st.integers(2, 6))
def test_hypothesis_ops(ops, fanout):
    from conftest import list_classes
    for AL in list_classes():
        a = AL(fanout)
        hs, ws = [], []
        for kind, pos, w in ops:
            if kind == 0 or not hs:
                k = pos % (len(hs) + 1)
                h = a.insert_after(hs[k - 1] if k else None, w)
                hs.insert(k, h)
                ws.insert(k, w)
            elif kind == 1:
                k = pos % len(hs)
                a.delete(hs.pop(k))
                ws.pop(k)
            elif kind == 2:
                k = pos % len(hs)
                a.update_weight(hs[k], w)
                ws[k] = w
            else:
                i = pos % len(hs)
                j = i + (w % (len(hs) - i))
                assert a.range_min(hs[i], hs[j]) == (hs[scan(ws, i, j, False)[0]], min(ws[i:j + 1]))
                assert a.range_max(hs[i], hs[j]) == (hs[scan(ws, i, j, True)[0]], max(ws[i:j + 1]))
        assert contents(a) == ws
        assert a.check_aggregates()
