import random

from conftest import rand_bytes
from rzf.factors import Copy, Literal, decode
from rzf.oracle import oracle_rlz
from rzf.rlz import Rlz, rlz
from test_oracle import RLZ_S, S


def test_example(backend):
    assert rlz(S, backend) == RLZ_S


def test_trivial(backend):
    assert rlz(b"ab", backend) == [Literal(97), Literal(98)]
    assert rlz(b"aaaa", backend) == [Literal(97), Copy(3, 1)]
    assert rlz(b"", backend) == []


def test_pending_factor_inside_lrs(backend):
    # the final factor's rightmost occurrence overlaps it and has no leaf
    assert rlz(b"aaabaaaa", backend) == [Literal(97), Copy(2, 1), Literal(98),
                                         Copy(3, 4), Copy(1, 1)]


def test_emits_online(backend):
    z = Rlz(backend)
    got = [z.push(c) for c in b"abab"]
    assert got == [[Literal(97)], [Literal(98)], [], []]
    assert z.push(ord("c")) == [Copy(2, 2), Literal(99)]
    assert z.push(ord("a")) == []
    assert z.finish() == [Copy(1, 3)]
    assert z.finish() == []


def test_random_vs_oracle(backend):
    rng = random.Random(31)
    for _ in range(300):
        s = rand_bytes(rng, rng.randint(1, 200), rng.choice([2, 4, 26, 256]))
        f = rlz(s, backend)
        assert f == oracle_rlz(s)
        assert decode(f) == s


def test_leftmost_distances(backend):
    rng = random.Random(32)
    for _ in range(100):
        s = rand_bytes(rng, rng.randint(1, 120), 2)
        z = Rlz(backend, leftmost=True)
        out = []
        for c in s:
            out += z.push(c)
        out += z.finish()
        copies = [f for f in out if isinstance(f, Copy)]
        assert len(z.leftmost) == len(copies)
        pos = 0
        k = 0
        for f in out:
            if isinstance(f, Copy):
                want = pos - s.find(s[pos:pos + f.length], 0, pos + f.length - 1)
                assert z.leftmost[k] == want
                assert z.leftmost[k] >= f.dist
                k += 1
                pos += f.length
            else:
                pos += 1
