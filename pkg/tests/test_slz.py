import random

import pytest

from conftest import rand_bytes
from rzf.errors import UsageError
from rzf.factors import Copy, Literal, decode
from rzf.oracle import oracle_slz
from rzf.rlz import rlz
from rzf.slz import Slz, slz
from test_oracle import S, SLZ3_S


def run(s, d, backend, **kw):
    z = Slz(d, backend, **kw)
    out = []
    for c in s:
        out += z.push(c)
    return out + z.finish(), z


def test_examples(backend):
    assert slz(S, 3, backend) == SLZ3_S
    assert slz(b"ababab", 2, backend) == [Literal(97), Literal(98), Copy(4, 2)]
    assert slz(b"a" * 100, 3, backend) == [Literal(97), Copy(99, 1)]
    assert slz(b"aaaab", 2, backend) == [Literal(97), Copy(3, 1), Literal(98)]


def test_window_validated(backend):
    with pytest.raises(UsageError):
        Slz(0, backend)


def test_reference_in_lrs_zone(backend):
    # the rightmost reference begins inside the current repeating suffix
    s = b"aaabaaaa"
    assert slz(s, 8, backend) == rlz(s, backend) == oracle_slz(s, 8)


@pytest.mark.parametrize("d", [1, 2, 3, 5, 8, 16])
def test_random_vs_oracle(backend, d):
    rng = random.Random(40 + d)
    for _ in range(120):
        s = rand_bytes(rng, rng.randint(1, 256), rng.choice([2, 4, 26, 256]))
        f = slz(s, d, backend)
        assert f == oracle_slz(s, d)
        assert decode(f) == s


def test_periodic_inputs(backend):
    rng = random.Random(47)
    for _ in range(80):
        d = rng.randint(1, 9)
        p = rng.randint(1, d + 2)
        unit = rand_bytes(rng, p, 3)
        s = rand_bytes(rng, rng.randint(0, 10), 3) + unit * rng.randint(3, 40)
        s += rand_bytes(rng, rng.randint(0, 10), 3)
        assert slz(s, d, backend) == oracle_slz(s, d)


def test_long_factors_use_periodic_path(backend):
    f, z = run(b"ab" * 200 + b"c" + b"ab" * 50, 4, backend)
    assert f == oracle_slz(b"ab" * 200 + b"c" + b"ab" * 50, 4)
    assert max(x.length for x in f if isinstance(x, Copy)) > 8


def test_eager_rebuild_same_output(backend):
    rng = random.Random(48)
    for _ in range(100):
        d = rng.randint(1, 12)
        s = rand_bytes(rng, rng.randint(1, 200), rng.choice([2, 3, 26]))
        lazy, _ = run(s, d, backend)
        eager, z = run(s, d, backend, eager=True)
        assert lazy == eager
        assert z.rebuilds >= 1


def test_no_rebuild_when_short(backend):
    _, z = run(bytes(range(50)), 64, backend)
    assert z.rebuilds == 0


def test_full_window_is_rlz(backend):
    rng = random.Random(49)
    for _ in range(100):
        s = rand_bytes(rng, rng.randint(1, 150), rng.choice([2, 4, 256]))
        assert slz(s, len(s) + rng.randint(0, 5), backend) == rlz(s, backend)


@pytest.mark.parametrize("d", [4, 16, 32])
def test_space_bound(backend, d):
    rng = random.Random(d)
    for s in [rng.randbytes(100 * d), b"x" * (100 * d), b"xy" * (50 * d),
              rand_bytes(rng, 100 * d, 2)]:
        f, z = run(s, d, backend)
        assert z.peak_nodes <= 8 * d
        assert z.peak_buffer <= 4 * d
        assert decode(f) == s


def test_leftmost_distances(backend):
    rng = random.Random(50)
    for _ in range(100):
        d = rng.randint(1, 10)
        s = rand_bytes(rng, rng.randint(1, 150), 2)
        f, z = run(s, d, backend, leftmost=True)
        pos = 0
        k = 0
        for x in f:
            if isinstance(x, Copy):
                lo = max(0, pos - d)
                want = pos - s.find(s[pos:pos + x.length], lo, pos + x.length - 1)
                assert z.leftmost[k] == want
                k += 1
                pos += x.length
            else:
                pos += 1
        assert k == len(z.leftmost)
