import random

from conftest import rand_bytes
from rzf.oracle import oracle_rlpf
from rzf.rlpf import Rlpf, RlpfEntry, rlpf
from test_oracle import RLPF_S, S


def test_example(backend):
    assert [tuple(e) for e in rlpf(S, backend)] == RLPF_S


def test_unary(backend):
    assert rlpf(b"aaaa", backend) == [RlpfEntry(0, 1), RlpfEntry(1, 1),
                                      RlpfEntry(2, 1), RlpfEntry(3, 1)]


def test_streaming_matches_batch(backend):
    r = Rlpf(backend)
    assert [r.push(c) for c in S] == rlpf(S, backend)


def test_random_vs_oracle(backend):
    rng = random.Random(21)
    for _ in range(300):
        s = rand_bytes(rng, rng.randint(1, 128), rng.choice([2, 4, 26, 256]))
        assert [tuple(e) for e in rlpf(s, backend)] == oracle_rlpf(s)


def test_entry_invariants(backend):
    rng = random.Random(22)
    for _ in range(100):
        s = rand_bytes(rng, rng.randint(1, 100), 2)
        prev = 0
        for i, (ln, dist) in enumerate(rlpf(s, backend)):
            assert (ln == 0) == (dist == 1) or ln > 0
            assert ln <= prev + 1
            prev = ln
            if ln:
                j = i - dist
                assert s[i - ln + 1:i + 1] == s[j - ln + 1:j + 1]
                # nothing ends strictly between j and i
                assert all(s[k - ln + 1:k + 1] != s[i - ln + 1:i + 1]
                           for k in range(j + 1, i) if k - ln + 1 >= 0)
