import random

from conftest import rand_bytes
from rzf.closed import Mcfa, lcfa, mcfa, suffix_borders
from rzf.oracle import closed_suffixes, oracle_lcfa, oracle_mcfa
from test_oracle import LCFA_S, MCFA_S, S


def test_examples(backend):
    assert [tuple(e) for e in lcfa(S, backend)] == LCFA_S
    assert mcfa(S, backend) == MCFA_S
    assert [tuple(e) for e in lcfa(b"aa", backend)] == [(1, 1), (2, 1)]
    assert [tuple(e) for e in lcfa(b"ab", backend)] == [(1, 1), (1, 2)]
    assert mcfa(b"aaaaa", backend) == [1] * 5


def test_aabaa_candidates(backend):
    z = Mcfa(backend)
    for c in b"aabaa":
        z.push(c)
    assert sorted(z.last_candidates) == [1, 2, 5]
    assert z.mcf[-1] == 1


def test_suffix_borders():
    # suffixes of "abaab" ending at q: b, ab, aab, baab
    text = b"abaab"
    beta = suffix_borders(text, 4, 4)
    assert beta[1:] == [0, 0, 0, 1]


def test_random_vs_oracle(backend):
    rng = random.Random(61)
    for _ in range(200):
        s = rand_bytes(rng, rng.randint(1, 96), rng.choice([2, 3, 4, 26]))
        assert [tuple(e) for e in lcfa(s, backend)] == oracle_lcfa(s)
        assert mcfa(s, backend) == oracle_mcfa(s)


def test_candidates_complete_and_closed(backend):
    rng = random.Random(62)
    for _ in range(100):
        s = rand_bytes(rng, rng.randint(1, 64), rng.choice([2, 3]))
        z = Mcfa(backend)
        want = closed_suffixes(s)
        prev = 0
        for q, c in enumerate(s):
            got = z.push(c)
            assert sorted(set(z.last_candidates)) == want[q]
            assert 1 <= got <= prev + 1
            prev = got
