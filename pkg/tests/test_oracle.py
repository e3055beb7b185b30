import pytest

from rzf.errors import OracleRefused
from rzf.factors import Copy, Literal
from rzf.oracle import (closed_suffixes, oracle_lcfa, oracle_mcfa, oracle_rlpf,
                        oracle_rlz, oracle_slz)

S = b"abaababaabba"

# frozen by hand from the definitions
RLPF_S = [(0, 1), (0, 1), (1, 2), (1, 1), (2, 3), (3, 3),
          (2, 2), (3, 2), (4, 5), (5, 5), (1, 1), (2, 4)]
RLZ_S = [Literal(97), Literal(98), Copy(1, 2), Copy(3, 3), Copy(4, 5), Copy(2, 4)]
LCFA_S = [(1, 1), (1, 2), (3, 1), (2, 3), (5, 1), (6, 1),
          (4, 2), (5, 2), (9, 1), (10, 1), (2, 2), (6, 2)]
MCFA_S = [1, 2, 1, 2, 1, 1, 2, 2, 1, 1, 2, 2]
SLZ3_S = [Literal(97), Literal(98), Copy(1, 2), Copy(3, 3), Copy(2, 2),
          Copy(2, 3), Copy(1, 1), Copy(1, 3)]


def test_rlpf_example():
    assert oracle_rlpf(S) == RLPF_S


def test_rlz_example():
    assert oracle_rlz(S) == RLZ_S
    assert oracle_rlz(b"a") == [Literal(97)]
    assert oracle_rlz(b"aaaa") == [Literal(97), Copy(3, 1)]


def test_closed_examples():
    assert oracle_lcfa(S) == LCFA_S
    assert oracle_mcfa(S) == MCFA_S
    assert oracle_lcfa(b"aa") == [(1, 1), (2, 1)]
    assert oracle_lcfa(b"ab") == [(1, 1), (1, 2)]
    assert oracle_mcfa(b"aaaaa") == [1] * 5
    assert closed_suffixes(b"aabaa")[-1] == [1, 2, 5]
    assert oracle_mcfa(b"aabaa")[-1] == 1


def test_slz_examples():
    assert oracle_slz(S, 3) == SLZ3_S
    assert oracle_slz(b"ababab", 2) == [Literal(97), Literal(98), Copy(4, 2)]
    assert oracle_slz(b"a" * 100, 3) == [Literal(97), Copy(99, 1)]
    assert oracle_slz(b"aaaab", 2) == [Literal(97), Copy(3, 1), Literal(98)]


def test_slz_full_window_is_rlz():
    for s in [S, b"abcabcabd", b"aaaa", bytes(range(20)) * 3]:
        assert oracle_slz(s, len(s)) == oracle_rlz(s)


def test_cap():
    with pytest.raises(OracleRefused):
        oracle_rlz(b"a" * 513)
    with pytest.raises(OracleRefused):
        oracle_mcfa(b"ab" * 10, cap=8)
    assert oracle_rlz(b"a" * 600, cap=None)[-1] == Copy(599, 1)


def test_bad_window():
    with pytest.raises(ValueError):
        oracle_slz(b"ab", 0)
