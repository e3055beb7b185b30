"""Rightmost Lempel-Ziv factorizations on BP-linked suffix trees.

Streaming builders for the rightmost longest-previous-factor array, the
online and sliding-window rightmost LZ factorizations, and the longest and
minimum closed factorization arrays.
"""

from .closed import Lcfa, LcfaEntry, Mcfa, lcfa, mcfa
from .errors import OracleRefused, UsageError
from .factors import Copy, Literal, decode
from .rlpf import Rlpf, RlpfEntry, rlpf
from .rlz import Rlz, rlz
from .slz import Slz, slz
from .stree import BACKEND, SuffixTree

__all__ = [
    "BACKEND", "Copy", "Lcfa", "LcfaEntry", "Literal", "Mcfa", "OracleRefused",
    "Rlpf", "RlpfEntry", "Rlz", "Slz", "SuffixTree", "UsageError", "decode",
    "lcfa", "mcfa", "rlpf", "rlz", "slz",
]
__version__ = "0.1.0"
