import random

import pytest

from conftest import BACKENDS, rand_bytes
from rzf import lcfa, mcfa, rlpf, rlz, slz
from rzf.stree import tree_class

pytestmark = pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled core not built")


def test_tree_class_resolution(monkeypatch):
    assert tree_class("python").backend == "python"
    assert tree_class("compiled").backend == "compiled"
    monkeypatch.setenv("RZ_BACKEND", "python")
    assert tree_class().backend == "python"
    with pytest.raises(ValueError):
        tree_class("fortran")


def test_pipelines_agree_on_large_inputs():
    rng = random.Random(71)
    for n, sigma in [(5000, 2), (5000, 4), (20000, 256)]:
        s = rand_bytes(rng, n, sigma)
        assert rlz(s, "python") == rlz(s, "compiled")
        assert rlpf(s, "python") == rlpf(s, "compiled")
        assert slz(s, 100, "python") == slz(s, 100, "compiled")
    s = rand_bytes(rng, 2000, 3)
    assert lcfa(s, "python") == lcfa(s, "compiled")
    assert mcfa(s, "python") == mcfa(s, "compiled")


def test_node_counts_agree():
    s = random.Random(72).randbytes(3000)
    a, b = tree_class("python")(), tree_class("compiled")()
    for c in s:
        assert a.extend(c) == b.extend(c)
    assert a.node_count == b.node_count
