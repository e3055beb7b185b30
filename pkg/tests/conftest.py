import random

import pytest

from rzf import agg_list
from rzf.stree import CSuffixTree

BACKENDS = ["python"] + (["compiled"] if CSuffixTree is not None else [])


def list_classes():
    out = [agg_list.AggList]
    if CSuffixTree is not None:
        from rzf._core import AggList
        out.append(AggList)
    return out


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture(params=list_classes(), ids=lambda c: c.__module__.split(".")[-1])
def AL(request):
    return request.param


def rand_bytes(rng, n, sigma):
    alpha = bytes(range(256)) if sigma == 256 else b"abcdefghijklmnopqrstuvwxyz"[:sigma]
    return bytes(rng.choice(alpha) for _ in range(n))


@pytest.fixture
def rng():
    return random.Random(20261016)
