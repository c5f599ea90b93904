import random

import numpy as np
import pytest

from rcfd.core import DesignParams
from rcfd.formats import SeedCache
from rcfd.oracle import (Status, exhaustive_exists, find_mols_pair, find_seed,
                         random_latin_square, transversals)

from oracles import brute_verify


@pytest.mark.parametrize("k,m,n,q", [(2, 2, 2, 2), (2, 2, 6, 2), (2, 2, 10, 2)])
def test_exhausts_known_nonexistent(k, m, n, q):
    out = exhaustive_exists(k, m, n, q, time_limit=10)
    assert out.status is Status.EXHAUSTED and out.design is None
    assert out.nodes_explored > 0


@pytest.mark.parametrize("k,m,n,q", [(2, 2, 4, 2), (1, 4, 6, 2), (2, 3, 3, 3), (3, 4, 4, 2),
                                     (2, 4, 4, 4), (2, 6, 6, 2), (2, 5, 5, 5)])
def test_finds_and_verifies(k, m, n, q):
    out = exhaustive_exists(k, m, n, q, time_limit=30)
    assert out.found
    D = out.design
    assert D.params == DesignParams(k, m, n, q)
    assert brute_verify(D.grid.tolist(), q)
    assert D.cell(0, 0) == (0,) * k


def test_symmetry_reduction_shape():
    D = exhaustive_exists(2, 4, 4, 2).design
    codes = D.grid @ np.array([2, 1])
    assert list(codes[0]) == sorted(codes[0])
    assert list(codes[1:, 0]) == sorted(codes[1:, 0])


def test_inadmissible_costs_nothing():
    out = exhaustive_exists(3, 2, 2, 2)
    assert out.status is Status.EXHAUSTED and out.nodes_explored == 0


def test_node_budget_gives_timeout():
    out = exhaustive_exists(2, 6, 6, 2, max_nodes=50)
    assert out.status is Status.TIMEOUT and not out.found


def test_time_budget_gives_timeout():
    out = exhaustive_exists(2, 6, 6, 6, time_limit=0.2)
    assert out.status is Status.TIMEOUT


def test_random_latin_square():
    for v in (1, 4, 9):
        L = random_latin_square(v, random.Random(v))
        for line in list(L) + list(L.T):
            assert sorted(line) == list(range(v))


def test_transversals_of_cyclic_square():
    L = (np.arange(5)[:, None] + np.arange(5)[None, :]) % 5
    # the cyclic square of order 5 has 15 transversals
    assert len(transversals(L)) == 15
    L4 = (np.arange(4)[:, None] + np.arange(4)[None, :]) % 4
    assert transversals(L4) == []


@pytest.mark.parametrize("v", [5, 7, 10])
def test_find_mols_pair(v):
    out = find_mols_pair(v, time_limit=30)
    assert out.found and out.design.is_regular and out.design.m == v


def test_find_seed_stores(tmp_path):
    cache = SeedCache(tmp_path)
    out = find_seed(DesignParams(2, 4, 4, 2), cache=cache)
    assert out.found
    assert cache.load(DesignParams(2, 4, 4, 2)) == out.design
