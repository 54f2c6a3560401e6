"""Compiled kernels and their interpreted fallbacks must agree bit for bit."""

import random

import numpy as np
import pytest

from cliquecover import _kernels
from cliquecover.graphs import Graph
from cliquecover.oracle import _slot_arrays
from conftest import random_graph

needs_numba = pytest.mark.skipif(
    not _kernels.using_numba(),
    reason="fallback parity is only testable when numba is active")


def _py(fn):
    return fn.py_func if hasattr(fn, "py_func") else fn


class TestPopcount:
    def test_against_bit_count(self):
        rng = random.Random(0)
        fn = _py(_kernels._popcount)
        for _ in range(200):
            x = rng.getrandbits(45)
            assert fn(x) == x.bit_count()


class TestComponentCount:
    def test_matches_python(self):
        rng = random.Random(1)
        for _ in range(30):
            g = random_graph(rng, rng.randint(1, 8), p=0.3)
            from cliquecover.graphs import components

            got = _kernels._component_count(g.adj_array(), g.n)
            assert int(got) == len(components(g))


@needs_numba
class TestFallbackParity:
    def test_canonical_mask(self):
        rng = random.Random(2)
        for _ in range(10):
            g = random_graph(rng, rng.randint(2, 6))
            adj = g.adj_array()
            compiled = int(_kernels.canonical_mask(adj, g.n))
            interpreted = int(_kernels.canonical_mask.py_func(adj, g.n))
            assert compiled == interpreted

    def test_sweep_subsets(self):
        _, eu, ev = _slot_arrays(5)
        out_c = np.empty(64, np.int64)
        out_p = np.empty(64, np.int64)
        for m in (4, 5, 6):
            a = _kernels.sweep_subsets(5, 3, 1, m, 10, 0, eu, ev, 0, 1, -1,
                                       1, out_c)
            b = _kernels.sweep_subsets.py_func(5, 3, 1, m, 10, 0, eu, ev, 0,
                                               1, -1, 1, out_p)
            assert (int(a[0]), int(a[1]), int(a[2])) == \
                (int(b[0]), int(b[1]), int(b[2]))
            assert list(out_c[:a[0]]) == list(out_p[:b[0]])

    def test_scan_cover_implication(self):
        _, eu, ev = _slot_arrays(5)
        bad_c = np.zeros(4, np.int64)
        bad_p = np.zeros(4, np.int64)
        a = _kernels.scan_cover_implication(5, 3, eu, ev, bad_c)
        b = _kernels.scan_cover_implication.py_func(5, 3, eu, ev, bad_p)
        assert (int(a[0]), int(a[1])) == (int(b[0]), int(b[1]))


class TestCanonicalMaskSemantics:
    def test_complete_graph_all_ones(self):
        g = Graph.complete(4)
        mask = int(_kernels.canonical_mask(g.adj_array(), 4))
        assert mask == (1 << 6) - 1

    def test_empty_graph_zero(self):
        g = Graph.empty(4)
        assert int(_kernels.canonical_mask(g.adj_array(), 4)) == 0
