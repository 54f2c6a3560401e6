import itertools
import random

import pytest

from cliquecover import (CoverSpec, Graph, ParameterError, PreconditionError,
                         build_extremal, build_gtree, has_cover,
                         implied_truss_cover, random_hypertree_spec,
                         truss_decompose)
from cliquecover.cover import truss_surviving_edges
from conftest import random_graph


class TestHasCover:
    def test_k4_two_triangles(self):
        assert has_cover(Graph.complete(4), CoverSpec(3, 2)).holds

    def test_diamond_defects(self, k4_minus_edge):
        report = has_cover(k4_minus_edge, CoverSpec(3, 2))
        assert not report.holds
        assert len(report.defects) == 4
        assert all(count == 1 for _, count in report.defects)

    def test_star_construction_k4_cover(self):
        g = build_extremal(12, 4, "star")
        assert has_cover(g, CoverSpec(4, 1)).holds

    def test_octahedron(self, octahedron):
        assert has_cover(octahedron, CoverSpec(3, 2)).holds

    def test_edgeless_vacuous(self):
        assert has_cover(Graph.empty(3), CoverSpec(5, 4)).holds

    def test_tuple_spec_and_json_fields(self, k4_minus_edge):
        report = has_cover(k4_minus_edge, (3, 2))
        d = report.to_json_dict()
        assert set(d) == {"holds", "k", "l", "defects"}
        assert d["defects"][0].keys() == {"u", "v", "count"}

    def test_full_counts(self):
        report = has_cover(Graph.complete(5), CoverSpec(3, 1), full_counts=True)
        assert all(c == 3 for c in report.counts.values())

    def test_monotone_in_l(self):
        rng = random.Random(19)
        for _ in range(30):
            g = random_graph(rng, rng.randint(3, 8))
            for k in (3, 4):
                for l in (3, 2):
                    if has_cover(g, CoverSpec(k, l)).holds:
                        assert has_cover(g, CoverSpec(k, l - 1)).holds

    def test_spec_validation(self):
        with pytest.raises(ParameterError):
            CoverSpec(2, 1)
        with pytest.raises(ParameterError):
            CoverSpec(3, 0)


class TestTruss:
    def test_k5_survives(self):
        out = truss_decompose(Graph.complete(5), 3)
        assert len(out) == 1
        t, vmap = out[0]
        assert (t.n, t.edge_count) == (5, 10)
        assert vmap == (0, 1, 2, 3, 4)

    def test_diamond_cascades_to_nothing(self, k4_minus_edge):
        assert truss_decompose(k4_minus_edge, 2) == []

    def test_bowtie_whole(self, bowtie):
        out = truss_decompose(bowtie, 1)
        assert len(out) == 1
        assert out[0][0].edge_count == 6

    def test_components_split(self):
        g = Graph.from_edges(7, [(0, 1), (0, 2), (1, 2),
                                 (3, 4), (3, 5), (4, 5), (5, 6)])
        out = truss_decompose(g, 1)
        assert [t.edge_count for t, _ in out] == [3, 3]
        assert [vmap for _, vmap in out] == [(0, 1, 2), (3, 4, 5)]

    def test_soundness_supports_inside_survivor(self):
        rng = random.Random(23)
        for _ in range(40):
            g = random_graph(rng, rng.randint(4, 8), p=0.6)
            for l in (1, 2):
                survivors = truss_surviving_edges(g, l)
                adj = [0] * g.n
                for e in survivors:
                    adj[e.u] |= 1 << e.v
                    adj[e.v] |= 1 << e.u
                for e in survivors:
                    assert (adj[e.u] & adj[e.v]).bit_count() >= l

    def test_order_independence_vs_naive_fixpoint(self):
        # simultaneous-removal fixpoint and randomized sequential peels must
        # land on the same surviving edge set
        rng = random.Random(29)
        for _ in range(25):
            g = random_graph(rng, rng.randint(4, 8), p=0.55)
            l = rng.choice((1, 2))
            expected = _naive_fixpoint(g, l)
            assert truss_surviving_edges(g, l) == expected
            for seed in range(3):
                assert _random_order_peel(g, l, random.Random(seed)) == expected

    def test_maximality_union_oracle(self):
        # survivors equal the union of all edge sets where every edge has
        # >= l in-set triangles (brute force over subsets)
        fixtures = [
            Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4),
                                 (3, 4)]),
            Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3),
                                 (3, 4), (3, 5), (4, 5)]),
            Graph.complete(5),
        ]
        rng = random.Random(31)
        fixtures.append(random_graph(rng, 7, p=0.45))
        for g in fixtures:
            edges = list(g.edges())
            if len(edges) > 14:
                continue
            for l in (1, 2):
                union = set()
                for size in range(len(edges), 0, -1):
                    for subset in itertools.combinations(edges, size):
                        if set(subset) <= union:
                            continue
                        if _self_supporting(g.n, subset, l):
                            union |= set(subset)
                assert truss_surviving_edges(g, l) == union


def _self_supporting(n, subset, l):
    adj = [0] * n
    for e in subset:
        adj[e.u] |= 1 << e.v
        adj[e.v] |= 1 << e.u
    return all((adj[e.u] & adj[e.v]).bit_count() >= l for e in subset)


def _naive_fixpoint(g, l):
    edges = set(g.edges())
    while True:
        adj = [0] * g.n
        for e in edges:
            adj[e.u] |= 1 << e.v
            adj[e.v] |= 1 << e.u
        drop = {e for e in edges if (adj[e.u] & adj[e.v]).bit_count() < l}
        if not drop:
            return edges
        edges -= drop


def _random_order_peel(g, l, rng):
    edges = set(g.edges())
    adj = list(g.adj)
    changed = True
    while changed:
        changed = False
        order = sorted(edges)
        rng.shuffle(order)
        for e in order:
            if e in edges and (adj[e.u] & adj[e.v]).bit_count() < l:
                edges.discard(e)
                adj[e.u] &= ~(1 << e.v)
                adj[e.v] &= ~(1 << e.u)
                changed = True
    return edges


class TestImpliedTrussCover:
    def test_k4(self):
        assert implied_truss_cover(Graph.complete(4), 4)

    def test_star_construction(self):
        assert implied_truss_cover(build_extremal(12, 4, "star"), 4)

    def test_gtree_k5_builds(self):
        rng = random.Random(37)
        for _ in range(10):
            g = build_gtree(random_hypertree_spec(rng, 5, 14))
            assert implied_truss_cover(g, 5)

    def test_hypothesis_failure_reported(self, k4_minus_edge):
        with pytest.raises(PreconditionError) as exc:
            implied_truss_cover(k4_minus_edge, 4)
        assert exc.value.name == "no_cover"
