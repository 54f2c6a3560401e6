import itertools
import random

import pytest

from cliquecover import (Graph, InvalidEdgeError, ParameterError,
                         UnsupportedSizeError, canonical_form,
                         cliques_containing_edge, complete_multipartite_pairs,
                         contract_edge, count_cliques_containing_edge,
                         enumerate_cliques, is_connected, permute_graph,
                         triangle_vertices)
from conftest import random_graph


class TestGraphType:
    def test_validation(self):
        with pytest.raises(ParameterError):
            Graph(2, (0b10,))  # row count mismatch
        with pytest.raises(ParameterError):
            Graph(2, (0b01, 0b10))  # self loops
        with pytest.raises(ParameterError):
            Graph(2, (0b10, 0b00))  # asymmetric
        with pytest.raises(ParameterError):
            Graph.from_edges(2, [(0, 2)])  # out of range

    def test_edges_lexicographic(self):
        g = Graph.from_edges(4, [(2, 3), (0, 3), (0, 1)])
        assert list(g.edges()) == [(0, 1), (0, 3), (2, 3)]
        assert g.edge_count == 3
        assert g.degree(0) == 2


class TestConnectivity:
    def test_complete_graph(self):
        assert is_connected(Graph.complete(4))

    def test_two_triangles(self):
        g = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2),
                                 (3, 4), (3, 5), (4, 5)])
        assert not is_connected(g)

    def test_conventions(self):
        assert is_connected(Graph.empty(1))
        assert is_connected(Graph.empty(0))
        assert not is_connected(Graph.empty(2))


class TestTriangles:
    def test_complete(self):
        g = Graph.complete(4)
        assert triangle_vertices(g, (0, 1)) == {2, 3}

    def test_single_triangle(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        assert triangle_vertices(g, (0, 1)) == {2}

    def test_triangle_free(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert triangle_vertices(g, (0, 1)) == set()

    def test_invalid_edge(self):
        with pytest.raises(InvalidEdgeError):
            triangle_vertices(Graph.from_edges(3, [(0, 1)]), (1, 2))

    def test_matches_clique_count_everywhere(self):
        rng = random.Random(7)
        for _ in range(25):
            g = random_graph(rng, rng.randint(2, 8))
            for e in g.edges():
                assert len(triangle_vertices(g, e)) == \
                    count_cliques_containing_edge(g, e, 3)


class TestCliquesContainingEdge:
    def test_k5_triangles(self):
        got = cliques_containing_edge(Graph.complete(5), (0, 1), 3)
        assert got == [(0, 1, 2), (0, 1, 3), (0, 1, 4)]

    def test_no_k4_in_diamond(self, k4_minus_edge):
        for e in k4_minus_edge.edges():
            assert cliques_containing_edge(k4_minus_edge, e, 4) == []

    def test_octahedron_two_triangles_per_edge(self, octahedron):
        # independent count: brute force over all third vertices
        for e in octahedron.edges():
            brute = sum(1 for w in range(6)
                        if octahedron.has_edge(e.u, w)
                        and octahedron.has_edge(e.v, w))
            assert brute == 2
            assert len(cliques_containing_edge(octahedron, e, 3)) == 2

    def test_parameter_error(self):
        with pytest.raises(ParameterError):
            cliques_containing_edge(Graph.complete(3), (0, 1), 1)

    def test_count_short_circuit(self):
        g = Graph.complete(6)
        assert count_cliques_containing_edge(g, (0, 1), 3, limit=2) == 2
        assert count_cliques_containing_edge(g, (0, 1), 3) == 4


class TestEnumerateCliques:
    def test_k4(self):
        assert enumerate_cliques(Graph.complete(4), 3) == [
            (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

    def test_no_cliques(self):
        assert enumerate_cliques(Graph.from_edges(3, [(0, 1)]), 3) == []


class TestContraction:
    def test_triangle_to_edge(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        h, cmap = contract_edge(g, (0, 1))
        assert (h.n, h.edge_count) == (2, 1)
        assert cmap.mapping == (0, 0, 1)
        assert cmap.image == 0

    def test_k4_to_k3(self):
        h, _ = contract_edge(Graph.complete(4), (1, 3))
        assert h.adj == Graph.complete(3).adj

    def test_octahedron_to_k5_minus_edge(self, octahedron):
        h, _ = contract_edge(octahedron, (0, 2))
        assert (h.n, h.edge_count) == (5, 9)
        # K_5 minus exactly one edge: one vertex pair non-adjacent
        non_edges = [(u, v) for u in range(5) for v in range(u + 1, 5)
                     if not h.has_edge(u, v)]
        assert len(non_edges) == 1

    def test_edge_drop_identity(self):
        rng = random.Random(11)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 8))
            edges = list(g.edges())
            if not edges:
                continue
            e = rng.choice(edges)
            h, cmap = contract_edge(g, e)
            t = len(triangle_vertices(g, e))
            assert h.n == g.n - 1
            assert h.edge_count == g.edge_count - 1 - t
            assert cmap.map_set({e.u, e.v}) == {cmap.image}


class TestCanonicalForm:
    def test_relabelling_invariance(self):
        a = Graph.from_edges(3, [(0, 1), (1, 2)])
        b = Graph.from_edges(3, [(1, 0), (0, 2)])
        assert canonical_form(a) == canonical_form(b)

    def test_distinguishes_edge_counts(self, k4_minus_edge):
        assert canonical_form(Graph.complete(4)) != canonical_form(k4_minus_edge)

    def test_eleven_classes_on_four_vertices(self):
        pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
        forms = set()
        for bits in itertools.product((0, 1), repeat=6):
            edges = [p for p, b in zip(pairs, bits) if b]
            forms.add(canonical_form(Graph.from_edges(4, edges)))
        assert len(forms) == 11

    def test_exhaustive_permutation_invariance_small(self):
        rng = random.Random(3)
        for n in range(2, 7):
            g = random_graph(rng, n)
            base = canonical_form(g)
            for perm in itertools.permutations(range(n)):
                assert canonical_form(permute_graph(g, perm)) == base

    def test_sampled_permutation_invariance_n8(self):
        rng = random.Random(5)
        g = random_graph(rng, 8)
        base = canonical_form(g)
        for _ in range(60):
            perm = list(range(8))
            rng.shuffle(perm)
            assert canonical_form(permute_graph(g, perm)) == base

    def test_size_cap(self):
        with pytest.raises(UnsupportedSizeError):
            canonical_form(Graph.empty(11))


class TestCompleteMultipartitePairs:
    def test_single_part(self):
        g = complete_multipartite_pairs(1)
        assert (g.n, g.edge_count) == (2, 0)

    def test_octahedron(self):
        g = complete_multipartite_pairs(3)
        assert (g.n, g.edge_count) == (6, 12)

    def test_ten_vertices_forty_edges(self):
        g = complete_multipartite_pairs(5)
        assert (g.n, g.edge_count) == (10, 40)

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_degree_and_support_regularity(self, m):
        g = complete_multipartite_pairs(m)
        assert all(g.degree(v) == 2 * m - 2 for v in range(2 * m))
        for e in g.edges():
            assert len(triangle_vertices(g, e)) == 2 * m - 4
