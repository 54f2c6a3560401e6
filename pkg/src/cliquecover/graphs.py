"""Core graph type and clique/contraction primitives.

Graphs are simple and undirected, vertices 0..n-1, adjacency kept as one
int bitset per vertex.  All the triangle/clique machinery reduces to bitset
intersections on those rows, which is the performance model the rest of the
package (and the numba kernels in ``_kernels``) builds on.

Graph values are immutable after construction: every operation returns a new
Graph, so sharing across threads is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from . import _kernels
from .errors import InvalidEdgeError, ParameterError, UnsupportedSizeError

CANONICAL_MAX_N = 10


class Edge(NamedTuple):
    """An undirected edge, normalized to u < v."""

    u: int
    v: int


def make_edge(u, v):
    """Normalize an unordered pair into an Edge (u < v)."""
    u, v = int(u), int(v)
    if u == v:
        raise ParameterError(f"self-loop ({u},{v}) is not an edge")
    return Edge(u, v) if u < v else Edge(v, u)


def bits(mask):
    """Iterate the set bit positions of an int bitset, ascending."""
    while mask:
        low = mask & (-mask)
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset adjacency rows."""

    n: int
    adj: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ParameterError("adjacency row count != n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ParameterError(f"row {u} has neighbors >= n")
            if (row >> u) & 1:
                raise ParameterError(f"self-loop at vertex {u}")
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if not (self.adj[v] >> u) & 1:
                    raise ParameterError(f"asymmetric adjacency at ({u},{v})")

    @staticmethod
    def from_edges(n, edges):
        rows = [0] * n
        for e in edges:
            u, v = make_edge(*e)
            if v >= n:
                raise ParameterError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @staticmethod
    def empty(n):
        return Graph(n, (0,) * n)

    @staticmethod
    def complete(n):
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << v) for v in range(n)))

    def degree(self, v):
        return self.adj[v].bit_count()

    def has_edge(self, u, v):
        return u != v and bool((self.adj[u] >> v) & 1)

    def neighbors(self, v):
        return bits(self.adj[v])

    @property
    def edge_count(self):
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[Edge]:
        """Edges as normalized pairs, lexicographic order."""
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                yield Edge(u, v)

    def adj_array(self):
        """Adjacency rows as an int64 numpy array (kernel boundary)."""
        if self.n > 62:
            raise UnsupportedSizeError("kernels support n <= 62")
        return np.array(self.adj, dtype=np.int64) if self.n else np.zeros(0, np.int64)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def check_edge(g: Graph, e) -> Edge:
    """Validate that e is an edge of g; return it normalized."""
    e = make_edge(*e)
    if e.v >= g.n or not g.has_edge(e.u, e.v):
        raise InvalidEdgeError(f"({e.u},{e.v}) is not an edge of {g!r}")
    return e


def is_connected(g: Graph) -> bool:
    """One connected component.  The empty graph and a single vertex count
    as connected by convention."""
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def component_count(g: Graph) -> int:
    if g.n == 0:
        return 0
    return int(_kernels._component_count(g.adj_array(), g.n))


def components(g: Graph):
    """Vertex bitmasks of the connected components, ascending by lowest vertex."""
    out = []
    seen = 0
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def triangle_vertices(g: Graph, e) -> set:
    """T(uv): vertices forming a triangle with edge uv (one bitset AND)."""
    e = check_edge(g, e)
    return set(bits(g.adj[e.u] & g.adj[e.v]))


def triangle_count(g: Graph, e) -> int:
    e = check_edge(g, e)
    return (g.adj[e.u] & g.adj[e.v]).bit_count()


def _extend_cliques(g: Graph, base, cand_mask, k, out, limit=None):
    """Grow clique `base` by vertices from cand_mask until size k, appending
    each completion (as a sorted tuple) to out.  Candidates are consumed in
    ascending order so no clique appears twice."""
    if len(base) == k:
        out.append(tuple(sorted(base)))
        return limit is None or len(out) < limit
    for w in bits(cand_mask):
        above = cand_mask >> (w + 1) << (w + 1)
        if not _extend_cliques(g, base + [w], g.adj[w] & above, k, out, limit):
            return False
    return True


def cliques_containing_edge(g: Graph, e, k: int):
    """All k-vertex cliques containing edge e, as sorted vertex tuples in
    lexicographic order."""
    if k < 2:
        raise ParameterError("clique order k must be >= 2")
    e = check_edge(g, e)
    if k == 2:
        return [(e.u, e.v)]
    out = []
    _extend_cliques(g, [e.u, e.v], g.adj[e.u] & g.adj[e.v], k, out)
    return sorted(out)


def count_cliques_containing_edge(g: Graph, e, k: int, limit=None) -> int:
    """Like len(cliques_containing_edge) but stops early at `limit`."""
    if k < 2:
        raise ParameterError("clique order k must be >= 2")
    e = check_edge(g, e)
    if k == 2:
        return 1
    out = []
    _extend_cliques(g, [e.u, e.v], g.adj[e.u] & g.adj[e.v], k, out, limit)
    return len(out)


def enumerate_cliques(g: Graph, k: int):
    """All k-cliques of g as sorted tuples, lexicographic order."""
    if k < 1:
        raise ParameterError("clique order k must be >= 1")
    if k == 1:
        return [(v,) for v in range(g.n)]
    out = []
    for v in range(g.n):
        above = g.adj[v] >> (v + 1) << (v + 1)
        _extend_cliques(g, [v], above, k, out)
    return sorted(out)


@dataclass(frozen=True)
class ContractionMap:
    """Vertex map recorded by contract_edge: the merged pair maps to a single
    image, every vertex above the removed endpoint shifts down by one."""

    source_n: int
    target_n: int
    mapping: tuple
    merged: Edge
    image: int

    def __call__(self, v):
        return self.mapping[v]

    def map_set(self, vs):
        return {self.mapping[v] for v in vs}


def contract_edge(g: Graph, e):
    """Contract edge e: identify endpoints at min(u,v), drop max(u,v), shift
    higher vertices down, merge parallel edges.  Returns (graph, map)."""
    e = check_edge(g, e)
    if g.n < 2:
        raise ParameterError("contraction needs n >= 2")
    u, v = e
    mapping = []
    for x in range(g.n):
        if x == v:
            mapping.append(u)
        elif x > v:
            mapping.append(x - 1)
        else:
            mapping.append(x)
    edges = set()
    for a, b in g.edges():
        if (a, b) == (u, v):
            continue
        fa, fb = mapping[a], mapping[b]
        if fa != fb:
            edges.add(make_edge(fa, fb))
    h = Graph.from_edges(g.n - 1, edges)
    return h, ContractionMap(g.n, g.n - 1, tuple(mapping), e, u)


def permute_graph(g: Graph, perm) -> Graph:
    """Relabel: vertex v becomes perm[v]."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise ParameterError("perm is not a permutation of 0..n-1")
    return Graph.from_edges(g.n, ((perm[a], perm[b]) for a, b in g.edges()))


def upper_triangle_pairs(n):
    """Edge slots in column-major order: (0,1),(0,2),(1,2),(0,3),...

    This is also the bit order of the graph6 format, so slot masks and
    graph6 bit streams agree."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_to_colmajor_mask(g: Graph) -> int:
    """Pack edges into an int with slot 0 ((0,1)) as the MOST significant bit."""
    mask = 0
    for (i, j) in upper_triangle_pairs(g.n):
        mask = (mask << 1) | ((g.adj[i] >> j) & 1)
    return mask


def graph_from_colmajor_mask(mask: int, n: int) -> Graph:
    pairs = upper_triangle_pairs(n)
    n_slots = len(pairs)
    edges = [pairs[s] for s in range(n_slots) if (mask >> (n_slots - 1 - s)) & 1]
    return Graph.from_edges(n, edges)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant label: the lexicographically least adjacency bit
    string over all vertex permutations, returned as the graph6 encoding of
    the canonically relabeled graph.

    Equal outputs <=> isomorphic graphs.  Brute force over permutations,
    capped at n = 10.
    """
    if g.n > CANONICAL_MAX_N:
        raise UnsupportedSizeError(
            f"canonical_form is a permutation scan, capped at n={CANONICAL_MAX_N}")
    from .formats import encode_graph6  # deferred: formats imports this module

    if g.n <= 1:
        return encode_graph6(g).encode("ascii")
    best = int(_kernels.canonical_mask(g.adj_array(), g.n))
    return encode_graph6(graph_from_colmajor_mask(best, g.n)).encode("ascii")


def complete_multipartite_pairs(m: int) -> Graph:
    """Complete m-partite graph with parts {2i, 2i+1}: K_{2m} minus the
    perfect matching of partner pairs."""
    if m < 1:
        raise ParameterError("need at least one part")
    n = 2 * m
    full = (1 << n) - 1
    rows = []
    for v in range(n):
        partner = v ^ 1
        rows.append(full ^ (1 << v) ^ (1 << partner))
    return Graph(n, tuple(rows))
