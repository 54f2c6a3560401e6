"""Clique edge covers and triangle-support (truss) decomposition.

A graph has a (k,l)-cover when every edge lies in at least l distinct
k-vertex cliques.  An l-truss is a maximal connected subgraph in which every
edge lies in at least l triangles, with supports counted inside the
surviving subgraph (edges are peeled to a fixpoint, then split into
components)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError, PreconditionError
from .graphs import Graph, bits, count_cliques_containing_edge, make_edge


@dataclass(frozen=True)
class CoverSpec:
    """Requirement: every edge in at least l copies of K_k."""

    k: int
    l: int = 1

    def __post_init__(self):
        if self.k < 3:
            raise ParameterError("cover clique order k must be >= 3")
        if self.l < 1:
            raise ParameterError("cover multiplicity l must be >= 1")


@dataclass(frozen=True)
class CoverReport:
    holds: bool
    k: int
    l: int
    defects: tuple = ()
    counts: dict | None = None

    def __bool__(self):
        return self.holds

    def to_json_dict(self):
        return {
            "holds": self.holds,
            "k": self.k,
            "l": self.l,
            "defects": [{"u": e.u, "v": e.v, "count": c} for e, c in self.defects],
        }


def has_cover(g: Graph, spec, full_counts=False) -> CoverReport:
    """Check the (k,l)-cover condition edge by edge.

    Edgeless graphs hold vacuously.  Clique counting stops early at l per
    edge unless full_counts is set, in which case exact per-edge counts are
    reported."""
    if isinstance(spec, tuple):
        spec = CoverSpec(*spec)
    defects = []
    counts = {} if full_counts else None
    limit = None if full_counts else spec.l
    for e in g.edges():
        c = count_cliques_containing_edge(g, e, spec.k, limit=limit)
        if full_counts:
            counts[e] = c
        if c < spec.l:
            defects.append((e, c))
    return CoverReport(holds=not defects, k=spec.k, l=spec.l,
                       defects=tuple(defects), counts=counts)


def edge_support_in(adj, e) -> int:
    """Triangle count of edge e against an adjacency-row list."""
    return (adj[e.u] & adj[e.v]).bit_count()


def truss_decompose(g: Graph, l: int):
    """Peel edges of support < l to a fixpoint; return the surviving
    subgraph's connected components as (Graph, vertex_map) pairs, where
    vertex_map[i] is the original vertex behind local vertex i.

    The surviving edge set is the unique maximum edge set in which every
    edge has >= l triangles, so the result does not depend on peel order.
    Returns [] when nothing survives."""
    if l < 1:
        raise ParameterError("truss threshold l must be >= 1")
    adj = list(g.adj)
    queue = [e for e in g.edges() if edge_support_in(adj, e) < l]
    removed = set()
    while queue:
        e = queue.pop()
        if e in removed or not (adj[e.u] >> e.v) & 1:
            continue
        removed.add(e)
        adj[e.u] &= ~(1 << e.v)
        adj[e.v] &= ~(1 << e.u)
        # only edges that lost a triangle with e can drop below l
        for w in bits(adj[e.u] & adj[e.v]):
            for x in (e.u, e.v):
                e2 = make_edge(w, x)
                if edge_support_in(adj, e2) < l:
                    queue.append(e2)
    survivors = [e for e in g.edges() if e not in removed]
    if not survivors:
        return []
    # components of the surviving subgraph (its own edges, not induced ones)
    comp_of = {}
    comps = []
    for e in survivors:
        a = comp_of.get(e.u)
        b = comp_of.get(e.v)
        if a is None and b is None:
            idx = len(comps)
            comps.append({e.u, e.v})
            comp_of[e.u] = comp_of[e.v] = idx
        elif a is None:
            comps[b].add(e.u)
            comp_of[e.u] = b
        elif b is None:
            comps[a].add(e.v)
            comp_of[e.v] = a
        elif a != b:
            keep, drop = min(a, b), max(a, b)
            for v in comps[drop]:
                comp_of[v] = keep
            comps[keep] |= comps[drop]
            comps[drop] = set()
    out = []
    for idx, verts in enumerate(comps):
        if not verts:
            continue
        vmap = sorted(verts)
        local = {v: i for i, v in enumerate(vmap)}
        edges = [(local[e.u], local[e.v]) for e in survivors
                 if comp_of[e.u] == idx]
        out.append((Graph.from_edges(len(vmap), edges), tuple(vmap)))
    out.sort(key=lambda pair: pair[1])
    return out


def truss_surviving_edges(g: Graph, l: int):
    """The peeled-to-fixpoint edge set itself (union over all trusses)."""
    survivors = set()
    for truss, vmap in truss_decompose(g, l):
        for a, b in truss.edges():
            survivors.add(make_edge(vmap[a], vmap[b]))
    return survivors


def implied_truss_cover(g: Graph, k: int) -> bool:
    """Runnable check of the implication: a graph where every edge is in a
    K_k also has every edge in k-2 triangles.

    The hypothesis is verified first; a hypothesis failure raises rather
    than guessing at an answer."""
    if k < 3:
        raise ParameterError("k must be >= 3")
    pre = has_cover(g, CoverSpec(k, 1))
    if not pre.holds:
        raise PreconditionError(
            "no_cover",
            f"hypothesis failed: {len(pre.defects)} edge(s) in no K_{k}")
    return has_cover(g, CoverSpec(3, k - 2)).holds
