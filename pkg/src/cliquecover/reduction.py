"""Edge-contraction reduction for graphs with every edge in two triangles.

Contracting an edge that lies in no K_4 of a connected (3,2)-covered graph
with more than 4 vertices must yield a connected (3,2)-covered graph with
one vertex fewer and at least three edges fewer.  contract_and_verify checks
those conclusions on every call and raises TheoremViolationError if any
fails; such an input would be a genuine counterexample, so it is reported
loudly rather than swallowed.  reduce_to_k4_covered iterates the step until
every remaining edge lies in a K_4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import CoverSpec, has_cover
from .errors import PreconditionError, TheoremViolationError
from .graphs import (Edge, Graph, check_edge, contract_edge,
                     count_cliques_containing_edge, is_connected)


@dataclass(frozen=True)
class ContractionReport:
    input_n: int
    input_edges: int
    edge: Edge
    output: Graph
    output_n: int
    output_edges: int
    connected: bool
    cover_32: bool
    edge_drop: int

    def to_json_dict(self):
        return {
            "n": self.input_n,
            "edges": self.input_edges,
            "contracted": [self.edge.u, self.edge.v],
            "out_n": self.output_n,
            "out_edges": self.output_edges,
            "connected": self.connected,
            "cover_32": self.cover_32,
            "edge_drop": self.edge_drop,
        }


def find_edge_not_in_k4(g: Graph):
    """Lex-least edge lying in no K_4, or None when every edge is in one
    (equivalently: g has a (4,1)-cover, or has no edges at all)."""
    for e in g.edges():
        if count_cliques_containing_edge(g, e, 4, limit=1) == 0:
            return e
    return None


def contract_and_verify(g: Graph, e) -> ContractionReport:
    """Contract e after checking all four hypotheses, then assert the
    conclusions (connected, (3,2)-covered, >= 3 edges dropped)."""
    e = check_edge(g, e)
    if not is_connected(g):
        raise PreconditionError("not_connected", "input graph is disconnected")
    if g.n <= 4:
        raise PreconditionError("too_small", f"need n > 4, got n={g.n}")
    if not has_cover(g, CoverSpec(3, 2)).holds:
        raise PreconditionError("no_cover",
                                "some edge lies in fewer than 2 triangles")
    if count_cliques_containing_edge(g, e, 4, limit=1) > 0:
        raise PreconditionError("edge_in_k4",
                                f"edge ({e.u},{e.v}) lies in a K_4")
    h, _ = contract_edge(g, e)
    connected = is_connected(h)
    cover_32 = has_cover(h, CoverSpec(3, 2)).holds
    drop = g.edge_count - h.edge_count
    report = ContractionReport(
        input_n=g.n, input_edges=g.edge_count, edge=e, output=h,
        output_n=h.n, output_edges=h.edge_count,
        connected=connected, cover_32=cover_32, edge_drop=drop)
    problems = []
    if h.n != g.n - 1:
        problems.append(f"vertex count {h.n} != {g.n - 1}")
    if not connected:
        problems.append("contraction disconnected the graph")
    if not cover_32:
        problems.append("contraction broke the two-triangles-per-edge cover")
    if drop < 3:
        problems.append(f"edge drop {drop} < 3")
    if problems:
        raise TheoremViolationError(
            "contraction conclusions failed on a valid input: "
            + "; ".join(problems))
    return report


def reduce_to_k4_covered(g: Graph):
    """Contract no-K_4 edges until none remain (or n = 4).

    Returns (final graph, report chain).  The final graph has every edge in
    a K_4; each step shrank n by 1 and the edge count by >= 3."""
    reports = []
    cur = g
    while cur.n > 4:
        e = find_edge_not_in_k4(cur)
        if e is None:
            break
        report = contract_and_verify(cur, e)
        reports.append(report)
        cur = report.output
    return cur, reports
