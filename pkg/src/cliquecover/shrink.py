"""Clique-peeling lower-bound procedure and its certificate verifier.

Starting from one k-clique, each step picks an edge crossing from the
already-covered vertex set into the frontier, covers it with a k-clique, and
charges that step C(k,2) - C(x,2) edges, where x counts the clique's
already-covered vertices.  The resulting total

    bound = C(k,2) + sum_j (C(k,2) - C(x_j, 2))

is sandwiched between the closed-form minimum and |E| for every connected
input whose edges all lie in k-cliques, under ANY edge/clique choices.  Two
deterministic policies are provided so tests can exercise that freedom:
'lex' (reproducible first choice) and 'max_overlap' (largest x_j, which
weakens each step's charge as much as possible).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .cover import CoverSpec, has_cover
from .errors import ParameterError, PreconditionError
from .extremal import decompose
from .graphs import (Edge, Graph, bits, cliques_containing_edge,
                     enumerate_cliques, is_connected)

POLICIES = ("lex", "max_overlap")


@dataclass(frozen=True)
class ShrinkStep:
    edge: Edge           # normalized; exactly one endpoint was covered
    clique: tuple        # the k-clique chosen to cover it
    x: int               # |clique ∩ covered|, in 1..k-1

    def to_json_dict(self):
        return {"e": [self.edge.u, self.edge.v],
                "clique": list(self.clique), "x": self.x}


@dataclass(frozen=True)
class ShrinkTrace:
    k: int
    n: int
    c0: tuple
    steps: tuple
    bound: int
    cliques_inspected: int = 0

    @property
    def step_count(self):
        return len(self.steps)

    def to_json_dict(self):
        return {
            "k": self.k,
            "c0": list(self.c0),
            "steps": [s.to_json_dict() for s in self.steps],
            "bound": self.bound,
        }


def run_procedure(g: Graph, k: int, policy: str = "lex") -> ShrinkTrace:
    """Run the peeling procedure to completion and return its transcript.

    Guarantees (for connected g with every edge in a K_k):
    closed-form minimum <= bound <= |E(g)|."""
    if policy not in POLICIES:
        raise ParameterError(f"policy must be one of {POLICIES}")
    if k < 3:
        raise ParameterError("k must be >= 3")
    if g.n < k:
        raise PreconditionError("too_small", f"need n >= k, got n={g.n}")
    if not is_connected(g):
        raise PreconditionError("not_connected", "input graph is disconnected")
    if not has_cover(g, CoverSpec(k, 1)).holds:
        raise PreconditionError("no_cover", f"some edge lies in no K_{k}")
    all_k = enumerate_cliques(g, k)
    c0 = all_k[0]
    covered = 0
    for v in c0:
        covered |= 1 << v
    full = (1 << g.n) - 1
    steps = []
    inspected = len(all_k)
    bound = comb(k, 2)
    while covered != full:
        edge = _crossing_edge(g, covered)
        candidates = cliques_containing_edge(g, edge, k)
        inspected += len(candidates)
        if policy == "lex":
            clique = candidates[0]
        else:
            clique = max(candidates,
                         key=lambda c: (sum(1 for v in c if (covered >> v) & 1),
                                        [-v for v in c]))
        x = sum(1 for v in clique if (covered >> v) & 1)
        steps.append(ShrinkStep(edge=edge, clique=clique, x=x))
        bound += comb(k, 2) - comb(x, 2)
        for v in clique:
            covered |= 1 << v
    return ShrinkTrace(k=k, n=g.n, c0=c0, steps=tuple(steps), bound=bound,
                       cliques_inspected=inspected)


def _crossing_edge(g: Graph, covered) -> Edge:
    """Lex-least (v, u) with v covered, u uncovered, uv an edge."""
    frontier = ((1 << g.n) - 1) & ~covered
    for v in bits(covered):
        row = g.adj[v] & frontier
        if row:
            u = (row & (-row)).bit_length() - 1
            return Edge(v, u) if v < u else Edge(u, v)
    raise PreconditionError("not_connected",
                            "no crossing edge: graph is disconnected")


@dataclass(frozen=True)
class TraceCheck:
    ok: bool
    step: int | None = None     # first failing step (0 = initialization)
    reason: str | None = None

    def __bool__(self):
        return self.ok


def verify_trace(g: Graph, t: ShrinkTrace) -> TraceCheck:
    """Independently replay a transcript against g.

    Checks each clique is a clique of g containing its edge with the claimed
    frontier crossing and x value, that no chosen edge was already covered,
    that every vertex ends covered, that the x' sum identity holds exactly,
    and that the bound recomputes."""

    def fail(step, reason):
        return TraceCheck(False, step=step, reason=reason)

    if t.n != g.n:
        return fail(0, "vertex count mismatch")
    if not _is_clique(g, t.c0) or len(set(t.c0)) != t.k:
        return fail(0, "c0 is not a k-clique of g")
    covered = 0
    for v in t.c0:
        covered |= 1 << v
    covered_edges = {tuple(sorted(p)) for p in _pairs(t.c0)}
    bound = comb(t.k, 2)
    for j, s in enumerate(t.steps, start=1):
        u, v = s.edge
        if not g.has_edge(u, v):
            return fail(j, "step edge not in g")
        if tuple(sorted((u, v))) in covered_edges:
            return fail(j, "step edge already covered by earlier cliques")
        cov_u = (covered >> u) & 1
        cov_v = (covered >> v) & 1
        if cov_u + cov_v != 1:
            return fail(j, "step edge does not cross the frontier")
        if len(set(s.clique)) != t.k or not _is_clique(g, s.clique):
            return fail(j, "step clique is not a k-clique of g")
        if u not in s.clique or v not in s.clique:
            return fail(j, "step clique does not contain its edge")
        x = sum(1 for w in s.clique if (covered >> w) & 1)
        if x != s.x:
            return fail(j, f"x mismatch: recomputed {x}, claimed {s.x}")
        if not 1 <= x <= t.k - 1:
            return fail(j, "x out of range 1..k-1")
        bound += comb(t.k, 2) - comb(x, 2)
        for w in s.clique:
            covered |= 1 << w
        covered_edges.update(tuple(sorted(p)) for p in _pairs(s.clique))
    if covered != (1 << g.n) - 1:
        return fail(len(t.steps), "procedure did not cover every vertex")
    if bound != t.bound:
        return fail(len(t.steps), f"bound mismatch: recomputed {bound}")
    if g.n > t.k:
        q, r = decompose(g.n, t.k)
        i_count = len(t.steps)
        if i_count < q + 1:
            return fail(len(t.steps), "fewer steps than q+1")
        if sum(s.x - 1 for s in t.steps) != (i_count - q) * (t.k - 1) - r:
            return fail(len(t.steps), "x' sum identity violated")
    elif t.steps:
        return fail(1, "n = k run must finish with zero steps")
    return TraceCheck(True)


def _is_clique(g: Graph, vs) -> bool:
    vs = list(vs)
    if any(not 0 <= v < g.n for v in vs):
        return False
    return all(g.has_edge(a, b) for a, b in _pairs(vs))


def _pairs(vs):
    vs = list(vs)
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            yield (vs[i], vs[j])
