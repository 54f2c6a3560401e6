"""Minimum-edge formulas, the glued-block extremal family, recognition of
extremal graphs, the convexity maximizer, and the cocktail-party
counterexample to the (3,l) vs (l+2,1) comparison.

The extremal family: graphs glued from blocks along a linear hypertree,
where each block is either K_k or an L-block (two K_k sharing k-r vertices).
Blocks after the first reuse exactly one existing vertex as their local
vertex 0; anything more would break linearity or close a hypergraph cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from .cover import CoverSpec, has_cover
from .errors import (HypertreeSpecError, NoSuchGraphError, ParameterError,
                     SearchCapExceededError, UnsupportedSizeError)
from .graphs import (CANONICAL_MAX_N, Graph, canonical_form,
                     complete_multipartite_pairs, enumerate_cliques,
                     is_connected, upper_triangle_pairs)


class Decomposition(NamedTuple):
    """n - k = q(k-1) + r with q >= 0 and 1 <= r <= k-1."""

    q: int
    r: int


def decompose(n: int, k: int) -> Decomposition:
    if k < 3:
        raise ParameterError("k must be >= 3")
    if n <= k:
        raise ParameterError(f"decompose needs n > k (got n={n}, k={k})")
    q, r = divmod(n - k, k - 1)
    if r == 0:
        q, r = q - 1, k - 1
    return Decomposition(q, r)


def min_edges_kcover(n: int, k: int) -> int:
    """Minimum edge count of a connected n-vertex graph in which every edge
    lies in a K_k: (q+2)C(k,2) - C(k-r,2), and C(k,2) for n = k."""
    if k < 3:
        raise ParameterError("k must be >= 3")
    if n < k:
        raise NoSuchGraphError(
            f"no connected {n}-vertex graph has every edge in a K_{k}")
    if n == k:
        return comb(k, 2)
    q, r = decompose(n, k)
    return (q + 2) * comb(k, 2) - comb(k - r, 2)


def min_edges_components(n: int, k: int, c: int) -> int:
    """Multi-component variant: exactly c components, each with every edge
    in a K_k; decomposition base is n-k-c+1 = q(k-1)+r."""
    if k < 3:
        raise ParameterError("k must be >= 3")
    if c < 1:
        raise ParameterError("component count must be >= 1")
    if n < k + c - 1:
        raise NoSuchGraphError(
            f"no {n}-vertex graph with {c} components each K_{k}-covered")
    if n == k + c - 1:
        return comb(k, 2)
    q, r = divmod(n - k - c + 1, k - 1)
    if r == 0:
        q, r = q - 1, k - 1
    return (q + 2) * comb(k, 2) - comb(k - r, 2)


def min_edges_vertex_kcover(n: int, k: int) -> int:
    """Vertex variant (connectivity not required): every vertex in a K_k,
    decomposition base k instead of k-1: n-k = qk + r with 1 <= r <= k."""
    if k < 2:
        raise ParameterError("k must be >= 2")
    if n < k:
        raise NoSuchGraphError(
            f"no {n}-vertex graph has every vertex in a K_{k}")
    if n == k:
        return comb(k, 2)
    q, r = divmod(n - k, k)
    if r == 0:
        q, r = q - 1, k
    return (q + 2) * comb(k, 2) - comb(k - r, 2)


# ---------------------------------------------------------------------------
# block gluing


@dataclass(frozen=True)
class BlockSpec:
    """One block: template 'K' (K_k) or 'L' (two K_k sharing k-r vertices),
    plus, for non-first blocks, the attachment (earlier block index, glue
    vertex list of existing global vertex ids)."""

    template: str
    k: int
    r: int = 0
    attach: tuple | None = None

    def __post_init__(self):
        if self.template not in ("K", "L"):
            raise HypertreeSpecError(f"unknown block template {self.template!r}")
        if self.k < 2:
            raise HypertreeSpecError("block clique order must be >= 2")
        if self.template == "L" and not 1 <= self.r <= self.k - 1:
            raise HypertreeSpecError(
                f"L-block needs 1 <= r <= k-1, got k={self.k}, r={self.r}")

    @property
    def size(self):
        return self.k if self.template == "K" else self.k + self.r

    @property
    def block_edge_count(self):
        if self.template == "K":
            return comb(self.k, 2)
        return 2 * comb(self.k, 2) - comb(self.k - self.r, 2)

    def local_cliques(self):
        """Vertex index tuples (block-local) of the template's cliques.

        L layout: shared core first (k-r vertices), then the r private
        vertices of each half."""
        k, r = self.k, self.r
        if self.template == "K":
            return [tuple(range(k))]
        core = list(range(k - r))
        half_a = core + list(range(k - r, k))
        half_b = core + list(range(k, k + r))
        return [tuple(half_a), tuple(half_b)]


@dataclass(frozen=True)
class HypertreeSpec:
    """Ordered blocks glued along a linear hypertree.  Block 0 stands alone;
    every later block names one earlier block and exactly one of its
    vertices to reuse (as the new block's local vertex 0)."""

    blocks: tuple

    def __post_init__(self):
        if not self.blocks:
            raise HypertreeSpecError("need at least one block")
        if self.blocks[0].attach is not None:
            raise HypertreeSpecError("first block cannot carry an attachment")
        for t, b in enumerate(self.blocks[1:], start=1):
            if b.attach is None:
                raise HypertreeSpecError(f"block {t} needs an attachment")

    @property
    def vertex_count(self):
        return 1 + sum(b.size - 1 for b in self.blocks)

    @property
    def edge_count(self):
        return sum(b.block_edge_count for b in self.blocks)


def build_gtree(spec: HypertreeSpec) -> Graph:
    """Glue the blocks.  Deterministic numbering: block 0 takes 0..size-1;
    each later block reuses its glue vertex as local 0 and numbers its fresh
    vertices sequentially."""
    block_vertices = []
    edges = set()
    next_v = 0
    for t, b in enumerate(spec.blocks):
        if t == 0:
            globals_ = list(range(b.size))
            next_v = b.size
        else:
            b_idx, glue = b.attach
            if not 0 <= b_idx < t:
                raise HypertreeSpecError(
                    f"block {t} attaches to nonexistent block {b_idx}")
            glue = tuple(dict.fromkeys(glue))
            if len(glue) == 0:
                raise HypertreeSpecError(f"block {t} has an empty glue list")
            if len(glue) > 1:
                raise HypertreeSpecError(
                    f"block {t} glue list reuses {len(glue)} vertices; "
                    "hyperedges may share at most one vertex (linear "
                    "hypertree), and touching two earlier vertices closes "
                    "a cycle")
            g0 = glue[0]
            if g0 not in block_vertices[b_idx]:
                raise HypertreeSpecError(
                    f"glue vertex {g0} is not in block {b_idx}")
            globals_ = [g0] + list(range(next_v, next_v + b.size - 1))
            next_v += b.size - 1
        block_vertices.append(globals_)
        for clique in b.local_cliques():
            verts = [globals_[i] for i in clique]
            for i in range(len(verts)):
                for j in range(i + 1, len(verts)):
                    edges.add((verts[i], verts[j]))
    return Graph.from_edges(next_v, edges)


def parse_hypertree_spec(text: str) -> HypertreeSpec:
    """Text form, one block per line:  ``K k`` or ``L k r``, followed on the
    same line by ``@ block_index: v1,v2,...`` for non-first blocks."""
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, attach_part = line.partition("@")
        parts = head.split()
        try:
            if parts[0] == "K" and len(parts) == 2:
                template, k, r = "K", int(parts[1]), 0
            elif parts[0] == "L" and len(parts) == 3:
                template, k, r = "L", int(parts[1]), int(parts[2])
            else:
                raise ValueError
        except (ValueError, IndexError):
            raise HypertreeSpecError(f"bad block on line {lineno}: {line!r}")
        attach = None
        if attach_part.strip():
            b_str, _, v_str = attach_part.partition(":")
            try:
                b_idx = int(b_str)
                glue = tuple(int(v) for v in v_str.split(",") if v.strip())
            except ValueError:
                raise HypertreeSpecError(
                    f"bad attachment on line {lineno}: {attach_part!r}")
            attach = (b_idx, glue)
        blocks.append(BlockSpec(template, k, r, attach))
    return HypertreeSpec(tuple(blocks))


def format_hypertree_spec(spec: HypertreeSpec) -> str:
    lines = []
    for b in spec.blocks:
        head = f"K {b.k}" if b.template == "K" else f"L {b.k} {b.r}"
        if b.attach is not None:
            b_idx, glue = b.attach
            head += f" @ {b_idx}: " + ",".join(str(v) for v in glue)
        lines.append(head)
    return "\n".join(lines) + "\n"


def _owner_block(blocks, v: int) -> int:
    """Index of the block that introduced global vertex v (blocks laid out
    in order; every block after the first adds size-1 fresh vertices)."""
    hi = blocks[0].size
    if v < hi:
        return 0
    for t, b in enumerate(blocks[1:], start=1):
        hi += b.size - 1
        if v < hi:
            return t
    raise ParameterError(f"vertex {v} beyond the spec's {hi} vertices")


def _extremal_blocks(k: int, q: int, r: int):
    """Block multiset of the minimum-edge family: q K_k blocks plus one
    L-block; when r = k-1 the L degenerates into two K_k sharing a single
    vertex and is normalized to two plain K_k blocks."""
    if r == k - 1:
        return [BlockSpec("K", k)] * (q + 2)
    return [BlockSpec("L", k, r)] + [BlockSpec("K", k)] * q


def build_extremal(n: int, k: int, shape: str = "star") -> Graph:
    """A minimum-edge connected n-vertex graph with every edge in a K_k.

    shape='star' glues every block at vertex 0; shape='path' chains each
    block onto the newest vertex of the previous one."""
    if shape not in ("path", "star"):
        raise ParameterError(f"shape must be 'path' or 'star', got {shape!r}")
    q, r = decompose(n, k)
    templates = _extremal_blocks(k, q, r)
    blocks = [templates[0]]
    size = templates[0].size
    for t, b in enumerate(templates[1:], start=1):
        if shape == "star":
            attach = (0, (0,))
        else:
            attach = (t - 1, (size - 1,))
        blocks.append(BlockSpec(b.template, b.k, b.r, attach))
        size += b.size - 1
    return build_gtree(HypertreeSpec(tuple(blocks)))


def enumerate_extremal(n: int, k: int, cap: int = 10_000):
    """All members of the minimum-edge family on n vertices up to
    isomorphism, sorted by canonical form.

    Brute force over attachment choices with the L-block (if any) placed
    first; since blocks always glue by a single vertex, re-rooting the
    hypertree at the L-block loses no isomorphism class.  Deduplication by
    canonical form, so n is capped at the canonical-form limit."""
    if n > CANONICAL_MAX_N:
        raise UnsupportedSizeError(
            f"enumerate_extremal dedups by canonical form (n <= {CANONICAL_MAX_N})")
    q, r = decompose(n, k)
    templates = _extremal_blocks(k, q, r)
    seen = {}
    count = 0

    def rec(blocks, size):
        nonlocal count
        t = len(blocks)
        if t == len(templates):
            g = build_gtree(HypertreeSpec(tuple(blocks)))
            key = canonical_form(g)
            if key not in seen:
                seen[key] = g
                count += 1
                if count > cap:
                    raise SearchCapExceededError(
                        f"more than {cap} extremal graphs", count=count)
            return
        tmpl = templates[t]
        for v in range(size):
            b_idx = _owner_block(blocks, v)
            rec(blocks + [BlockSpec(tmpl.template, tmpl.k, tmpl.r,
                                    (b_idx, (v,)))],
                size + tmpl.size - 1)

    rec([templates[0]], templates[0].size)
    return [seen[key] for key in sorted(seen)]


# ---------------------------------------------------------------------------
# recognition


@dataclass(frozen=True)
class ExtremalWitness:
    """Clique ordering certifying membership in the extremal family: every
    running intersection has size 1, except (when r < k-1) exactly one step
    of size k-r whose overlap sits inside a single earlier clique."""

    cliques: tuple
    intersections: tuple
    exceptional_index: int | None
    partner_index: int | None

    def to_json_dict(self):
        return {
            "cliques": [list(c) for c in self.cliques],
            "intersections": list(self.intersections),
            "exceptional": self.exceptional_index,
            "partner": self.partner_index,
        }


@dataclass(frozen=True)
class RecognitionResult:
    extremal: bool
    witness: ExtremalWitness | None = None
    reason: str | None = None

    def __bool__(self):
        return self.extremal


def _edge_mask_of(vertices, slot_of):
    mask = 0
    vs = sorted(vertices)
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            mask |= 1 << slot_of[(vs[a], vs[b])]
    return mask


def recognize_extremal(g: Graph, k: int) -> RecognitionResult:
    """Decide extremality structurally.

    Cheap prefilter (connected, covered, edge count equals the formula),
    then an independent backtracking search for the clique-ordering witness.
    The prefilter and the witness search are deliberately separate routes:
    their agreement on every input is one of the package's test invariants,
    not an assumption baked in here."""
    if k < 3:
        raise ParameterError("k must be >= 3")
    n = g.n
    if n < k:
        return RecognitionResult(False, reason="too_few_vertices")
    if n == k:
        if g.edge_count == comb(k, 2):
            w = ExtremalWitness((tuple(range(k)),), (), None, None)
            return RecognitionResult(True, witness=w)
        return RecognitionResult(False, reason="not_complete")
    if not is_connected(g):
        return RecognitionResult(False, reason="not_connected")
    if not has_cover(g, CoverSpec(k, 1)).holds:
        return RecognitionResult(False, reason="no_cover")
    q, r = decompose(n, k)
    if g.edge_count != min_edges_kcover(n, k):
        return RecognitionResult(False, reason="edge_count")
    witness = _find_witness(g, k, q, r)
    if witness is None:
        return RecognitionResult(False, reason="no_witness")
    return RecognitionResult(True, witness=witness)


def _find_witness(g: Graph, k: int, q: int, r: int):
    cliques = enumerate_cliques(g, k)
    if not cliques:
        return None
    slot_of = {e: s for s, e in enumerate(upper_triangle_pairs(g.n))}
    cmasks = [sum(1 << v for v in c) for c in cliques]
    emasks = [_edge_mask_of(c, slot_of) for c in cliques]
    all_edges = _edge_mask_of_graph(g, slot_of)
    need = q + 2
    exc_size = k - r  # 1 exactly when r = k-1, in which case no special step
    full = (1 << g.n) - 1

    def rec(used, u_mask, e_mask, inters, exc_idx, partner):
        if len(used) == need:
            if u_mask == full and e_mask == all_edges:
                if (exc_idx is not None) == (r < k - 1):
                    return ExtremalWitness(
                        tuple(cliques[i] for i in used), tuple(inters),
                        exc_idx, partner)
            return None
        remaining = need - len(used)
        uncovered = g.n - u_mask.bit_count()
        if uncovered > remaining * (k - 1):
            return None
        for idx in range(len(cliques)):
            if idx in used:
                continue
            inter = (cmasks[idx] & u_mask).bit_count()
            if inter == 1:
                res = rec(used + [idx], u_mask | cmasks[idx],
                          e_mask | emasks[idx], inters + [1], exc_idx, partner)
                if res is not None:
                    return res
            elif inter == exc_size and exc_idx is None and r < k - 1:
                part = None
                for step, j in enumerate(used):
                    if (cmasks[j] & cmasks[idx]).bit_count() == exc_size:
                        part = step
                        break
                if part is not None:
                    res = rec(used + [idx], u_mask | cmasks[idx],
                              e_mask | emasks[idx], inters + [exc_size],
                              len(used), part)
                    if res is not None:
                        return res
        return None

    for c0 in range(len(cliques)):
        res = rec([c0], cmasks[c0], emasks[c0], [], None, None)
        if res is not None:
            return res
    return None


def _edge_mask_of_graph(g: Graph, slot_of):
    mask = 0
    for e in g.edges():
        mask |= 1 << slot_of[(e.u, e.v)]
    return mask


# ---------------------------------------------------------------------------
# convexity


def maximize_convex_sum(m: int, slots: int, total: int):
    """Maximum of sum C(x_j + 1, 2) over x_1..x_slots in {0..m} with
    sum x_j = total, plus one maximizing assignment.

    With total = q'm + r' (0 <= r' < m), the maximum puts q' slots at m,
    one slot at r', the rest at 0.  The hypotheses require q' < slots."""
    if m < 1 or slots < 1:
        raise ParameterError("need m >= 1 and at least one slot")
    if not 0 <= total <= slots * m:
        raise ParameterError(f"total {total} infeasible for {slots} slots of max {m}")
    q_, r_ = divmod(total, m)
    if q_ >= slots:
        raise ParameterError(
            f"total {total} = {q_}*{m} + {r_} needs q' < slots ({slots})")
    best = q_ * comb(m + 1, 2) + comb(r_ + 1, 2)
    witness = [m] * q_ + ([r_] if r_ > 0 else [])
    witness += [0] * (slots - len(witness))
    return best, witness


# ---------------------------------------------------------------------------
# cocktail-party counterexample


@dataclass(frozen=True)
class CocktailPartyReport:
    graph: Graph
    l_half: int
    edges: int
    cover_holds: bool
    thm1_bound: int
    strictly_smaller: bool

    def to_json_dict(self):
        return {
            "l_half": self.l_half,
            "l": 2 * self.l_half,
            "n": self.graph.n,
            "edges": self.edges,
            "cover_holds": self.cover_holds,
            "bound": self.thm1_bound,
            "strictly_smaller": self.strictly_smaller,
        }


def cocktail_party_counterexample(l_half: int) -> CocktailPartyReport:
    """K_{2l'+4} minus a perfect matching: a (3, 2l')-covered graph on
    2l'+4 vertices whose edge count drops below the single-clique-cover
    minimum for k = 2l'+2 once 2l' >= 6."""
    if l_half < 1:
        raise ParameterError("l_half must be >= 1")
    g = complete_multipartite_pairs(l_half + 2)
    edges = g.edge_count
    cover = has_cover(g, CoverSpec(3, 2 * l_half)).holds
    bound = min_edges_kcover(2 * l_half + 4, 2 * l_half + 2)
    return CocktailPartyReport(
        graph=g, l_half=l_half, edges=edges, cover_holds=cover,
        thm1_bound=bound, strictly_smaller=edges < bound)


# ---------------------------------------------------------------------------
# randomized specs (tests and the soundness corpus)


def random_hypertree_spec(rng, k: int, n_max: int, allow_l=True) -> HypertreeSpec:
    """A random valid spec with blocks of order k, total vertices <= n_max.
    L-blocks may appear anywhere, not just first."""
    if n_max < k:
        raise ParameterError("n_max must allow at least one block")
    blocks = []
    if allow_l and rng.random() < 0.5:
        r = rng.randint(1, k - 1)
        if k + r <= n_max:
            blocks.append(BlockSpec("L", k, r))
    if not blocks:
        blocks.append(BlockSpec("K", k))
    size = blocks[0].size
    while size + k - 1 <= n_max and rng.random() < 0.75:
        v = rng.randrange(size)
        attach = (_owner_block(blocks, v), (v,))
        r = rng.randint(1, k - 1)
        if allow_l and rng.random() < 0.2 and size + k + r - 1 <= n_max:
            blocks.append(BlockSpec("L", k, r, attach))
            size += k + r - 1
        else:
            blocks.append(BlockSpec("K", k, 0, attach))
            size += k - 1
    return HypertreeSpec(tuple(blocks))
