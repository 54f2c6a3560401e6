"""Exhaustive ground truth for small graphs.

min_edges_bruteforce sweeps edge counts m upward from a cheap lower bound,
enumerating every labeled m-edge subset of the n-vertex complete graph and
filtering by the requested cover condition and connectivity/component count.
The first m with a hit is the exact minimum.  all_minimizers re-runs the
winning m collecting every hit, deduplicated up to isomorphism.

This module implements no formula from the rest of the package: it
adjudicates them.  The subset checks run in the compiled kernels; pruning is
limited to necessary degree conditions so the search stays auditable.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ParameterError, SearchCapExceededError
from .graphs import Graph, canonical_form, is_connected, upper_triangle_pairs

SEARCH_MAX_N = 8
ENUMERATE_MAX_N = 7
_COLLECT_CAP = 1 << 20

CONDITIONS = ("edge_cover", "vertex_cover")


@dataclass(frozen=True)
class SearchSpec:
    n: int
    k: int
    l: int = 1
    require_connected: bool = True
    component_count: int | None = None
    condition: str = "edge_cover"

    def __post_init__(self):
        if self.condition not in CONDITIONS:
            raise ParameterError(f"condition must be one of {CONDITIONS}")
        if not 0 <= self.n <= SEARCH_MAX_N:
            raise SearchCapExceededError(
                f"edge-subset search is capped at n = {SEARCH_MAX_N}")
        kmin = 3 if self.condition == "edge_cover" else 2
        if self.k < kmin:
            raise ParameterError(f"k must be >= {kmin} for {self.condition}")
        if self.l < 1:
            raise ParameterError("l must be >= 1")
        if self.component_count is not None:
            if self.component_count < 1:
                raise ParameterError("component count must be >= 1")
            if self.require_connected:
                raise ParameterError(
                    "component_count and require_connected are exclusive; "
                    "use require_connected for exactly one component")

    def lower_bound_m(self):
        """max(connectivity bound, degree-sum bound with min degree k-1)."""
        m0 = 0
        if self.require_connected:
            m0 = max(m0, self.n - 1)
        if self.component_count is not None:
            m0 = max(m0, self.n - self.component_count)
        if self.condition == "vertex_cover" or (self.require_connected
                                                and self.n >= 2):
            m0 = max(m0, (self.n * (self.k - 1) + 1) // 2)
        return m0


@dataclass(frozen=True)
class Minimizer:
    canonical: bytes
    graph: Graph


@dataclass(frozen=True)
class SearchReport:
    spec: SearchSpec
    minimum: int | None
    minimizers: tuple
    subsets_examined: int
    wall_time: float
    m_searched: tuple

    def to_json_dict(self):
        from .formats import encode_graph6

        return {
            "n": self.spec.n,
            "k": self.spec.k,
            "l": self.spec.l,
            "condition": self.spec.condition,
            "connected": self.spec.require_connected,
            "components": self.spec.component_count,
            "minimum": self.minimum,
            "minimizers": [encode_graph6(m.graph) for m in self.minimizers],
            "subsets_examined": self.subsets_examined,
            "wall_time": self.wall_time,
            "m_searched": list(self.m_searched),
        }


def _slot_arrays(n):
    pairs = upper_triangle_pairs(n)
    eu = np.array([p[0] for p in pairs], np.int64)
    ev = np.array([p[1] for p in pairs], np.int64)
    if n < 2:
        eu = np.zeros(0, np.int64)
        ev = np.zeros(0, np.int64)
    return pairs, eu, ev


def _graph_from_slot_mask(mask, n, pairs):
    return Graph.from_edges(
        n, (pairs[s] for s in range(len(pairs)) if (mask >> s) & 1))


def _sweep_m(spec: SearchSpec, m, eu, ev, collect, workers=1):
    """All m-subsets, partitioned by highest slot.  Ascending partitions are
    ascending mask ranges, so sequential and threaded runs find the same
    first hit and the same hit set."""
    n_slots = len(eu)
    vertex_cond = 1 if spec.condition == "vertex_cover" else 0
    connected = 1 if spec.require_connected else 0
    ncomp = spec.component_count if spec.component_count is not None else -1
    empty = np.zeros(0, np.int64)

    if m == 0:
        out = np.zeros(1, np.int64) if collect else empty
        found, examined, first = _kernels.sweep_subsets(
            spec.n, spec.k, spec.l, 0, 0, 0, eu, ev,
            vertex_cond, connected, ncomp, 1 if collect else 0, out)
        hits = [0] if (collect and found) else []
        return found, examined, (first if found else None), hits

    def run_partition(h):
        out = np.empty(_COLLECT_CAP, np.int64) if collect else empty
        found, examined, first = _kernels.sweep_subsets(
            spec.n, spec.k, spec.l, m - 1, h, 1 << h, eu, ev,
            vertex_cond, connected, ncomp, 1 if collect else 0, out)
        if collect and found > out.shape[0]:
            raise SearchCapExceededError(
                f"minimizer collection overflow at m={m}", count=found)
        hits = [int(x) for x in out[:found]] if collect else []
        return found, examined, first, hits

    total_found = 0
    total_examined = 0
    first_mask = None
    all_hits = []
    partitions = list(range(m - 1, n_slots))
    if workers > 1 and len(partitions) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_partition, partitions))
        for found, examined, first, hits in results:
            total_examined += examined
            if found and first_mask is None:
                first_mask = int(first)
            total_found += found
            all_hits.extend(hits)
    else:
        for h in partitions:
            found, examined, first, hits = run_partition(h)
            total_examined += examined
            total_found += found
            all_hits.extend(hits)
            if found and first_mask is None:
                first_mask = int(first)
                if not collect:
                    break
    return total_found, total_examined, first_mask, all_hits


def min_edges_bruteforce(spec: SearchSpec, workers: int = 1) -> SearchReport:
    """Exact minimum edge count for the spec, with one representative
    minimizer.  Returns minimum=None when no graph satisfies the spec at
    any edge count."""
    t0 = time.perf_counter()
    pairs, eu, ev = _slot_arrays(spec.n)
    n_slots = len(pairs)
    m0 = spec.lower_bound_m()
    examined = 0
    for m in range(m0, n_slots + 1):
        found, ex, first, _ = _sweep_m(spec, m, eu, ev, collect=False,
                                       workers=workers)
        examined += ex
        if found:
            g = _graph_from_slot_mask(first, spec.n, pairs)
            mins = (Minimizer(canonical=_canon(g), graph=g),)
            return SearchReport(spec=spec, minimum=m, minimizers=mins,
                                subsets_examined=examined,
                                wall_time=time.perf_counter() - t0,
                                m_searched=(m0, m))
    return SearchReport(spec=spec, minimum=None, minimizers=(),
                        subsets_examined=examined,
                        wall_time=time.perf_counter() - t0,
                        m_searched=(m0, n_slots))


def _canon(g: Graph) -> bytes:
    return canonical_form(g)


def all_minimizers(spec: SearchSpec, workers: int = 1, report=None):
    """Every minimizer up to isomorphism, sorted by canonical form.

    ``report`` lets callers reuse an existing min_edges_bruteforce result
    instead of re-running the ascending sweep."""
    if report is None:
        report = min_edges_bruteforce(spec, workers=workers)
    if report.minimum is None:
        return []
    pairs, eu, ev = _slot_arrays(spec.n)
    _, _, _, hits = _sweep_m(spec, report.minimum, eu, ev, collect=True,
                             workers=workers)
    reps = {}
    for mask in hits:
        g = _graph_from_slot_mask(mask, spec.n, pairs)
        key = canonical_form(g)
        if key not in reps:
            reps[key] = g
    return [reps[key] for key in sorted(reps)]


def search_report(spec: SearchSpec, collect_all: bool = False,
                  workers: int = 1) -> SearchReport:
    """Like min_edges_bruteforce, with all minimizers when collect_all."""
    report = min_edges_bruteforce(spec, workers=workers)
    if not collect_all or report.minimum is None:
        return report
    graphs = all_minimizers(spec, workers=workers, report=report)
    mins = tuple(Minimizer(canonical=canonical_form(g), graph=g)
                 for g in graphs)
    return SearchReport(spec=report.spec, minimum=report.minimum,
                        minimizers=mins,
                        subsets_examined=report.subsets_examined,
                        wall_time=report.wall_time,
                        m_searched=report.m_searched)


def enumerate_connected(n: int):
    """All connected graphs on n vertices up to isomorphism, by growing
    every (n-1)-vertex isomorphism class one vertex at a time and
    deduplicating canonically at each level."""
    if not 1 <= n <= ENUMERATE_MAX_N:
        raise SearchCapExceededError(
            f"enumerate_connected supports 1 <= n <= {ENUMERATE_MAX_N}")
    classes = {canonical_form(Graph.empty(1)): Graph.empty(1)}
    for size in range(2, n + 1):
        grown = {}
        for g in classes.values():
            base_edges = list(g.edges())
            for nb in range(1 << (size - 1)):
                edges = base_edges + [(v, size - 1)
                                      for v in range(size - 1)
                                      if (nb >> v) & 1]
                h = Graph.from_edges(size, edges)
                key = canonical_form(h)
                if key not in grown:
                    grown[key] = h
        classes = grown
    for key in sorted(classes):
        g = classes[key]
        if is_connected(g):
            yield g
