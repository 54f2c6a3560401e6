"""Edge-minimal graphs under clique-cover constraints.

Library surface: a bitset Graph type with clique/contraction primitives,
(k,l)-cover checking and truss peeling, the closed-form minimum-edge
formulas with constructors/recognizers for the extremal family, the
clique-peeling lower-bound procedure with certificate verification, the
no-K4-edge contraction pipeline, and an exhaustive small-graph oracle that
adjudicates all of it.
"""

from ._kernels import using_numba
from .cover import CoverReport, CoverSpec, has_cover, implied_truss_cover, truss_decompose
from .errors import (CliqueCoverError, GraphParseError, HypertreeSpecError,
                     InvalidEdgeError, NoSuchGraphError, ParameterError,
                     PreconditionError, SearchCapExceededError,
                     TheoremViolationError, UnsupportedSizeError)
from .extremal import (BlockSpec, CocktailPartyReport, Decomposition,
                       ExtremalWitness, HypertreeSpec, RecognitionResult,
                       build_extremal, build_gtree,
                       cocktail_party_counterexample, decompose,
                       enumerate_extremal, format_hypertree_spec,
                       maximize_convex_sum, min_edges_components,
                       min_edges_kcover, min_edges_vertex_kcover,
                       parse_hypertree_spec, random_hypertree_spec,
                       recognize_extremal)
from .formats import (decode_edgelist, decode_graph6, encode_edgelist,
                      encode_graph6, to_dot)
from .graphs import (ContractionMap, Edge, Graph, canonical_form,
                     cliques_containing_edge, complete_multipartite_pairs,
                     contract_edge, count_cliques_containing_edge,
                     enumerate_cliques, is_connected, make_edge,
                     permute_graph, triangle_vertices)
from .oracle import (Minimizer, SearchReport, SearchSpec, all_minimizers,
                     enumerate_connected, min_edges_bruteforce, search_report)
from .reduction import (ContractionReport, contract_and_verify,
                        find_edge_not_in_k4, reduce_to_k4_covered)
from .shrink import (ShrinkStep, ShrinkTrace, TraceCheck, run_procedure,
                     verify_trace)

__version__ = "0.1.0"
