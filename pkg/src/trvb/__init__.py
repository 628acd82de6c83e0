"""Tree-Residue Vertex-Breaking (TRVB) toolkit.

Decide whether breaking some subset of breakable vertices turns a multigraph
into a tree; certify the gadgetry behind the problem's hardness landscape;
convert to and from Hypergraph Spanning Tree; and classify (B, U) variants
into P / NP-complete.
"""
from .classify import Classification, ComplexityClass, classify
from .core import (BreakTrace, DegreeSet, GuardExceeded, InvalidGraph,
                   MalformedRotation, MissingRotation, Multigraph,
                   NotBreakable, UnknownVertex, ValidationReport, VariantSpec,
                   Violation, break_set, break_vertex, connected_components,
                   has_cycle, is_connected, is_tree, required_vertex_growth,
                   rotation_is_planar, trace_faces, validate)
from .gadgets import (Behavior, Gadget, bare_gadget, behavior, builtin,
                      certification_catalog, equivalent_to_breakable,
                      equivalent_to_unbreakable, substitute)
from .hypergraph import (Hypergraph, TrivialNo, edge_node_id, hst_brute,
                         hst_to_trvb, incidence_graph, is_spanning_tree,
                         regularity, trvb_to_hst, uniformity)
from .reductions import (DirectedMultigraph, PreprocessOutcome, ham_brute,
                         hamiltonicity_to_trvb, insert_unbreakable_deg2,
                         contract_unbreakable_adjacent, is_non_alternating,
                         preprocess_to_degree2, simplify_over_edge,
                         to_undirected)
from .score import Bundle, bundles_at, score, tree_score_inequality
from .solver import (BreakCertificate, EnumerationResult, PruningOptions,
                     VerifyResult, enumerate_solutions, solve, solve_brute,
                     verify)

__version__ = "0.1.0"
