"""Integer additive set-indexers of finite simple graphs.

Vertices carry non-empty sets of non-negative integers; each edge inherits
the sumset of its endpoint labels. The package validates such labelings,
classifies them (weak / strong / uniform / mono-indexed), builds the induced
labelings on line graphs, total graphs, contractions and reductions,
searches finite ground sets exhaustively, and adjudicates the structural
claims behind all of this on a small-graph corpus.
"""

from .errors import (
    BoundExceededError,
    CoverageError,
    EmptySetError,
    GraphError,
    IasiError,
    InvalidSpecError,
    ParseError,
)
from .graph import (
    EdgeId,
    Graph,
    complete_graph,
    cycle_graph,
    edge_id,
    emit_dot,
    format_graph,
    parse_graph,
    path_graph,
    star_graph,
)
from .harness import Corpus, SuiteReport, generate_corpus, replay_counterexample, run_suite
from .labeling import (
    SetLabeling,
    VerificationReport,
    canonical_iasi,
    format_labeling,
    induced_edge_labels,
    is_k_uniform,
    is_l_uniformly_set_indexed,
    mono_indexed_elements,
    parse_labeling,
    restrict,
    verify,
)
from .search import (
    SearchOutcome,
    SearchSpec,
    find_labeling,
    ground_set_lower_bound,
    minimal_ground_set,
    prefix_ground,
    uniform_ground_set_lower_bound,
)
from .setcore import (
    DEFAULT_UNIVERSE_BOUND,
    CompatibilityTable,
    IntSet,
    compatibility_index,
    compatibility_table,
    has_saturated_class,
    max_class_size,
    neglecting_number,
    parse_int_set,
    sumset,
)
from .transforms import (
    TransformResult,
    contract_edge,
    induce_line_labeling,
    induce_total_labeling,
    line_graph,
    topological_reduction,
    total_graph,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceededError",
    "CompatibilityTable",
    "Corpus",
    "CoverageError",
    "DEFAULT_UNIVERSE_BOUND",
    "EdgeId",
    "EmptySetError",
    "Graph",
    "GraphError",
    "IasiError",
    "IntSet",
    "InvalidSpecError",
    "ParseError",
    "SearchOutcome",
    "SearchSpec",
    "SetLabeling",
    "SuiteReport",
    "TransformResult",
    "VerificationReport",
    "canonical_iasi",
    "compatibility_index",
    "compatibility_table",
    "complete_graph",
    "contract_edge",
    "cycle_graph",
    "edge_id",
    "emit_dot",
    "find_labeling",
    "format_graph",
    "format_labeling",
    "generate_corpus",
    "ground_set_lower_bound",
    "has_saturated_class",
    "induce_line_labeling",
    "induce_total_labeling",
    "induced_edge_labels",
    "is_k_uniform",
    "is_l_uniformly_set_indexed",
    "line_graph",
    "max_class_size",
    "minimal_ground_set",
    "mono_indexed_elements",
    "neglecting_number",
    "parse_graph",
    "parse_int_set",
    "parse_labeling",
    "path_graph",
    "prefix_ground",
    "replay_counterexample",
    "restrict",
    "run_suite",
    "star_graph",
    "sumset",
    "topological_reduction",
    "total_graph",
    "uniform_ground_set_lower_bound",
    "verify",
]
