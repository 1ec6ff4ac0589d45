"""Maximum proper partial 0-1 colorings of graphs.

A partial 0-1 coloring assigns colors {0, 1} to a subset of edges; it is
proper when both color classes are matchings. This package computes the
maximum size of such colorings exactly (brute force on small graphs, fast
dynamic programming on forests) and constructs, for every tree whose leaves
are pairwise at even distance, a maximum coloring whose 0-class is a
maximum matching.
"""

from .errors import (
    BudgetExceeded,
    CertificateFailed,
    ForeignEdge,
    LabelOutOfRange,
    LoopEdge,
    MalformedLine,
    NoCaseMatches,
    NotAForest,
    NotATree,
    NotBipartite,
    NotConnected,
    NotMPP,
    NotPendant,
    NotSiblingPendants,
    ParseError,
    PathNotInColoring,
    PreconditionViolated,
    TooLarge,
    TwoMatchingsError,
    UncoloredStartEdge,
    VertexOutOfRange,
)
from .graph import (
    Edge,
    Graph,
    bipartition,
    connected_components,
    edge,
    has_even_leaf_distances,
    is_connected,
    is_forest,
    is_tree,
    leaves,
    parse_edge_list,
    remove_vertices,
    serialize_edge_list,
)
from .coloring import (
    AlternatingPath,
    Matching,
    PartialColoring,
    flip_path,
    is_proper,
    maximal_alternating_path,
    parse_coloring,
    serialize_coloring,
)
from .forests import LambdaWitness, beta_tree, lambda_tree
from .oracle import (
    DEFAULT_BUDGET,
    MppEnumeration,
    OracleBudget,
    enumerate_mpp,
    oracle_alpha,
    oracle_beta,
    oracle_lambda,
)
from .constructive import (
    BASE_CASE,
    CaseMatch,
    CertificateReport,
    ConstructionTrace,
    TraceStep,
    construct,
    detect_case,
    lemma1_enforce,
    lemma2_enforce,
    verify_certificate,
)
from .generators import all_labeled_trees, prufer_decode, random_even_leaf_tree

__version__ = "0.1.0"
