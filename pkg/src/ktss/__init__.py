"""Learning unions of strictly k-testable languages from positive samples."""

from ktss.automata import Dfa, dfa_equivalent, dfa_union, enumerate_words, to_dfa
from ktss.canonical import CompatibilityGraph, build_graph, canonicalize, is_canonical, union_graph, union_is_exact
from ktss.clustering import (
    final_clusters,
    ClusterNode,
    Linkage,
    LinkageRow,
    cut,
    distance_matrix,
    learn_union,
    naive_closure_union,
    nn_chain_linkage,
)
from ktss.core import (
    KTestVector,
    alpha,
    bottom,
    cardinality,
    distance,
    is_member,
    join,
    leq,
    make_vector,
    meet,
    sym_diff,
    top,
)
from ktss.errors import (
    InvalidTarget,
    KMismatch,
    KTSSError,
    LengthViolation,
    NotCanonical,
    SizeGuard,
    UnreachedTargetWarning,
)

__version__ = "0.1.0"
