"""Quiver mutation combinatorics: covering pairs, class search, certificates."""

from .canonical import (
    canonical_form,
    canonical_key,
    enumerate_quivers_up_to_iso,
    is_isomorphic,
)
from .errors import (
    ArrowMissingError,
    BadBudgetError,
    BadMultiplicityError,
    BadPartitionError,
    EmptySetError,
    IllegalNodeForClassError,
    InvalidInputCertificateError,
    LabelMapMismatchError,
    LoopArrowError,
    MalformedDocumentError,
    NotACoveringPairError,
    NotAcyclicError,
    QuiverError,
    QuiverShapeError,
    TwoCycleError,
    UnknownVertexError,
)
from .membership import (
    BaseAcyclic,
    BaseNoArrows,
    BaseTrivial,
    Certificate,
    ClassId,
    CoverSplit,
    MembershipSearcher,
    MutationStep,
    ScanReport,
    SourceSinkSplit,
    SplitMode,
    TriangularStep,
    bprime_from_banff,
    check_certificate,
    derive_certificate,
    louise_cert_to_banff_cert,
    lprime_cert_to_bprime_cert,
    lprime_from_louise,
    pprime_from_bprime,
    relabel_certificate,
    scan_opac033,
)
from .quiver import (
    Permutation,
    Quiver,
    apply_sequence,
    delete_vertices,
    from_arrows,
    from_matrix,
    induced_subquiver,
    mutate,
    mutate_graphical,
    random_quiver,
    sinks,
    sources,
)
from .search import (
    ClassExploration,
    Explorer,
    SearchBudget,
    TruncationReason,
    Verdict,
    explore_class,
    find_matching,
    is_mutation_acyclic,
)
from .structure import (
    AcyclicOrdering,
    CoveringPair,
    CrossDirection,
    NormalizationMode,
    NormalizationResult,
    TriangularSplit,
    acyclic_ordering,
    ancestors,
    covering_pairs,
    covering_split,
    cycle_vertices,
    descendants,
    is_acyclic,
    is_triangular_extension,
    is_valid_acyclic_ordering,
    normalize_covering_pair,
    on_bi_infinite_path_oracle,
    source_sequence_from_ordering,
    verify_sink_sequence,
    verify_source_sequence,
)

__version__ = "0.1.0"
