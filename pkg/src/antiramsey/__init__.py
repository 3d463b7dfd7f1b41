"""antiramsey: exact tools for rainbow subgraphs of colored uniform hypergraphs.

The package bundles the small-instance machinery needed to work with
anti-Ramsey style questions end to end: hypergraph and coloring values with
stable JSON forms, exact chromatic criticality, partition classes, balanced
crossing constructions and their lower-bound colorings, exhaustive rainbow
search, brute-force extremal oracles, and a verification harness.  A FastAPI
service (antiramsey.service) exposes every operation; the CLI is a thin
client of that service.
"""

from .chromatic import (
    CriticalityReport,
    chromatic_number,
    doubly_critical_report,
    is_edge_critical,
)
from .constructions import (
    ExpansionResult,
    TuranResult,
    balanced_partition,
    expansion,
    lower_bound_coloring_general,
    lower_bound_coloring_r3,
    trivial_lower_bound_coloring,
    turan_count,
    turan_hypergraph,
)
from .errors import (
    AntiRamseyError,
    BudgetExceededError,
    DegenerateConstructionError,
    EdgeNotPresentError,
    InvalidParametersError,
    NotApplicableError,
    ParseError,
    PreconditionError,
    WrongUniformityError,
)
from .hypergraph import (
    EdgeColoring,
    EmbeddingMap,
    Hypergraph,
    codegree,
    complete_hypergraph,
    parse_coloring,
    parse_hypergraph,
    remove_edges,
    serialize_coloring,
    serialize_hypergraph,
)
from .oracles import (
    ClosenessResult,
    CrossingSplit,
    FMaxResult,
    OracleReport,
    ar_bruteforce,
    closeness_to_turan,
    crossing_split,
    ex_bruteforce,
    f_maximize,
    f_potential,
)
from .partitions import (
    IndexVector,
    VertexPartition,
    class_of,
    config_witness,
    enumerate_partitions,
    index_vector,
    parse_partition,
    serialize_partition,
)
from .rainbow import (
    PairClassification,
    RainbowCopy,
    SkeletonExtension,
    classify_pairs,
    extend_skeleton,
    find_rainbow_copy,
    maximal_disjoint_rainbow_collection,
    terminal_pairs,
)
from .verify import (
    ScanEntry,
    ScanResult,
    VerificationReport,
    collection_bound_report,
    format_reports_table,
    observe_upper_bound,
    scan_doubly_critical,
    verify_lower_bound,
    verify_small_case,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
