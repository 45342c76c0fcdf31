"""Constructive rooted kite subdivisions in highly connected graphs.

The package splits into a constructive side (fans, 2-linkages, staged
assembly, flowers) and an independent brute-force side (oracle) so the
two can cross-check each other. Graph and path value objects are shared.
"""

from .constructor import (
    ApexFan,
    DiagnosticRecord,
    FindKiteOptions,
    FindKiteResult,
    Landmarks,
    apex_fan,
    build_flower,
    claim1_assembly,
    claim2_assembly,
    claim3_assembly,
    compute_landmarks,
    find_kite,
    resolve_flower,
)
from .errors import (
    AssemblyFailed,
    BudgetExceeded,
    ConstructionFailed,
    DuplicateEdge,
    DuplicateTerminals,
    FlowerInvalid,
    FlowerResolutionExhausted,
    FormatError,
    GenerationExhausted,
    GraphTooSmall,
    InteriorOverlap,
    InvalidBaseFan,
    InvalidCycle,
    InvariantViolation,
    KitelinkError,
    LoopEdge,
    MalformedLine,
    NoSevenFan,
    NotSevenConnected,
    OrderingViolated,
    PreconditionViolated,
    SegmentsNotChainable,
    StageFailure,
    VertexNotOnPath,
    VertexOutOfRange,
)
from .fans import (
    CutCertificate,
    Fan,
    TerminalFan,
    check_fan,
    extend_fan,
    find_fan,
    has_connectivity_at_least,
    terminal_fan,
    vertex_connectivity,
)
from .generators import gen_complete_minus_matching, gen_random_kconnected
from .graphs import (
    Graph,
    format_graph,
    graph_as_json,
    parse_graph,
    parse_graph_json,
)
from .harness import (
    TrialConfig,
    TrialReport,
    report_lines,
    run_trials,
    stage_counts,
)
from .linkage import LinkagePair, two_linkage, two_linkage_oracle
from .oracle import (
    KiteLinkedVerdict,
    SearchBudget,
    find_kite_exhaustive,
    is_kite_linked,
)
from .paths import Cycle, Path, concat_paths, subpath
from .structures import (
    Flower,
    KiteSubdivision,
    RootQuadruple,
    Verdict,
    kite_from_json,
    verify_flower,
    verify_kite,
)

__version__ = "0.1.0"

__all__ = [
    "ApexFan",
    "AssemblyFailed",
    "BudgetExceeded",
    "ConstructionFailed",
    "CutCertificate",
    "Cycle",
    "DiagnosticRecord",
    "DuplicateEdge",
    "DuplicateTerminals",
    "Fan",
    "FindKiteOptions",
    "FindKiteResult",
    "Flower",
    "FlowerInvalid",
    "FlowerResolutionExhausted",
    "FormatError",
    "GenerationExhausted",
    "Graph",
    "GraphTooSmall",
    "InteriorOverlap",
    "InvalidBaseFan",
    "InvalidCycle",
    "InvariantViolation",
    "KiteLinkedVerdict",
    "KiteSubdivision",
    "KitelinkError",
    "Landmarks",
    "LinkagePair",
    "LoopEdge",
    "MalformedLine",
    "NoSevenFan",
    "NotSevenConnected",
    "OrderingViolated",
    "Path",
    "PreconditionViolated",
    "RootQuadruple",
    "SearchBudget",
    "SegmentsNotChainable",
    "StageFailure",
    "TerminalFan",
    "TrialConfig",
    "TrialReport",
    "Verdict",
    "VertexNotOnPath",
    "VertexOutOfRange",
    "apex_fan",
    "build_flower",
    "check_fan",
    "claim1_assembly",
    "claim2_assembly",
    "claim3_assembly",
    "compute_landmarks",
    "concat_paths",
    "extend_fan",
    "find_fan",
    "find_kite",
    "find_kite_exhaustive",
    "format_graph",
    "gen_complete_minus_matching",
    "gen_random_kconnected",
    "graph_as_json",
    "has_connectivity_at_least",
    "is_kite_linked",
    "kite_from_json",
    "parse_graph",
    "parse_graph_json",
    "report_lines",
    "resolve_flower",
    "run_trials",
    "stage_counts",
    "subpath",
    "terminal_fan",
    "two_linkage",
    "two_linkage_oracle",
    "verify_flower",
    "verify_kite",
    "vertex_connectivity",
]
