"""Social network analysis with fuzzy tie strengths.

Edges carry triangular fuzzy numbers instead of crisp weights. The package
covers ordered weighted aggregation (crisp and fuzzy), step-capped strongest
paths, fuzzy centrality indices with crisp baselines, questionnaire
trajectory ingestion, text formats for networks and reports, and a CLI.

The path kernels have a compiled and a pure-Python implementation producing
bit-identical results; see fuzzysna.kernels.backend_name().
"""

from .aggregation import (
    ASSOCIATED_PAIRS,
    ProximityProfile,
    TConorm,
    TNorm,
    WeightVector,
    andness,
    fowa,
    mediality,
    orness,
    owa,
    proximity_profile,
    tconorm,
    tnorm,
    weight_distance,
)
from .centrality import (
    CRISP_INDICES,
    FUZZY_INDICES,
    REPORT_INDICES,
    CentralityReport,
    CrispBaselines,
    IndexParameters,
    ReportRow,
    build_report,
    crisp_baselines,
    fuzzy_betweenness,
    fuzzy_betweenness_all,
    fuzzy_in_closeness,
    fuzzy_in_degree,
    fuzzy_out_closeness,
    fuzzy_out_degree,
    fuzzy_total_closeness,
    fuzzy_total_degree,
    reciprocal_closeness,
)
from .errors import (
    DomainError,
    FormatError,
    FormatIssue,
    FuzzySNAError,
    IngestionWarning,
    InvalidPathError,
    TruncationWarning,
    UnknownNodeError,
)
from .graph import (
    DEFAULT_MAX_PATHS,
    DEFAULT_STEP_CAP,
    DEFAULT_TIE_EPS,
    FuzzyDigraph,
    IntensityMatrix,
    PathEnumeration,
    PathEvaluation,
    all_best_paths,
    best_path,
    connected_intensity,
    intensity_matrix,
    path_intensity,
    random_network,
)
from .ingestion import (
    FuzzificationConfig,
    IngestResult,
    QuestionnaireResponse,
    RejectedRecord,
    ResponsesDocument,
    ScaleGeometry,
    TrajectorySample,
    build_network,
    fuzzify_trajectory,
    project_to_scale,
)
from .io import (
    format_tfn,
    load_network,
    load_responses,
    network_from_text,
    network_to_text,
    parse_tfn,
    report_to_json,
    report_to_tsv,
    responses_from_text,
    responses_to_text,
    save_network,
    save_report,
    save_responses,
)
from .kernels import available_backends, backend_name
from .tfn import TFN, TriangularFuzzyNumber, cog, rank_descending

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # numbers
    "TriangularFuzzyNumber",
    "TFN",
    "cog",
    "rank_descending",
    # aggregation
    "TNorm",
    "TConorm",
    "ASSOCIATED_PAIRS",
    "tnorm",
    "tconorm",
    "WeightVector",
    "owa",
    "fowa",
    "orness",
    "andness",
    "weight_distance",
    "mediality",
    "ProximityProfile",
    "proximity_profile",
    # graphs and paths
    "FuzzyDigraph",
    "PathEvaluation",
    "PathEnumeration",
    "path_intensity",
    "best_path",
    "all_best_paths",
    "connected_intensity",
    "IntensityMatrix",
    "intensity_matrix",
    "random_network",
    "DEFAULT_STEP_CAP",
    "DEFAULT_TIE_EPS",
    "DEFAULT_MAX_PATHS",
    # centrality
    "IndexParameters",
    "FUZZY_INDICES",
    "CRISP_INDICES",
    "REPORT_INDICES",
    "fuzzy_in_degree",
    "fuzzy_out_degree",
    "fuzzy_total_degree",
    "fuzzy_betweenness",
    "fuzzy_betweenness_all",
    "fuzzy_in_closeness",
    "fuzzy_out_closeness",
    "fuzzy_total_closeness",
    "reciprocal_closeness",
    "CrispBaselines",
    "crisp_baselines",
    "ReportRow",
    "CentralityReport",
    "build_report",
    # ingestion
    "ScaleGeometry",
    "TrajectorySample",
    "QuestionnaireResponse",
    "ResponsesDocument",
    "FuzzificationConfig",
    "project_to_scale",
    "fuzzify_trajectory",
    "RejectedRecord",
    "IngestResult",
    "build_network",
    # formats
    "format_tfn",
    "parse_tfn",
    "network_to_text",
    "network_from_text",
    "save_network",
    "load_network",
    "responses_to_text",
    "responses_from_text",
    "save_responses",
    "load_responses",
    "report_to_tsv",
    "report_to_json",
    "save_report",
    # kernels
    "backend_name",
    "available_backends",
    # errors
    "FuzzySNAError",
    "DomainError",
    "InvalidPathError",
    "UnknownNodeError",
    "FormatIssue",
    "FormatError",
    "IngestionWarning",
    "TruncationWarning",
]
