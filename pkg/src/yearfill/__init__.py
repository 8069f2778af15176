"""yearfill: estimate missing publication years from graph structure.

Papers cite older papers and authors publish inside contiguous spans of
years; both facts bound what a missing year can be.  This package derives
those year windows on citation graphs, author-paper bipartite graphs and
their combination, turns windows into point estimates, and ships a K-fold
masking harness plus an analytical expected-coverage model for judging
the estimators.
"""

from .authorship import (
    AuthorshipRun,
    author_windows,
    build_pair_index,
    estimate_adviter,
    estimate_ba,
    estimate_iter,
    paper_window_from_authors,
    run_authorship,
    weighted_year,
)
from .citation import (
    CalibrationSample,
    CitationRun,
    calibration_lookup,
    derive_advanced_windows,
    derive_simple_windows,
    derive_windows_with_training,
    estimate_citation,
    run_citation,
)
from .evaluate import (
    ComponentPartition,
    EvalReport,
    FoldPlan,
    FoldResult,
    SyntheticParams,
    evaluate,
    expected_coverage,
    generate_synthetic,
    plan_folds,
    project_citation,
    project_coauthor,
    project_combined,
    score_fold,
    three_paper_topologies,
)
from .graph import (
    DEFAULT_YEAR_BOUNDS,
    AcademicGraph,
    LoadError,
    LoadReport,
    MaskedGraph,
    Paper,
    PreprocessReport,
    as_masked,
    load_graph,
    mask,
    preprocess,
    write_graph,
)
from .hetero import (
    CombinedCase,
    CombinedWindow,
    HeteroRun,
    combine_windows,
    estimate_asiter,
    estimate_g_adviter,
    estimate_ssba,
    run_hetero,
    weighted_year_windowed,
)
from .runner import NETWORK_ALGOS, EstimatorRun, run_estimator, validate_pair
from .windows import NO_LOWER, NO_UPPER, Window, WindowKind, round_half_up, window_year

__version__ = "0.1.0"

__all__ = [
    "AcademicGraph",
    "AuthorshipRun",
    "CalibrationSample",
    "CitationRun",
    "CombinedCase",
    "CombinedWindow",
    "ComponentPartition",
    "DEFAULT_YEAR_BOUNDS",
    "EstimatorRun",
    "EvalReport",
    "FoldPlan",
    "FoldResult",
    "HeteroRun",
    "LoadError",
    "LoadReport",
    "MaskedGraph",
    "NETWORK_ALGOS",
    "NO_LOWER",
    "NO_UPPER",
    "Paper",
    "PreprocessReport",
    "SyntheticParams",
    "Window",
    "WindowKind",
    "as_masked",
    "author_windows",
    "build_pair_index",
    "calibration_lookup",
    "combine_windows",
    "derive_advanced_windows",
    "derive_simple_windows",
    "derive_windows_with_training",
    "estimate_adviter",
    "estimate_asiter",
    "estimate_ba",
    "estimate_citation",
    "estimate_g_adviter",
    "estimate_iter",
    "estimate_ssba",
    "evaluate",
    "expected_coverage",
    "generate_synthetic",
    "load_graph",
    "mask",
    "paper_window_from_authors",
    "plan_folds",
    "preprocess",
    "project_citation",
    "project_coauthor",
    "project_combined",
    "round_half_up",
    "run_authorship",
    "run_citation",
    "run_estimator",
    "run_hetero",
    "score_fold",
    "three_paper_topologies",
    "validate_pair",
    "weighted_year",
    "weighted_year_windowed",
    "window_year",
    "write_graph",
]
