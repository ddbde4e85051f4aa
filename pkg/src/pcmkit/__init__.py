"""pcmkit: inconsistency analysis for multiplicative pairwise comparison matrices.

The toolkit covers triad-based inconsistency indicators with worst-triad
localization, eigenvalue-based CI/CR, two adversarial matrix families with
closed-form eigenvalues, eigenvalue lower bounds driven by triad scores, a
stepwise repair loop, CSV/JSON I/O, a CLI, and an HTTP JSON service.
"""

from .matrix import (
    CONSISTENCY_RTOL,
    MAX_SIZE,
    MatrixValidationError,
    PCMatrix,
    Triad,
    WeightVector,
    approx_error,
    consistent_approx,
    geometric_mean_weights,
    is_consistent,
    make_matrix,
    triads,
)
from .indicators import (
    DEFAULT_AXIOM_GRID,
    AxiomCounterexample,
    AxiomReport,
    KiiResult,
    TriadIndicator,
    chain_ii,
    check_axioms,
    kii,
    triad_ii,
    triad_inconsistencies,
)
from .spectral import (
    ALTERNATE_RI_N3,
    CR_ACCEPTANCE_THRESHOLD,
    DEFAULT_RI_TABLE,
    ConvergenceError,
    CPCBounds,
    EigenResult,
    MissingRandomIndexError,
    RITable,
    cpc,
    cpc_ci_bounds,
    cpc_lambda_max,
    delta_error,
    eigen_bound_from_all_triads,
    eigen_bound_from_worst_triad,
    estimate_ri,
    fpc,
    fpc_lambda_max,
    max_acceptable_x,
    power_iteration,
    random_reciprocal,
    ratio_error,
    saaty_ci,
    saaty_cr,
)
from .reduction import (
    AlreadyConsistentError,
    DEFAULT_THRESHOLD,
    ReductionStep,
    ReductionTrace,
    RepairCandidate,
    reduce_inconsistency,
    reduce_step,
    repair_candidates,
    worst_triad,
)
from .analysis import IndicatorReport, TriadScore, analyze_matrix
from .matrixio import (
    MatrixDocument,
    document_from_json,
    document_to_json,
    format_csv,
    load_matrix,
    load_ri_table,
    matrix_from_dict,
    matrix_to_dict,
    parse_csv,
    ri_table_from_json,
    save_matrix,
)
from .reproduce import GoldenRow, all_pass, format_report, golden_rows, rows_to_json

__version__ = "0.1.0"

__all__ = [
    "ALTERNATE_RI_N3",
    "AlreadyConsistentError",
    "AxiomCounterexample",
    "AxiomReport",
    "CONSISTENCY_RTOL",
    "CPCBounds",
    "CR_ACCEPTANCE_THRESHOLD",
    "ConvergenceError",
    "DEFAULT_AXIOM_GRID",
    "DEFAULT_RI_TABLE",
    "DEFAULT_THRESHOLD",
    "EigenResult",
    "GoldenRow",
    "IndicatorReport",
    "KiiResult",
    "MAX_SIZE",
    "MatrixDocument",
    "MatrixValidationError",
    "MissingRandomIndexError",
    "PCMatrix",
    "RITable",
    "ReductionStep",
    "ReductionTrace",
    "RepairCandidate",
    "Triad",
    "TriadIndicator",
    "TriadScore",
    "WeightVector",
    "all_pass",
    "analyze_matrix",
    "approx_error",
    "chain_ii",
    "check_axioms",
    "consistent_approx",
    "cpc",
    "cpc_ci_bounds",
    "cpc_lambda_max",
    "delta_error",
    "document_from_json",
    "document_to_json",
    "eigen_bound_from_all_triads",
    "eigen_bound_from_worst_triad",
    "estimate_ri",
    "format_csv",
    "format_report",
    "fpc",
    "fpc_lambda_max",
    "geometric_mean_weights",
    "golden_rows",
    "is_consistent",
    "kii",
    "load_matrix",
    "load_ri_table",
    "make_matrix",
    "matrix_from_dict",
    "matrix_to_dict",
    "max_acceptable_x",
    "parse_csv",
    "power_iteration",
    "random_reciprocal",
    "ratio_error",
    "reduce_inconsistency",
    "reduce_step",
    "repair_candidates",
    "ri_table_from_json",
    "rows_to_json",
    "saaty_ci",
    "saaty_cr",
    "save_matrix",
    "triad_ii",
    "triad_inconsistencies",
    "triads",
    "worst_triad",
]
