"""Exact identifiability analysis for linear compartmental structures."""

__version__ = "0.1.0"

from .classify import (
    Classification,
    STATUS_FINITE,
    STATUS_FREE,
    STATUS_UNIQUE,
    STATUS_UNRESOLVED,
    VERDICT_SGI,
    VERDICT_SLI,
    VERDICT_SU,
    VERDICT_UNKNOWN,
    classify,
)
from .invariants import (
    InvariantError,
    InvariantOrigin,
    InvariantSet,
    NoParameterInformation,
    ParameterRenaming,
    RenamingError,
    TestEquations,
    collect_invariants,
    identifiability_eqn_list,
    theta_prime_creation,
)
from .service import AnalysisRequest, AnalysisResult, run_analysis
from .solver import (
    SolutionSet,
    apply_positivity_filter,
    jacobian_rank_oracle,
    merge_solutions,
    solve_generic,
    solve_symbolic,
)
from .structures import (
    DesignEdit,
    EditError,
    StructureError,
    StructureSpec,
    apply_edits,
    make_structure,
    parse_structure,
    serialize_structure,
    validate_compartmental,
)
from .transfer import TransferError, TransferMatrix, build_transfer_matrix, process_matrix

__all__ = [
    "AnalysisRequest",
    "AnalysisResult",
    "Classification",
    "DesignEdit",
    "EditError",
    "InvariantError",
    "InvariantOrigin",
    "InvariantSet",
    "NoParameterInformation",
    "ParameterRenaming",
    "RenamingError",
    "SolutionSet",
    "STATUS_FINITE",
    "STATUS_FREE",
    "STATUS_UNIQUE",
    "STATUS_UNRESOLVED",
    "StructureError",
    "StructureSpec",
    "TestEquations",
    "TransferError",
    "TransferMatrix",
    "VERDICT_SGI",
    "VERDICT_SLI",
    "VERDICT_SU",
    "VERDICT_UNKNOWN",
    "apply_edits",
    "apply_positivity_filter",
    "build_transfer_matrix",
    "classify",
    "collect_invariants",
    "identifiability_eqn_list",
    "jacobian_rank_oracle",
    "make_structure",
    "merge_solutions",
    "parse_structure",
    "process_matrix",
    "run_analysis",
    "serialize_structure",
    "solve_generic",
    "solve_symbolic",
    "theta_prime_creation",
    "validate_compartmental",
    "__version__",
]
