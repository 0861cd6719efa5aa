import json

import pytest
from hypothesis import HealthCheck, settings

from structid.bundled import get_example
from structid.invariants import (
    collect_invariants,
    identifiability_eqn_list,
    theta_prime_creation,
)
from structid.service import AnalysisRequest, run_analysis
from structid.solver import merge_solutions, solve_generic, solve_symbolic
from structid.structures import DesignEdit, apply_edits, parse_structure
from structid.transfer import build_transfer_matrix, process_matrix

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=30,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

# The reference case and its two experiment-design variants; most of the
# suite exercises these three in one way or another.
CASE_EDITS = {
    "parent": (),
    "sgi": ("C[1][1]=1",),
    "sli": ("C[1][1]=1", "C[2][2]=1", "C[3][3]=0"),
}


def spec_for_case(label: str):
    spec = parse_structure(json.dumps(get_example("parent")))
    edits = CASE_EDITS[label]
    if edits:
        spec = apply_edits(spec, [DesignEdit.parse(e, spec.table) for e in edits])
    return spec


def equations_for_spec(spec, mode: str = "caps"):
    tm = process_matrix(build_transfer_matrix(spec))
    inv = collect_invariants(tm)
    renaming = theta_prime_creation(spec.theta, mode=mode)
    return identifiability_eqn_list(inv, renaming)


@pytest.fixture(scope="session")
def case_specs():
    return {label: spec_for_case(label) for label in CASE_EDITS}


@pytest.fixture(scope="session")
def case_equations(case_specs):
    return {label: equations_for_spec(spec) for label, spec in case_specs.items()}


@pytest.fixture(scope="session")
def case_solutions(case_equations):
    """Merged generic + symbolic solution for each reference case."""
    out = {}
    for label, eqs in case_equations.items():
        out[label] = merge_solutions(solve_generic(eqs), solve_symbolic(eqs))
    return out


@pytest.fixture(scope="session")
def case_results():
    """Full service-level analysis result for each reference case."""
    out = {}
    for label, edits in CASE_EDITS.items():
        request = AnalysisRequest(
            structure=get_example("parent"),
            edits=edits,
            positivity_filter=True,
        )
        out[label] = run_analysis(request)
    return out
