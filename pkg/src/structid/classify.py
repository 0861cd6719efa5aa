"""Verdict assignment from a solved set of test equations.

The verdict is read off the generic dimension and count of the solution
set: a zero-dimensional singleton means the invariants pin every
parameter (SGI), finitely many solutions mean the parameters are only
locally pinned (SLI), positive dimension means a continuum of
indistinguishable parameter vectors (SU), and an indeterminate solve
yields "unknown" rather than a guess. The four verdicts are mutually
exclusive and cover every outcome.

Per parameter, branches (when extracted) refine the picture: a
parameter whose expression is identical in every branch is unique, one
that is free or depends on a free symbol varies continuously, the rest
take finitely many values. Without branches the statuses fall back to
what dimension and count alone justify.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import RatFunc, Symbol
from .invariants import ParameterRenaming
from .solver import SolutionSet

VERDICT_SGI = "SGI"
VERDICT_SLI = "SLI"
VERDICT_SU = "SU"
VERDICT_UNKNOWN = "unknown"

STATUS_UNIQUE = "unique"
STATUS_FINITE = "finitely-many"
STATUS_FREE = "free"
STATUS_UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class Classification:
    verdict: str
    generic_dimension: Optional[int]
    generic_count: Optional[int]
    free_parameters: tuple[str, ...]
    per_parameter: dict[str, str]
    positivity: Optional[str] = None

    @property
    def rationale(self) -> str:
        if self.verdict == VERDICT_UNKNOWN:
            return "the solve was indeterminate; no verdict is justified"
        if self.verdict == VERDICT_SGI:
            return "the test equations have exactly one generic solution"
        if self.verdict == VERDICT_SLI:
            return (
                f"the test equations have {self.generic_count} generic solutions"
            )
        free = ", ".join(self.free_parameters) or "(none listed)"
        return (
            f"the generic solution set has dimension {self.generic_dimension}; "
            f"free: {free}"
        )


def _verdict_of(sol: SolutionSet) -> str:
    if sol.indeterminate:
        return VERDICT_UNKNOWN
    if sol.generic_dimension > 0:
        return VERDICT_SU
    if sol.generic_count == 1:
        return VERDICT_SGI
    if sol.generic_count is not None and sol.generic_count > 1:
        return VERDICT_SLI
    return VERDICT_UNKNOWN


def _branch_status(
    prime: Symbol,
    sol: SolutionSet,
    free_symbols: set[Symbol],
) -> str:
    expressions: list[RatFunc] = []
    for branch in sol.branches:
        if prime in branch.free:
            return STATUS_FREE
        expr = branch.expression_for(prime)
        if expr is None:
            return STATUS_UNRESOLVED
        if (expr.num.symbols() | expr.den.symbols()) & free_symbols:
            return STATUS_FREE
        expressions.append(expr)
    first = expressions[0]
    if all(first.equivalent(e) for e in expressions[1:]):
        return STATUS_UNIQUE
    return STATUS_FINITE


def classify(sol: SolutionSet, renaming: ParameterRenaming) -> Classification:
    """Assign the verdict and per-parameter statuses for a solution set."""
    verdict = _verdict_of(sol)
    dimension = None if sol.indeterminate else sol.generic_dimension
    count = None if sol.indeterminate else sol.generic_count
    free_names = tuple(s.name for s in sol.free_unknowns)
    per: dict[str, str] = {}
    # Branches may pick a different free coordinate than the generic
    # staircase did; both count when deciding "varies continuously".
    free_set = set(sol.free_unknowns)
    for branch in sol.branches or ():
        free_set |= set(branch.free)
    for theta, prime in zip(renaming.theta, renaming.theta_prime):
        if verdict == VERDICT_UNKNOWN:
            per[theta.name] = STATUS_UNRESOLVED
        elif sol.branches:
            per[theta.name] = _branch_status(prime, sol, free_set)
        elif verdict == VERDICT_SGI:
            per[theta.name] = STATUS_UNIQUE
        elif verdict == VERDICT_SLI:
            per[theta.name] = STATUS_FINITE
        else:
            per[theta.name] = (
                STATUS_FREE if prime in free_set else STATUS_UNRESOLVED
            )
    positivity = sol.positivity.text if sol.positivity is not None else None
    return Classification(
        verdict=verdict,
        generic_dimension=dimension,
        generic_count=count,
        free_parameters=free_names,
        per_parameter=per,
        positivity=positivity,
    )
