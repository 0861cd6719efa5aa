"""Solvers for the identifiability test equations.

Two independent routes answer "how many theta' reproduce the
invariants":

* solve_generic specializes theta (and any declared constants) at a
  seeded generic rational point, computes a grevlex reduced Groebner
  basis of the specialized equations over Q, and reads dimension and
  solution count off the staircase. It runs at several seeds and votes:
  all seeds must agree; on disagreement the seed list is extended to
  five and the majority wins; no majority leaves the result
  indeterminate rather than guessing.

* solve_symbolic keeps theta symbolic (a transcendental coefficient
  field), computes a lex reduced basis in theta' alone, and extracts
  explicit solution branches plus relation certificates: products of up
  to two theta' symbols whose normal form against the basis contains no
  theta' symbol, i.e. parameter combinations pinned to functions of
  theta. It is best effort, bounded by an unknown cap and a time
  budget, and reports a status instead of failing the analysis.

jacobian_rank_oracle offers a third, Groebner-free check: the exact
rank of d(phi)/d(theta) at a generic point. The nullity (parameter
count minus rank) must equal the generic dimension; disagreement means
a bug in one of the routes, which is exactly why both exist.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import (
    Branch,
    Deadline,
    GenericPoint,
    GroebnerTimeout,
    MonomialOrder,
    NoSolutionError,
    NotExtractableError,
    Poly,
    RatFunc,
    Symbol,
    solve_triangular,
    variety_dimension,
)
from .algebra.groebner import (
    PolyCoeffDomain,
    RationalDomain,
    _leading,
    _reduce_full,
    engine_to_poly,
    groebner_engine,
    order_key,
    poly_to_engine,
)
from .algebra.solve import (
    DimensionReport,
    _count_standard_monomials,
    _max_independent_set,
)
from .invariants import InvariantSet, TestEquations

DEFAULT_SEEDS = (11, 23, 37)
ESCALATION_SEEDS = (51, 67)
DEFAULT_SYMBOLIC_TIMEOUT = 60.0
DEFAULT_MAX_SYMBOLIC_UNKNOWNS = 12


class IndeterminateError(RuntimeError):
    """Seeds disagreed without a majority; no verdict is justified."""


@dataclass(frozen=True)
class PositivityNote:
    """Effect of restricting branches to the non-negative orthant at a
    generic positive parameter point. Informational only."""

    branches_total: int
    branches_nonnegative: int
    text: str


@dataclass(frozen=True)
class SolutionSet:
    generic_dimension: int
    generic_count: Optional[int]  # None means infinitely many
    free_unknowns: tuple[Symbol, ...]
    seeds_used: tuple[int, ...]
    branches: Optional[tuple[Branch, ...]] = None
    relation_certificates: tuple[Poly, ...] = ()
    symbolic_basis: Optional[tuple[Poly, ...]] = None
    symbolic_status: str = "skipped"
    indeterminate: bool = False
    disagreement: Optional[str] = None
    positivity: Optional[PositivityNote] = None

    @property
    def finite(self) -> bool:
        return self.generic_count is not None


def _constants_of(eqs: TestEquations) -> list[Symbol]:
    unknowns = set(eqs.unknowns)
    knowns = set(eqs.knowns)
    extra: set[Symbol] = set()
    for eq in eqs.equations:
        extra |= eq.symbols() - unknowns - knowns
    return sorted(extra, key=lambda s: s.name)


def _all_free(eqs: TestEquations, seeds: Sequence[int]) -> SolutionSet:
    unknowns = eqs.unknowns
    return SolutionSet(
        generic_dimension=len(unknowns),
        generic_count=1 if not unknowns else None,
        free_unknowns=tuple(unknowns),
        seeds_used=tuple(seeds),
        branches=(Branch(assignments=(), free=tuple(unknowns)),),
        symbolic_status="trivial",
    )


def _dimension_at_seed(
    eqs: TestEquations,
    seed: int,
    deadline: Optional[Deadline],
) -> DimensionReport:
    specialize_syms = list(eqs.knowns) + _constants_of(eqs)
    point = GenericPoint.generate(specialize_syms, seed)
    specialized = [
        eq.specialize(point.assignment) for eq in eqs.active()
    ]
    domain = RationalDomain()
    engine_basis = groebner_engine(
        specialized, eqs.unknowns, MonomialOrder.GREVLEX, domain, deadline
    )
    basis = [engine_to_poly(g, eqs.unknowns, domain) for g in engine_basis]
    report = variety_dimension(basis, eqs.unknowns, MonomialOrder.GREVLEX)
    return report


def solve_generic(
    eqs: TestEquations,
    seeds: Optional[Sequence[int]] = None,
    deadline: Optional[Deadline] = None,
) -> SolutionSet:
    """Dimension and solution count at generic parameter values.

    The replacement theta' := theta always solves the system, so an
    inconsistent basis at any seed is an internal error, not a property
    of the structure.
    """
    seed_list = list(seeds) if seeds else list(DEFAULT_SEEDS)
    if not seed_list:
        raise ValueError("at least one seed is required")
    if not eqs.active():
        return _all_free(eqs, seed_list)

    reports: dict[int, DimensionReport] = {}

    def outcome(report: DimensionReport) -> tuple:
        return (report.dimension, report.count)

    for seed in seed_list:
        reports[seed] = _dimension_at_seed(eqs, seed, deadline)
    outcomes = [outcome(r) for r in reports.values()]
    chosen: Optional[tuple] = None
    disagreement = None
    if len(set(outcomes)) == 1:
        chosen = outcomes[0]
    else:
        extra = [s for s in ESCALATION_SEEDS if s not in reports]
        base = max(list(reports) + [0])
        while len(reports) + len(extra) < 5:
            base += 1000
            if base not in reports and base not in extra:
                extra.append(base)
        for seed in extra:
            if len(reports) >= 5:
                break
            seed_list.append(seed)
            reports[seed] = _dimension_at_seed(eqs, seed, deadline)
        tally: dict[tuple, int] = {}
        for r in reports.values():
            tally[outcome(r)] = tally.get(outcome(r), 0) + 1
        best = sorted(tally.items(), key=lambda kv: (-kv[1], str(kv[0])))
        disagreement = "seed outcomes: " + ", ".join(
            f"{k}x{v}" for k, v in sorted(tally.items(), key=lambda kv: str(kv[0]))
        )
        if best[0][1] * 2 > len(reports):
            chosen = best[0][0]
    if chosen is None:
        return SolutionSet(
            generic_dimension=-1,
            generic_count=None,
            free_unknowns=(),
            seeds_used=tuple(seed_list),
            indeterminate=True,
            disagreement=disagreement,
        )
    for seed in seed_list:
        if outcome(reports[seed]) == chosen:
            agreeing = reports[seed]
            break
    return SolutionSet(
        generic_dimension=agreeing.dimension,
        generic_count=agreeing.count,
        free_unknowns=agreeing.free_unknowns,
        seeds_used=tuple(seed_list),
        disagreement=disagreement,
    )


@dataclass(frozen=True)
class _Pivot:
    """One linear elimination step: coeff * unknown == neg_rest modulo the
    ideal, with coeff free of every unknown."""

    unknown: Symbol
    neg_rest: Poly
    coeff: Poly


def _substitute_pivot(eq: Poly, w: Symbol, neg_rest: Poly, coeff: Poly) -> Poly:
    """eq with w := neg_rest / coeff, denominators cleared by coeff^deg."""
    buckets = eq.coefficients_in(w)
    degree = max(p for p, _ in buckets)
    out = Poly.zero()
    for power, c in buckets:
        out = out + c * neg_rest**power * coeff ** (degree - power)
    return out


def _strip_equation(eq: Poly, remaining: Sequence[Symbol], domain: PolyCoeffDomain) -> Poly:
    """Drop shared content and normalize the leading rational."""
    if eq.is_zero():
        return eq
    key = order_key(MonomialOrder.LEX)
    engine = poly_to_engine(eq, remaining, domain)
    lead = _leading(engine, key)
    return engine_to_poly(domain.scale_to_canonical(engine, lead), remaining, domain)


def _eliminate_linear(
    equations: Sequence[Poly],
    unknowns: Sequence[Symbol],
    domain: PolyCoeffDomain,
) -> tuple[list[_Pivot], list[Poly], list[Symbol]]:
    """Repeatedly remove unknowns that occur linearly with a coefficient
    free of all unknowns. Sound over the coefficient field (the pivot
    coefficient is a nonzero base-field element, hence a unit) and the
    main defense against coefficient swell in the core basis run.

    Pivots with rational coefficients are preferred; first match in
    equation order, then unknown order, keeps the cascade deterministic.
    """
    work = [eq for eq in equations if not eq.is_zero()]
    remaining = list(unknowns)
    pivots: list[_Pivot] = []
    while remaining:
        found = None
        live = set(remaining)
        for want_rational in (True, False):
            for ei, eq in enumerate(work):
                for w in remaining:
                    if eq.degree_in(w) != 1:
                        continue
                    buckets = dict(eq.coefficients_in(w))
                    coeff = buckets[1]
                    if coeff.symbols() & live:
                        continue
                    if coeff.is_const() != want_rational:
                        continue
                    found = (ei, w, coeff, buckets.get(0, Poly.zero()))
                    break
                if found:
                    break
            if found:
                break
        if found is None:
            break
        ei, w, coeff, rest = found
        neg_rest = -rest
        work.pop(ei)
        remaining.remove(w)
        substituted: list[Poly] = []
        seen: set[Poly] = set()
        for eq in work:
            if domain.deadline is not None:
                domain.deadline.check()
            if eq.degree_in(w) > 0:
                eq = _substitute_pivot(eq, w, neg_rest, coeff)
            eq = _strip_equation(eq, remaining, domain)
            if eq.is_zero() or eq in seen:
                continue
            seen.add(eq)
            substituted.append(eq)
        work = substituted
        pivots.append(_Pivot(w, neg_rest, coeff))
    return pivots, work, remaining


def _resolution_map(
    pivots: Sequence[_Pivot], remaining: Sequence[Symbol]
) -> dict[Symbol, RatFunc]:
    """Each eliminated unknown as a rational function of the remaining
    unknowns and the base symbols; later pivots resolve first."""
    rep: dict[Symbol, RatFunc] = {}
    for pv in reversed(pivots):
        mapped = pv.neg_rest.substitute(rep)
        rep[pv.unknown] = RatFunc(mapped.num, mapped.den * pv.coeff).normalized()
    return rep


def _normal_form_theta_only(
    p: Poly,
    unknowns: Sequence[Symbol],
    domain: PolyCoeffDomain,
    lead_basis,
    key,
) -> Optional[tuple[Poly, Poly]]:
    """Pseudo normal form of p against the symbolic basis.

    Returns (remainder, multiplier) with mult * p = remainder modulo the
    ideal, both theta-only, or None when theta' symbols survive."""
    f = poly_to_engine(p, unknowns, domain)
    reduced, mult = _reduce_full(domain, f, lead_basis, key, track=True)
    zero_exps = tuple([0] * len(unknowns))
    for exps in reduced:
        if exps != zero_exps:
            return None
    return engine_to_poly(reduced, unknowns, domain), mult


def reduce_symbolic(
    p: Poly,
    eqs: TestEquations,
    basis: Sequence[Poly],
) -> Poly:
    """Normal form of a flat polynomial against a symbolic lex basis,
    treating theta and constants as base-field elements."""
    domain = PolyCoeffDomain()
    key = order_key(MonomialOrder.LEX)
    engine_basis = [poly_to_engine(b, eqs.unknowns, domain) for b in basis]
    f = poly_to_engine(p, eqs.unknowns, domain)
    lead_basis = [(_leading(g, key), g) for g in engine_basis]
    reduced = _reduce_full(domain, f, lead_basis, key)
    return engine_to_poly(reduced, eqs.unknowns, domain)


def _canonical_certificate(
    raw: Poly,
    unknowns: Sequence[Symbol],
    domain: PolyCoeffDomain,
    key,
) -> Poly:
    """Strip theta content and normalize the leading coefficient."""
    engine = poly_to_engine(raw, unknowns, domain)
    lead = _leading(engine, key)
    return engine_to_poly(domain.scale_to_canonical(engine, lead), unknowns, domain)


def _harvest_certificates(
    eqs: TestEquations,
    rep: dict[Symbol, RatFunc],
    remaining: Sequence[Symbol],
    domain: PolyCoeffDomain,
    engine_basis,
) -> tuple[Poly, ...]:
    """Products of at most two theta' symbols pinned to theta functions.

    Each certificate u * product - r lies in the test ideal with u and r
    theta-only, i.e. the product equals r / u wherever the invariants
    match. Eliminated unknowns enter through their representatives over
    the remaining ones. Products of two individually pinned parameters
    are skipped as uninformative."""
    unknowns = eqs.unknowns
    key = order_key(MonomialOrder.LEX)
    lead_basis = [(_leading(g, key), g) for g in engine_basis]

    def rep_of(sym: Symbol) -> RatFunc:
        got = rep.get(sym)
        return got if got is not None else RatFunc(Poly.var(sym), Poly.one())

    pinned: set[Symbol] = set()
    for sym in unknowns:
        r = rep_of(sym)
        nf = _normal_form_theta_only(r.num, remaining, domain, lead_basis, key)
        if nf is not None:
            pinned.add(sym)
    certificates: list[Poly] = []
    for i, a in enumerate(unknowns):
        for b in unknowns[i:]:
            if a in pinned and b in pinned:
                continue
            product = rep_of(a) * rep_of(b)
            nf = _normal_form_theta_only(
                product.num, remaining, domain, lead_basis, key
            )
            if nf is None:
                continue
            remainder, mult = nf
            # mult * product.num == remainder mod ideal, so
            # mult * product.den * (a*b) == remainder
            raw = Poly.var(a) * Poly.var(b) * (mult * product.den) - remainder
            certificates.append(_canonical_certificate(raw, unknowns, domain, key))
    return tuple(certificates)


def _extend_branch(
    branch: Branch,
    pivots: Sequence[_Pivot],
    rep: dict[Symbol, RatFunc],
    unknown_rank: dict[Symbol, int],
) -> Branch:
    """Attach the eliminated unknowns to a branch of the core system."""
    assigned = dict(branch.assignments)
    extended = dict(assigned)
    for pv in pivots:
        expr = rep[pv.unknown]
        num_sub = expr.num.substitute(assigned)
        resolved = RatFunc(num_sub.num, num_sub.den * expr.den).normalized()
        extended[pv.unknown] = resolved
    ordered = tuple(
        sorted(extended.items(), key=lambda kv: unknown_rank[kv[0]])
    )
    return Branch(assignments=ordered, free=branch.free)


class _CapExceeded(Exception):
    """Core system still has more unknowns than the configured cap."""


def _attempt_symbolic(
    eqs: TestEquations,
    eliminate: bool,
    max_unknowns: int,
    deadline: Optional[Deadline],
) -> SolutionSet:
    """One symbolic attempt; raises GroebnerTimeout or _CapExceeded."""
    unknowns = eqs.unknowns
    domain = PolyCoeffDomain(deadline)
    key = order_key(MonomialOrder.LEX)
    if eliminate:
        pivots, core, remaining = _eliminate_linear(eqs.active(), unknowns, domain)
    else:
        pivots, core, remaining = [], list(eqs.active()), list(unknowns)
    if core and not remaining:
        # a nonzero base-field equation survived: impossible, since
        # theta' := theta always solves the real test equations
        raise NoSolutionError("symbolic test equations are inconsistent")
    if len(remaining) > max_unknowns:
        raise _CapExceeded
    engine_basis = (
        groebner_engine(core, remaining, MonomialOrder.LEX, domain, deadline)
        if core
        else []
    )
    core_basis = [engine_to_poly(g, remaining, domain) for g in engine_basis]
    leads = [_leading(g, key) for g in engine_basis]
    zero_exps = tuple([0] * len(remaining))
    if any(lead == zero_exps for lead in leads):
        raise NoSolutionError("symbolic test equations are inconsistent")
    nvars = len(remaining)
    independent = _max_independent_set(leads, nvars)
    dimension = len(independent)
    count: Optional[int] = None
    if dimension == 0:
        count = _count_standard_monomials(leads, nvars)
    rep = _resolution_map(pivots, remaining)
    try:
        certificates = _harvest_certificates(
            eqs, rep, remaining, domain, engine_basis
        )
    except GroebnerTimeout:
        certificates = ()
    unknown_rank = {sym: i for i, sym in enumerate(unknowns)}
    branches: Optional[tuple[Branch, ...]] = None
    status = "ok"
    try:
        core_branches = solve_triangular(core_basis, remaining)
        branches = tuple(
            _extend_branch(b, pivots, rep, unknown_rank) for b in core_branches
        )
    except (NotExtractableError, NoSolutionError):
        status = "not-extractable"
    basis_out = [
        _canonical_certificate(
            Poly.var(pv.unknown) * pv.coeff - pv.neg_rest, unknowns, domain, key
        )
        for pv in pivots
    ]
    basis_out.extend(core_basis)
    return SolutionSet(
        generic_dimension=dimension,
        generic_count=count,
        free_unknowns=tuple(remaining[i] for i in independent),
        seeds_used=(),
        branches=branches,
        relation_certificates=certificates,
        symbolic_basis=tuple(basis_out),
        symbolic_status=status,
    )


# (eliminate-first?, budget): the first two probes are short; survivors
# of both probes get the remaining budget split between the two modes
_ATTEMPT_PLAN = ((False, 3.0), (True, 3.0), (False, 0.5), (True, 1.0))


def solve_symbolic(
    eqs: TestEquations,
    max_unknowns: int = DEFAULT_MAX_SYMBOLIC_UNKNOWNS,
    timeout: Optional[float] = DEFAULT_SYMBOLIC_TIMEOUT,
    deadline: Optional[Deadline] = None,
) -> SolutionSet:
    """Symbolic solution of the test equations over the theta field.

    Two preprocessing modes are raced under a deterministic schedule:
    one eliminates unknowns that occur linearly with a base-field
    coefficient before the basis run, the other hands the equations to
    the basis engine untouched. Either can be dramatically faster,
    depending on how the elimination reshapes the leading terms, so each
    gets a short probe before any long run. Best effort throughout: the
    unknown cap (applied to the core system), the time budget, and
    branch extraction limits each downgrade the result with a status
    instead of raising.
    """
    if not eqs.active():
        return _all_free(eqs, ())
    if deadline is None:
        deadline = Deadline(timeout)
    saw_timeout = False
    saw_cap = False
    for idx, (eliminate, amount) in enumerate(_ATTEMPT_PLAN):
        left = deadline.seconds_left()
        if left is not None and left <= 0.05:
            saw_timeout = True
            break
        if idx < 2:
            sub_seconds = amount if left is None else min(amount, left)
        else:
            sub_seconds = None if left is None else max(left * amount, 0.1)
        try:
            return _attempt_symbolic(
                eqs, eliminate, max_unknowns, Deadline(sub_seconds)
            )
        except GroebnerTimeout:
            saw_timeout = True
        except _CapExceeded:
            saw_cap = True
    return SolutionSet(
        generic_dimension=-1,
        generic_count=None,
        free_unknowns=(),
        seeds_used=(),
        symbolic_status="timeout" if saw_timeout else "too-many-unknowns",
    )


def merge_solutions(generic: SolutionSet, symbolic: Optional[SolutionSet]) -> SolutionSet:
    """Authoritative dimension and count from the generic route, with the
    symbolic route's branches, certificates and basis attached."""
    if symbolic is None:
        return generic
    return SolutionSet(
        generic_dimension=generic.generic_dimension,
        generic_count=generic.generic_count,
        free_unknowns=generic.free_unknowns,
        seeds_used=generic.seeds_used,
        branches=symbolic.branches,
        relation_certificates=symbolic.relation_certificates,
        symbolic_basis=symbolic.symbolic_basis,
        symbolic_status=symbolic.symbolic_status,
        indeterminate=generic.indeterminate,
        disagreement=generic.disagreement,
        positivity=generic.positivity,
    )


def jacobian_rank_oracle(
    inv: InvariantSet,
    theta: Sequence[Symbol],
    seed: int,
) -> int:
    """Exact rank of the invariant Jacobian d(phi)/d(theta) at a seeded
    generic point. Constants beyond theta are specialized too."""
    extra: set[Symbol] = set()
    for phi in inv.invariants:
        extra |= phi.symbols() - set(theta)
    specialize_syms = list(theta) + sorted(extra, key=lambda s: s.name)
    point = GenericPoint.generate(specialize_syms, seed)
    rows = []
    for phi in inv.invariants:
        row = [
            phi.derivative(sym).evaluate(point.assignment) for sym in theta
        ]
        rows.append(row)
    return _exact_rank(rows)


def _exact_rank(rows: list[list[Fraction]]) -> int:
    if not rows:
        return 0
    matrix = [list(row) for row in rows]
    n_rows = len(matrix)
    n_cols = len(matrix[0])
    rank = 0
    row = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row, n_rows):
            if matrix[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        matrix[row], matrix[pivot] = matrix[pivot], matrix[row]
        pv = matrix[row][col]
        for r in range(row + 1, n_rows):
            factor = matrix[r][col] / pv
            if factor:
                matrix[r] = [
                    a - factor * b for a, b in zip(matrix[r], matrix[row])
                ]
        rank += 1
        row += 1
        if row == n_rows:
            break
    return rank


def apply_positivity_filter(
    sol: SolutionSet,
    eqs: TestEquations,
    seed: Optional[int] = None,
) -> SolutionSet:
    """Annotate the solution with how many branches stay in the
    non-negative orthant at a generic positive point. The verdict-bearing
    fields are never changed."""
    if sol.branches is None:
        note = PositivityNote(
            branches_total=0,
            branches_nonnegative=0,
            text="no explicit branches; positivity filter not applied",
        )
        return _with_positivity(sol, note)
    if seed is None:
        seed = sol.seeds_used[0] if sol.seeds_used else DEFAULT_SEEDS[0]
    specialize_syms = list(eqs.knowns) + _constants_of(eqs)
    point = GenericPoint.generate(specialize_syms, seed)
    base = dict(point.assignment)
    theta_value = {k: base[k] for k in eqs.knowns}
    prime_of = dict(zip(eqs.knowns, eqs.unknowns))
    surviving = 0
    for branch in sol.branches:
        assignment = dict(base)
        # free replacement symbols take the matching theta values
        for known, prime in prime_of.items():
            if prime in branch.free:
                assignment[prime] = theta_value[known]
        ok = True
        for _, expr in branch.assignments:
            try:
                value = expr.evaluate(assignment)
            except (ZeroDivisionError, KeyError):
                ok = False
                break
            if value < 0:
                ok = False
                break
        if ok:
            surviving += 1
    total = len(sol.branches)
    if surviving == total:
        text = f"all {total} branch(es) lie in the non-negative orthant at a generic positive point"
    else:
        text = (
            f"{surviving} of {total} branch(es) lie in the non-negative orthant "
            "at a generic positive point; the verdict above does not apply this filter"
        )
    return _with_positivity(sol, PositivityNote(total, surviving, text))


def _with_positivity(sol: SolutionSet, note: PositivityNote) -> SolutionSet:
    return replace(sol, positivity=note)
