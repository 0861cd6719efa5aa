"""Variety analysis on reduced Groebner bases at desk scale.

variety_dimension reads dimension off the staircase of leading
monomials: the dimension equals the size of the largest subset of
unknowns that supports no leading monomial. When the dimension is zero
the number of solutions (counted with multiplicity) is the number of
standard monomials under the staircase.

solve_triangular walks a lex basis from the least unknown upward and
extracts explicit solution branches. It handles at most one relation
per unknown with degree at most two in that unknown, takes square roots
only when the discriminant is an exact square, and otherwise refuses
with a not-extractable signal rather than guessing.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .gcd import poly_sqrt
from .poly import MonomialOrder, Poly, mono_sort_key
from .ratfunc import RatFunc
from .symbols import Symbol

MAX_DIMENSION_UNKNOWNS = 16
MAX_STANDARD_MONOMIALS = 1_000_000


class NoSolutionError(ValueError):
    """The equation system is inconsistent (basis is {1})."""


class NotExtractableError(ValueError):
    """The basis is not triangular enough for explicit branch extraction."""


def _is_trivial_basis(basis: Sequence[Poly]) -> bool:
    return any(b.is_const() and not b.is_zero() for b in basis)


@dataclass(frozen=True)
class DimensionReport:
    """Generic dimension and, when finite, solution count of a variety."""

    dimension: int
    count: Optional[int]  # None means infinitely many solutions
    free_unknowns: tuple[Symbol, ...]

    @property
    def finite(self) -> bool:
        return self.count is not None


def _leading_exponents(
    basis: Sequence[Poly],
    unknowns: Sequence[Symbol],
    order: MonomialOrder,
) -> list[tuple[int, ...]]:
    from .poly import mono_exponents

    leads = []
    for b in basis:
        mono, _ = b.leading(list(unknowns), order)
        leads.append(mono_exponents(mono, unknowns))
    return leads


def _max_independent_set(
    leads: list[tuple[int, ...]], nvars: int
) -> tuple[int, ...]:
    """Indices of the largest variable subset supporting no leading
    monomial; deterministic first-found among equals."""
    supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in leads]
    for size in range(nvars, -1, -1):
        for combo in itertools.combinations(range(nvars), size):
            chosen = set(combo)
            if all(not sup <= chosen for sup in supports):
                return combo
    return ()


def _count_standard_monomials(leads: list[tuple[int, ...]], nvars: int) -> Optional[int]:
    """Number of monomials under the staircase, or None when infinite."""
    bounds = []
    for i in range(nvars):
        pure = [lm[i] for lm in leads if all(e == 0 for j, e in enumerate(lm) if j != i)]
        if not pure:
            return None
        bounds.append(min(pure))
    total = 1
    for b in bounds:
        total *= max(b, 1)
        if total > MAX_STANDARD_MONOMIALS:
            raise ValueError("standard monomial count exceeds the supported scale")
    count = 0
    for exps in itertools.product(*(range(b) for b in bounds)):
        divisible = any(all(e >= l for e, l in zip(exps, lm)) for lm in leads)
        if not divisible:
            count += 1
    return count


def variety_dimension(
    basis: Sequence[Poly],
    unknowns: Sequence[Symbol],
    order: MonomialOrder = MonomialOrder.GREVLEX,
) -> DimensionReport:
    """Dimension report for the variety of a reduced Groebner basis.

    An inconsistent basis ({1}) raises NoSolutionError. An empty basis
    leaves every unknown free.
    """
    unknowns = list(unknowns)
    if len(unknowns) > MAX_DIMENSION_UNKNOWNS:
        raise ValueError("too many unknowns for staircase dimension analysis")
    if _is_trivial_basis(basis):
        raise NoSolutionError("equation system has no solution")
    nonzero = [b for b in basis if not b.is_zero()]
    if not nonzero:
        free = tuple(unknowns)
        return DimensionReport(
            dimension=len(unknowns),
            count=1 if not unknowns else None,
            free_unknowns=free,
        )
    for b in nonzero:
        extra = b.symbols() - set(unknowns)
        if extra:
            name = sorted(extra, key=lambda s: s.name)[0].name
            raise ValueError(f"basis symbol {name!r} is not an unknown")
    leads = _leading_exponents(nonzero, unknowns, order)
    nvars = len(unknowns)
    independent = _max_independent_set(leads, nvars)
    dimension = len(independent)
    count = _count_standard_monomials(leads, nvars) if dimension == 0 else None
    return DimensionReport(
        dimension=dimension,
        count=count,
        free_unknowns=tuple(unknowns[i] for i in independent),
    )


@dataclass(frozen=True)
class Branch:
    """One explicit solution branch: expressions for solved unknowns plus
    the unknowns left free."""

    assignments: tuple[tuple[Symbol, RatFunc], ...]
    free: tuple[Symbol, ...]

    def expression_for(self, sym: Symbol) -> Optional[RatFunc]:
        for s, expr in self.assignments:
            if s == sym:
                return expr
        return None


def _leading_variable(p: Poly, rank: dict[Symbol, int]) -> Optional[Symbol]:
    best = None
    for sym in p.symbols():
        r = rank.get(sym)
        if r is None:
            continue
        if best is None or r < rank[best]:
            best = sym
    return best


def _ratfunc_sqrt(r: RatFunc) -> Optional[RatFunc]:
    num = poly_sqrt(r.num)
    if num is None:
        return None
    den = poly_sqrt(r.den)
    if den is None:
        return None
    return RatFunc(num, den)


def solve_triangular(
    basis: Sequence[Poly],
    unknowns: Sequence[Symbol],
) -> list[Branch]:
    """Extract solution branches from a lex reduced basis.

    unknowns lists the lex variable order, largest first. Symbols not in
    unknowns are carried through symbolically. Raises NoSolutionError for
    an inconsistent basis and NotExtractableError when the shape exceeds
    what careful substitution can solve.
    """
    unknowns = list(unknowns)
    if _is_trivial_basis(basis):
        raise NoSolutionError("equation system has no solution")
    nonzero = [b for b in basis if not b.is_zero()]
    rank = {sym: i for i, sym in enumerate(unknowns)}
    by_lead: dict[Symbol, list[Poly]] = {}
    for b in nonzero:
        lead = _leading_variable(b, rank)
        if lead is None:
            raise NotExtractableError("basis element contains no unknown")
        by_lead.setdefault(lead, []).append(b)
    for sym, elements in by_lead.items():
        if len(elements) > 1:
            raise NotExtractableError(
                f"unknown {sym.name!r} is pinned by {len(elements)} relations"
            )
        if elements[0].degree_in(sym) > 2:
            raise NotExtractableError(
                f"relation for {sym.name!r} has degree above two"
            )

    for sym, elements in by_lead.items():
        relation = elements[0]
        for other in relation.symbols():
            if other in rank and rank[other] < rank[sym]:
                raise NotExtractableError(
                    f"relation led by {sym.name!r} mentions the larger "
                    f"unknown {other.name!r}; basis is not triangular"
                )

    # each working branch: (solved expressions, unknowns left open on it)
    branches: list[tuple[dict[Symbol, RatFunc], list[Symbol]]] = [({}, [])]
    for sym in reversed(unknowns):
        element = by_lead.get(sym)
        if element is None:
            branches = [(subst, open_syms + [sym]) for subst, open_syms in branches]
            continue
        relation = element[0]
        coeffs = {p: c for p, c in relation.coefficients_in(sym)}
        next_branches: list[tuple[dict[Symbol, RatFunc], list[Symbol]]] = []
        for subst, open_syms in branches:
            a = coeffs.get(2, Poly.zero()).substitute(subst)
            b = coeffs.get(1, Poly.zero()).substitute(subst)
            c = coeffs.get(0, Poly.zero()).substitute(subst)
            if a.is_zero() and b.is_zero():
                if c.is_zero():
                    # relation vanished along this branch; unknown stays open
                    next_branches.append((subst, open_syms + [sym]))
                # nonzero constant: branch is inconsistent, drop it
                continue
            if a.is_zero():
                roots = [(-c) / b]
            else:
                disc = b * b - a * c * 4
                if disc.is_zero():
                    roots = [(-b) / (a * 2)]
                else:
                    sq = _ratfunc_sqrt(disc.normalized())
                    if sq is None:
                        raise NotExtractableError(
                            f"discriminant for {sym.name!r} is not an exact square"
                        )
                    roots = [((-b) + sq) / (a * 2), ((-b) - sq) / (a * 2)]
            for root in roots:
                extended = dict(subst)
                extended[sym] = root
                next_branches.append((extended, list(open_syms)))
        branches = next_branches
        if not branches:
            raise NoSolutionError("all branches are inconsistent")

    out = []
    for subst, open_syms in branches:
        assignments = tuple((sym, subst[sym]) for sym in unknowns if sym in subst)
        free = tuple(sym for sym in unknowns if sym in set(open_syms))
        out.append(Branch(assignments=assignments, free=free))
    return out


@dataclass(frozen=True)
class GenericPoint:
    """Deterministic pseudo-random rational point with pairwise distinct
    positive integer values, one per symbol."""

    seed: int
    assignment: dict[Symbol, Fraction] = field(hash=False)

    LOW = 1
    HIGH = 10**6

    @classmethod
    def generate(
        cls,
        symbols: Sequence[Symbol],
        seed: int,
        distinct: bool = True,
    ) -> "GenericPoint":
        rng = random.Random(seed)
        assignment: dict[Symbol, Fraction] = {}
        used: set[int] = set()
        for sym in symbols:
            while True:
                value = rng.randint(cls.LOW, cls.HIGH)
                if not distinct or value not in used:
                    break
            used.add(value)
            assignment[sym] = Fraction(value)
        return cls(seed=seed, assignment=assignment)

    def value(self, sym: Symbol) -> Fraction:
        return self.assignment[sym]
