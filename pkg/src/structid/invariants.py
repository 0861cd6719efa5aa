"""Invariants, parameter renaming, and the test equation system.

The invariants of a processed transfer matrix are the s-coefficients of
its numerators and denominators. Coefficients that are rational
constants carry no parameter information and are dropped (this also
covers the leading 1 of a monic denominator). The collection order is
fixed: entry index, then denominator before numerator, then ascending
power of s; exact duplicates are kept once, at their first position.

The identifiability test asks which replacement parameters theta'
reproduce the same invariants: each invariant phi gives one equation
phi(theta') - phi(theta) = 0. Renaming offers two naming modes for
theta': "underscore" appends an underscore, "caps" upper-cases the
first character (and requires every parameter name to start with a
lowercase letter). Either mode refuses generated names that collide
with existing symbols.

An all-constant (empty) invariant list means the outputs carry no
parameter information at all; collect_invariants signals this with
NoParameterInformation so the caller can classify every parameter as
free without running a solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .algebra import Poly, Symbol, SymbolTable
from .transfer import TransferMatrix


class InvariantError(ValueError):
    """Invalid invariant collection input."""


class NoParameterInformation(ValueError):
    """The processed matrix has no non-constant coefficients."""


class RenamingError(ValueError):
    """Renaming mode unsupported for these names, or a name collision."""


@dataclass(frozen=True)
class InvariantOrigin:
    entry: int  # 1-based output index
    part: str  # "den" | "num"
    power: int  # power of s


@dataclass(frozen=True)
class InvariantSet:
    invariants: tuple[Poly, ...]
    origins: tuple[InvariantOrigin, ...]

    def __len__(self) -> int:
        return len(self.invariants)


def collect_invariants(tm: TransferMatrix) -> InvariantSet:
    """Ordered, deduplicated non-constant s-coefficients of the matrix."""
    if not tm.processed:
        raise InvariantError("transfer matrix must be processed first")
    invariants: list[Poly] = []
    origins: list[InvariantOrigin] = []
    seen: set[Poly] = set()
    for idx, entry in enumerate(tm.entries):
        for part, poly in (("den", entry.den), ("num", entry.num)):
            if part == "num" and entry.num.is_zero():
                continue
            for power, coeff in poly.coefficients_in(tm.s):
                if coeff.is_const():
                    continue
                if coeff in seen:
                    continue
                seen.add(coeff)
                invariants.append(coeff)
                origins.append(InvariantOrigin(entry=idx + 1, part=part, power=power))
    if not invariants:
        raise NoParameterInformation(
            "no invariant depends on a parameter; every parameter is free"
        )
    return InvariantSet(invariants=tuple(invariants), origins=tuple(origins))


@dataclass(frozen=True)
class ParameterRenaming:
    theta: tuple[Symbol, ...]
    theta_prime: tuple[Symbol, ...]
    mode: str

    def as_map(self) -> dict[Symbol, Symbol]:
        return dict(zip(self.theta, self.theta_prime))

    def pairs(self) -> list[tuple[str, str]]:
        return [(a.name, b.name) for a, b in zip(self.theta, self.theta_prime)]


def theta_prime_creation(
    theta: Sequence[Symbol],
    mode: str = "caps",
    avoid: Iterable[Symbol] = (),
) -> ParameterRenaming:
    """Fresh replacement symbols for theta under the given naming mode."""
    if mode not in ("underscore", "caps"):
        raise RenamingError(f"unknown naming mode {mode!r}")
    reserved = {sym.name for sym in avoid} | {sym.name for sym in theta}
    generated: list[Symbol] = []
    names_taken: set[str] = set()
    for sym in theta:
        if mode == "underscore":
            name = sym.name + "_"
        else:
            first = sym.name[0]
            if not (first.isalpha() and first.islower()):
                raise RenamingError(
                    f"caps naming requires a lowercase first letter: {sym.name!r}"
                )
            name = first.upper() + sym.name[1:]
        if name in reserved or name in names_taken:
            raise RenamingError(f"generated name {name!r} collides with an existing symbol")
        names_taken.add(name)
        generated.append(Symbol(name))
    return ParameterRenaming(
        theta=tuple(theta), theta_prime=tuple(generated), mode=mode
    )


@dataclass(frozen=True)
class TestEquations:
    """phi(theta') - phi(theta) = 0 for every invariant phi."""

    equations: tuple[Poly, ...]
    identically_zero: tuple[bool, ...]
    unknowns: tuple[Symbol, ...]  # theta'
    knowns: tuple[Symbol, ...]  # theta
    renaming: ParameterRenaming

    def active(self) -> list[Poly]:
        """Equations that are not identically satisfied."""
        return [
            eq for eq, flag in zip(self.equations, self.identically_zero) if not flag
        ]


def identifiability_eqn_list(
    inv: InvariantSet, renaming: ParameterRenaming
) -> TestEquations:
    mapping = renaming.as_map()
    equations: list[Poly] = []
    flags: list[bool] = []
    for phi in inv.invariants:
        eq = phi.rename(mapping) - phi
        equations.append(eq)
        flags.append(eq.is_zero())
    return TestEquations(
        equations=tuple(equations),
        identically_zero=tuple(flags),
        unknowns=renaming.theta_prime,
        knowns=renaming.theta,
        renaming=renaming,
    )
