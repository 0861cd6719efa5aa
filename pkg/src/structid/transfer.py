"""Transfer matrix construction and canonicalization.

For a structure x' = A x, x(0) = x0, y = C x, the Laplace transform of
the output is H(s) = C (sI - A)^(-1) x0, a k-vector of rational
functions of s whose coefficients are polynomial in the parameters.

The linear solve is done fraction free: one Gauss-Jordan elimination on
(sI - A | x0) in the Bareiss style, where every 2x2 cross product step
divides exactly by the previous pivot. No pivoting is needed because
each pivot is a leading principal minor of sI - A, a monic polynomial
in s of positive degree. The run ends with the determinant on the
diagonal and adj(sI - A) x0 in the augmented column, so every raw entry
shares the common denominator det(sI - A).

process_matrix cancels common polynomial factors from each entry and
optionally rescales to a monic-in-s denominator. Rescaling is only
possible while keeping polynomial coefficients when the leading
s-coefficient of the cancelled denominator is a rational constant;
entries produced by build_transfer_matrix always satisfy this because
det(sI - A) is monic in s.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .algebra import Poly, RatFunc, Symbol, poly_gcd
from .structures import StructureSpec

S_NAME = "s"


class TransferError(ValueError):
    """Invalid transfer matrix operation."""


@dataclass(frozen=True)
class TransferMatrix:
    """Column of output transforms y_i(s), stored as raw fractions."""

    entries: tuple[RatFunc, ...]
    s: Symbol
    theta: tuple[Symbol, ...]
    processed: bool = False
    canonical: bool = False
    sort_order: tuple[Symbol, ...] = ()


def _montante_solve(M: list[list[Poly]], n: int) -> tuple[list[Poly], Poly]:
    """Fraction-free Gauss-Jordan on an n x (n+1) augmented matrix.

    Returns (numerators, determinant): column entries equal
    determinant * solution componentwise.
    """
    prev = Poly.one()
    for k in range(n):
        pivot = M[k][k]
        if pivot.is_zero():
            raise TransferError("zero pivot in fraction-free elimination")
        for i in range(n):
            if i == k:
                continue
            row = M[i]
            lead = row[k]
            for j in range(n + 1):
                if j == k:
                    continue
                row[j] = (pivot * row[j] - lead * M[k][j]).div_exact(prev)
            row[k] = Poly.zero()
        prev = pivot
    det = M[n - 1][n - 1]
    return [M[i][n] for i in range(n)], det


def build_transfer_matrix(spec: StructureSpec) -> TransferMatrix:
    """Unprocessed transfer matrix of a structure.

    Every entry is returned over the common denominator det(sI - A),
    monic in s of degree n; numerator s-degrees stay below n.
    """
    s = spec.table.intern(S_NAME)
    n = spec.n
    M: list[list[Poly]] = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = -spec.A[i][j]
            if i == j:
                entry = entry + Poly.var(s)
            row.append(entry)
        row.append(spec.x0[i])
        M.append(row)
    numerators, det = _montante_solve(M, n)
    entries = []
    for i in range(spec.k):
        num = Poly.zero()
        for j in range(n):
            cij = spec.C[i][j]
            if not cij.is_zero():
                num = num + cij * numerators[j]
        entries.append(RatFunc(num, det))
    return TransferMatrix(
        entries=tuple(entries),
        s=s,
        theta=spec.theta,
        processed=False,
        canonical=False,
        sort_order=tuple(spec.symbol_order()),
    )


def process_matrix(
    tm: TransferMatrix,
    canonical_form: bool = True,
    sort_order: Optional[Sequence[Symbol]] = None,
) -> TransferMatrix:
    """Cancel common factors entrywise; optionally make denominators
    monic in s. Raw (unprocessed) input only."""
    if tm.processed:
        raise TransferError("transfer matrix is already processed")
    order = tuple(sort_order) if sort_order is not None else tm.sort_order
    out = []
    for idx, entry in enumerate(tm.entries):
        reduced = entry.cancelled()
        if canonical_form and not reduced.num.is_zero():
            lead = reduced.den.leading_coefficient_in(tm.s)
            if not lead.is_const():
                raise TransferError(
                    f"entry {idx + 1}: cannot make the denominator monic in s "
                    "without leaving polynomial coefficients"
                )
            c = lead.constant_value()
            if c != 1:
                reduced = RatFunc(reduced.num / c, reduced.den / c)
        out.append(reduced)
    return replace(
        tm,
        entries=tuple(out),
        processed=True,
        canonical=bool(canonical_form),
        sort_order=order,
    )
