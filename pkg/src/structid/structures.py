"""State space structure specifications and design edits.

A StructureSpec captures an uncontrolled linear time invariant structure
with n compartments and k outputs: x'(t) = A x(t), x(0) = x0,
y(t) = C x(t). Entries of A, C and x0 are polynomials in declared
parameters (theta, an ordered list) and optionally in declared
constants, which are any further symbols appearing in the entries.

The file format is JSON with a fixed field order: n, k, parameters, A,
C, x0, outflow_params, compartmental. Matrix entries are polynomial
text. serialize_structure is canonical, so serialize(parse(s)) is byte
identical to s for files it produced, and parse(serialize(spec)) always
reproduces the same StructureSpec.

outflow_params labels, per compartment, the rate of any flow leaving
the system from that compartment. It is diagram metadata; it does not
change the dynamics, which are fully determined by A.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .algebra import (
    GenericPoint,
    Poly,
    PolyParseError,
    Symbol,
    SymbolTable,
    format_poly,
    parse_poly,
)

RESERVED_NAMES = frozenset({"s"})


class StructureError(ValueError):
    """Malformed structure specification."""


class EditError(ValueError):
    """Malformed or out-of-range design edit."""


Matrix = tuple[tuple[Poly, ...], ...]
Vector = tuple[Poly, ...]


@dataclass(frozen=True)
class StructureSpec:
    n: int
    k: int
    A: Matrix
    C: Matrix
    x0: Vector
    theta: tuple[Symbol, ...]
    outflow_params: Vector
    compartmental: bool
    table: SymbolTable = field(compare=False, repr=False)

    @property
    def constants(self) -> tuple[Symbol, ...]:
        declared = set(self.theta)
        seen: list[Symbol] = []
        for sym in self.table:
            if sym not in declared and sym not in seen and sym in self._appearing():
                seen.append(sym)
        return tuple(seen)

    def _appearing(self) -> set[Symbol]:
        out: set[Symbol] = set()
        for row in self.A:
            for entry in row:
                out |= entry.symbols()
        for row in self.C:
            for entry in row:
                out |= entry.symbols()
        for entry in self.x0:
            out |= entry.symbols()
        return out

    def symbol_order(self) -> list[Symbol]:
        """theta order, then constants; the display order for entries."""
        return list(self.theta) + list(self.constants)


def _check_shape(rows: Sequence, n_rows: int, n_cols: int, name: str) -> None:
    if len(rows) != n_rows:
        raise StructureError(f"{name} must have {n_rows} rows, found {len(rows)}")
    for i, row in enumerate(rows):
        if not isinstance(row, (list, tuple)) or len(row) != n_cols:
            raise StructureError(
                f"{name} row {i + 1} must have {n_cols} entries"
            )


def make_structure(
    n: int,
    k: int,
    A: Sequence[Sequence[Poly]],
    C: Sequence[Sequence[Poly]],
    x0: Sequence[Poly],
    theta: Sequence[Symbol],
    outflow_params: Sequence[Poly],
    compartmental: bool,
    table: SymbolTable,
) -> StructureSpec:
    """Validate and freeze a structure specification."""
    if not isinstance(n, int) or n < 1:
        raise StructureError("n must be a positive integer")
    if not isinstance(k, int) or k < 1:
        raise StructureError("k must be a positive integer")
    _check_shape(A, n, n, "A")
    _check_shape(C, k, n, "C")
    if len(x0) != n:
        raise StructureError(f"x0 must have {n} entries, found {len(x0)}")
    if len(outflow_params) != n:
        raise StructureError(
            f"outflow_params must have {n} entries, found {len(outflow_params)}"
        )
    seen: set[Symbol] = set()
    for sym in theta:
        if sym in seen:
            raise StructureError(f"duplicate parameter {sym.name!r}")
        seen.add(sym)
        if sym.name in RESERVED_NAMES:
            raise StructureError(f"parameter name {sym.name!r} is reserved")
    for sym in table:
        if sym.name in RESERVED_NAMES:
            raise StructureError(f"symbol name {sym.name!r} is reserved")
    spec = StructureSpec(
        n=n,
        k=k,
        A=tuple(tuple(row) for row in A),
        C=tuple(tuple(row) for row in C),
        x0=tuple(x0),
        theta=tuple(theta),
        outflow_params=tuple(outflow_params),
        compartmental=bool(compartmental),
        table=table,
    )
    return spec


def parse_structure(text: Union[str, bytes]) -> StructureSpec:
    """Parse the JSON structure format; errors carry field locations."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise StructureError("top level must be a JSON object")
    for key in ("n", "k", "parameters", "A", "C", "x0", "outflow_params", "compartmental"):
        if key not in doc:
            raise StructureError(f"missing field {key!r}")
    n = doc["n"]
    k = doc["k"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise StructureError("n: must be a positive integer")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise StructureError("k: must be a positive integer")
    params = doc["parameters"]
    if not isinstance(params, list) or not all(isinstance(p, str) for p in params):
        raise StructureError("parameters: must be a list of names")
    table = SymbolTable()
    theta: list[Symbol] = []
    for i, name in enumerate(params):
        try:
            if name in table:
                raise StructureError(f"parameters[{i}]: duplicate name {name!r}")
            theta.append(table.add_new(name))
        except ValueError as exc:
            raise StructureError(f"parameters[{i}]: {exc}") from exc

    def entry(text_value: object, where: str) -> Poly:
        if not isinstance(text_value, str):
            raise StructureError(f"{where}: entry must be polynomial text")
        try:
            return parse_poly(text_value, table)
        except PolyParseError as exc:
            raise StructureError(f"{where}: {exc}") from exc

    def matrix(value: object, rows: int, cols: int, name: str) -> list[list[Poly]]:
        if not isinstance(value, list) or len(value) != rows:
            raise StructureError(f"{name}: must be a list of {rows} rows")
        out = []
        for i, row in enumerate(value):
            if not isinstance(row, list) or len(row) != cols:
                raise StructureError(f"{name}[{i + 1}]: must have {cols} entries")
            out.append([entry(e, f"{name}[{i + 1}][{j + 1}]") for j, e in enumerate(row)])
        return out

    def vector(value: object, size: int, name: str) -> list[Poly]:
        if not isinstance(value, list) or len(value) != size:
            raise StructureError(f"{name}: must be a list of {size} entries")
        return [entry(e, f"{name}[{i + 1}]") for i, e in enumerate(value)]

    A = matrix(doc["A"], n, n, "A")
    C = matrix(doc["C"], k, n, "C")
    x0 = vector(doc["x0"], n, "x0")
    outflow = vector(doc["outflow_params"], n, "outflow_params")
    compartmental = doc["compartmental"]
    if not isinstance(compartmental, bool):
        raise StructureError("compartmental: must be true or false")
    try:
        return make_structure(n, k, A, C, x0, theta, outflow, compartmental, table)
    except StructureError:
        raise
    except ValueError as exc:
        raise StructureError(str(exc)) from exc


def serialize_structure(spec: StructureSpec) -> str:
    """Canonical JSON text for a structure specification."""
    order = spec.symbol_order()

    def fmt(p: Poly) -> str:
        return format_poly(p, order)

    doc = {
        "n": spec.n,
        "k": spec.k,
        "parameters": [sym.name for sym in spec.theta],
        "A": [[fmt(e) for e in row] for row in spec.A],
        "C": [[fmt(e) for e in row] for row in spec.C],
        "x0": [fmt(e) for e in spec.x0],
        "outflow_params": [fmt(e) for e in spec.outflow_params],
        "compartmental": spec.compartmental,
    }
    return json.dumps(doc, indent=2) + "\n"


@dataclass(frozen=True)
class Violation:
    constraint: str  # "offdiagonal" | "diagonal" | "observation"
    row: int  # 1-based
    col: int  # 1-based
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    violations: tuple[Violation, ...]
    checked_numerically: tuple[str, ...]


def _is_bare_parameter(p: Poly) -> bool:
    if len(p.terms) != 1:
        return False
    (mono, coeff), = p.terms.items()
    return coeff == 1 and len(mono) == 1 and mono[0][1] == 1


def _sign_at(p: Poly, point: GenericPoint) -> Fraction:
    return p.evaluate(point.assignment)


def validate_compartmental(spec: StructureSpec, seed: int = 0) -> ValidationReport:
    """Check conservation of mass constraints.

    Off-diagonal entries of A and all entries of C must be non-negative,
    and each diagonal entry must not exceed the negated sum of the other
    entries in its column. Entries that are zero, a non-negative
    constant, or a single bare parameter pass symbolically (the
    parameter space is the non-negative orthant); composite expressions
    are checked exactly at a positive generic point.
    """
    symbols = sorted(spec._appearing(), key=lambda s: s.name)
    point = GenericPoint.generate(symbols, seed)
    violations: list[Violation] = []
    numeric: list[str] = []

    def nonneg(p: Poly, constraint: str, i: int, j: int, what: str) -> None:
        if p.is_zero():
            return
        if p.is_const():
            if p.constant_value() >= 0:
                return
            violations.append(Violation(constraint, i, j, f"{what} is a negative constant"))
            return
        if _is_bare_parameter(p):
            return
        numeric.append(f"{constraint}[{i}][{j}]")
        if _sign_at(p, point) < 0:
            violations.append(
                Violation(constraint, i, j, f"{what} is negative at a generic positive point")
            )

    for i in range(spec.n):
        for j in range(spec.n):
            if i != j:
                nonneg(spec.A[i][j], "offdiagonal", i + 1, j + 1, f"A[{i + 1}][{j + 1}]")
    for j in range(spec.n):
        # column balance: a_jj plus the column's off-diagonal entries must not exceed zero
        balance = spec.A[j][j]
        for i in range(spec.n):
            if i != j:
                balance = balance + spec.A[i][j]
        if balance.is_zero():
            continue
        if balance.is_const():
            if balance.constant_value() > 0:
                violations.append(
                    Violation("diagonal", j + 1, j + 1, "column balance is a positive constant")
                )
            continue
        if _is_bare_parameter(-balance):
            continue
        numeric.append(f"diagonal[{j + 1}][{j + 1}]")
        if _sign_at(balance, point) > 0:
            violations.append(
                Violation(
                    "diagonal", j + 1, j + 1, "column balance is positive at a generic positive point"
                )
            )
    for i in range(spec.k):
        for j in range(spec.n):
            nonneg(spec.C[i][j], "observation", i + 1, j + 1, f"C[{i + 1}][{j + 1}]")
    return ValidationReport(
        passed=not violations,
        violations=tuple(violations),
        checked_numerically=tuple(numeric),
    )


_EDIT_TARGET_RE = re.compile(
    r"^\s*(?:C\s*\[\s*(?P<ci>\d+)\s*\]\s*\[\s*(?P<cj>\d+)\s*\]"
    r"|x0\s*\[\s*(?P<xi>\d+)\s*\])\s*$"
)


@dataclass(frozen=True)
class DesignEdit:
    """Overwrite one coordinate of C or x0 with a polynomial value."""

    target: str  # "C" or "x0"
    row: int  # 1-based
    col: Optional[int]  # 1-based, None for x0
    value: Poly

    @classmethod
    def parse(cls, text: str, table: SymbolTable) -> "DesignEdit":
        """Parse 'C[i][j]=expr' or 'x0[i]=expr' (1-based indices)."""
        if "=" not in text:
            raise EditError(f"edit must look like C[i][j]=expr or x0[i]=expr: {text!r}")
        target_text, value_text = text.split("=", 1)
        m = _EDIT_TARGET_RE.match(target_text)
        if m is None:
            raise EditError(f"bad edit target {target_text.strip()!r}")
        try:
            value = parse_poly(value_text, table)
        except PolyParseError as exc:
            raise EditError(f"bad edit value: {exc}") from exc
        if m.group("ci") is not None:
            return cls("C", int(m.group("ci")), int(m.group("cj")), value)
        return cls("x0", int(m.group("xi")), None, value)


def apply_edits(spec: StructureSpec, edits: Iterable[DesignEdit]) -> StructureSpec:
    """Apply design edits, returning a new specification.

    theta is recomputed afterwards: parameters no longer appearing in
    A, C or x0 are dropped (order preserved), and fresh symbols
    introduced by edit values are appended in order of first use.
    """
    C = [list(row) for row in spec.C]
    x0 = list(spec.x0)
    table = spec.table.clone()
    fresh: list[Symbol] = []
    known = set(spec.theta) | set(spec.constants)
    for edit in edits:
        if edit.target == "C":
            if edit.col is None:
                raise EditError("C edit requires a column index")
            if not (1 <= edit.row <= spec.k) or not (1 <= edit.col <= spec.n):
                raise EditError(
                    f"C[{edit.row}][{edit.col}] is outside a {spec.k}x{spec.n} matrix"
                )
            C[edit.row - 1][edit.col - 1] = edit.value
        elif edit.target == "x0":
            if not (1 <= edit.row <= spec.n):
                raise EditError(f"x0[{edit.row}] is outside a length {spec.n} vector")
            x0[edit.row - 1] = edit.value
        else:
            raise EditError(f"unknown edit target {edit.target!r}")
        for sym in sorted(edit.value.symbols(), key=lambda s: s.name):
            if sym.name in RESERVED_NAMES:
                raise EditError(f"edit value uses reserved name {sym.name!r}")
            if sym not in known:
                fresh.append(table.intern(sym))
                known.add(sym)

    appearing: set[Symbol] = set()
    for row in spec.A:
        for e in row:
            appearing |= e.symbols()
    for row in C:
        for e in row:
            appearing |= e.symbols()
    for e in x0:
        appearing |= e.symbols()

    theta = [sym for sym in spec.theta if sym in appearing]
    theta += [sym for sym in fresh if sym in appearing]
    return replace(
        spec,
        C=tuple(tuple(row) for row in C),
        x0=tuple(x0),
        theta=tuple(theta),
        table=table,
    )
