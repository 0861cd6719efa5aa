"""Shared test helpers: randomized structure generation and an
independent exact output oracle.

The oracle computes C (sI - A)^(-1) x0 at a fully specialized rational
point by plain Gaussian elimination over Fraction, sharing no code with
the symbolic fraction-free route it is used to check.
"""
from fractions import Fraction
from random import Random
from typing import Optional

from structid.algebra import Poly, Symbol, SymbolTable
from structid.structures import StructureSpec, make_structure


def random_compartmental_spec(rng: Random, n: Optional[int] = None) -> StructureSpec:
    """Random conservation-of-mass structure, n <= 3.

    Column sums of A are -outflow <= 0 by construction: each diagonal
    entry exactly balances the column's off-diagonal flows plus the
    outflow, so the compartmental sign conditions hold for any
    non-negative parameter values.
    """
    if n is None:
        n = rng.randint(1, 3)
    k = rng.randint(1, n)
    table = SymbolTable()
    theta: list[Symbol] = []

    def param(name: str) -> Poly:
        sym = table.intern(name)
        if sym not in theta:
            theta.append(sym)
        return Poly.var(sym)

    A = [[Poly.zero() for _ in range(n)] for _ in range(n)]
    outflow = [Poly.zero() for _ in range(n)]
    for j in range(n):
        column = Poly.zero()
        for i in range(n):
            if i == j:
                continue
            if rng.random() < 0.6:
                flow = param(f"k{i + 1}{j + 1}")
                A[i][j] = flow
                column = column + flow
        if rng.random() < 0.5:
            out = param(f"k0{j + 1}")
            outflow[j] = out
            column = column + out
        A[j][j] = -column

    C = [[Poly.zero() for _ in range(n)] for _ in range(k)]
    for i in range(k):
        j = rng.randrange(n)
        roll = rng.random()
        if roll < 0.5:
            C[i][j] = param(f"c{i + 1}")
        elif roll < 0.8:
            C[i][j] = Poly.one()
        else:
            C[i][j] = Poly.const(Fraction(rng.randint(1, 3)))

    x0 = [Poly.zero() for _ in range(n)]
    for j in range(n):
        if rng.random() < 0.7:
            x0[j] = param(f"x{j + 1}0")
    if all(e.is_zero() for e in x0):
        x0[0] = param("x10")

    return make_structure(
        n=n,
        k=k,
        A=[list(row) for row in A],
        C=[list(row) for row in C],
        x0=list(x0),
        theta=theta,
        outflow_params=list(outflow),
        compartmental=True,
        table=table,
    )


def random_two_compartment_spec(rng: Random) -> StructureSpec:
    """Random 2-compartment structure guaranteed to carry parameter
    information: observed first state, symbolic initial condition."""
    table = SymbolTable()
    theta: list[Symbol] = []

    def param(name: str) -> Poly:
        sym = table.intern(name)
        if sym not in theta:
            theta.append(sym)
        return Poly.var(sym)

    k21 = param("k21") if rng.random() < 0.8 else Poly.zero()
    k12 = param("k12") if rng.random() < 0.8 else Poly.zero()
    out1 = param("k01") if rng.random() < 0.6 else Poly.zero()
    out2 = param("k02") if rng.random() < 0.4 else Poly.zero()
    A = [
        [-(k21 + out1), k12],
        [k21, -(k12 + out2)],
    ]
    C = [[param("c1") if rng.random() < 0.5 else Poly.one(), Poly.zero()]]
    x0 = [param("x10"), param("x20") if rng.random() < 0.6 else Poly.zero()]
    return make_structure(
        n=2,
        k=1,
        A=A,
        C=C,
        x0=x0,
        theta=theta,
        outflow_params=[out1, out2],
        compartmental=True,
        table=table,
    )


def rational_point(rng: Random, symbols) -> dict:
    """Random nonzero rational value per symbol."""
    point = {}
    for sym in symbols:
        num = rng.randint(1, 50)
        den = rng.randint(1, 9)
        point[sym] = Fraction(num, den)
    return point


def exact_output_at(
    spec: StructureSpec,
    s_value: Fraction,
    point: dict,
) -> Optional[list[Fraction]]:
    """C (sI - A)^(-1) x0 at a specialized point, or None when sI - A
    is singular there. Plain Fraction Gaussian elimination."""
    n = spec.n
    M = []
    for i in range(n):
        row = []
        for j in range(n):
            value = -spec.A[i][j].evaluate(point)
            if i == j:
                value += s_value
            row.append(Fraction(value))
        row.append(Fraction(spec.x0[i].evaluate(point)))
        M.append(row)
    for col in range(n):
        pivot_row = next(
            (r for r in range(col, n) if M[r][col] != 0),
            None,
        )
        if pivot_row is None:
            return None
        M[col], M[pivot_row] = M[pivot_row], M[col]
        pivot = M[col][col]
        M[col] = [v / pivot for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                factor = M[r][col]
                M[r] = [a - factor * b for a, b in zip(M[r], M[col])]
    z = [M[i][n] for i in range(n)]
    outputs = []
    for i in range(spec.k):
        total = Fraction(0)
        for j in range(n):
            total += Fraction(spec.C[i][j].evaluate(point)) * z[j]
        outputs.append(total)
    return outputs
