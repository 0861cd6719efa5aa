#!/usr/bin/env python3
"""Cross-check the three solution routes on randomized structures.

For each random compartmental structure the generic-point dimension,
the symbolic solve (when it finishes inside the budget) and the
Jacobian rank oracle must tell one consistent story. Prints a row per
structure and a summary; exits nonzero on any disagreement.

Usage:
    python3 scripts/solver_agreement.py [--count 25] [--seed 7] [--timeout 20]
"""
import argparse
import sys
import time
from random import Random

from structid.invariants import (
    NoParameterInformation,
    collect_invariants,
    identifiability_eqn_list,
    theta_prime_creation,
)
from structid.solver import jacobian_rank_oracle, solve_generic, solve_symbolic
from structid.structures import StructureSpec, make_structure, parse_structure
from structid.transfer import build_transfer_matrix, process_matrix
from structid.algebra import Poly, SymbolTable


def random_structure(rng: Random) -> StructureSpec:
    n = rng.randint(1, 3)
    k = rng.randint(1, n)
    table = SymbolTable()
    theta = []

    def param(name):
        sym = table.intern(name)
        if sym not in theta:
            theta.append(sym)
        return Poly.var(sym)

    A = [[Poly.zero()] * n for _ in range(n)]
    outflow = [Poly.zero()] * n
    for j in range(n):
        col = Poly.zero()
        for i in range(n):
            if i != j and rng.random() < 0.6:
                A[i][j] = param(f"k{i + 1}{j + 1}")
                col = col + A[i][j]
        if rng.random() < 0.5:
            outflow[j] = param(f"k0{j + 1}")
            col = col + outflow[j]
        A[j][j] = -col
    C = [[Poly.zero()] * n for _ in range(k)]
    for i in range(k):
        C[i][rng.randrange(n)] = param(f"c{i + 1}") if rng.random() < 0.5 else Poly.one()
    x0 = [param(f"x{j + 1}0") if rng.random() < 0.7 else Poly.zero() for j in range(n)]
    if all(e.is_zero() for e in x0):
        x0[0] = param("x10")
    return make_structure(
        n=n, k=k, A=A, C=C, x0=x0, theta=theta,
        outflow_params=outflow, compartmental=True, table=table,
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=25)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--timeout", type=float, default=20.0)
    args = parser.parse_args()

    rng = Random(args.seed)
    rows = 0
    skipped = 0
    disagreements = 0
    symbolic_done = 0
    print(f"{'#':>3} {'p':>3} {'eqs':>4} {'dim':>4} {'nullity':>8} {'symbolic':>10} {'time':>7}")
    while rows < args.count:
        spec = random_structure(rng)
        tm = process_matrix(build_transfer_matrix(spec))
        try:
            inv = collect_invariants(tm)
        except NoParameterInformation:
            skipped += 1
            continue
        renaming = theta_prime_creation(spec.theta, mode="caps")
        eqs = identifiability_eqn_list(inv, renaming)
        start = time.perf_counter()
        generic = solve_generic(eqs)
        nullity = len(spec.theta) - jacobian_rank_oracle(inv, spec.theta, seed=13)
        symbolic = solve_symbolic(eqs, timeout=args.timeout)
        elapsed = time.perf_counter() - start
        rows += 1

        agree = not generic.indeterminate and nullity == generic.generic_dimension
        status = symbolic.symbolic_status
        if status == "ok":
            symbolic_done += 1
        if not agree:
            disagreements += 1
        flag = "" if agree else "   <-- disagree"
        print(
            f"{rows:>3} {len(spec.theta):>3} {len(eqs.equations):>4} "
            f"{generic.generic_dimension:>4} {nullity:>8} {status:>10} "
            f"{elapsed:>6.2f}s{flag}"
        )
    print()
    print(
        f"{rows} structures ({skipped} skipped without parameter information), "
        f"{symbolic_done} symbolic completions, {disagreements} disagreements"
    )
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
