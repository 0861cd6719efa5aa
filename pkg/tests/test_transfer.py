from fractions import Fraction
from random import Random

import pytest

from oracles import exact_output_at, random_compartmental_spec, rational_point
from structid.algebra import Poly, SymbolTable, poly_gcd
from structid.structures import make_structure
from structid.transfer import TransferError, build_transfer_matrix, process_matrix


def simple_spec(a_entries, c_entries, x0_entries, names):
    table = SymbolTable(names)
    theta = table.symbols()
    to_poly = lambda e: e if isinstance(e, Poly) else Poly.var(table.get(e))
    n = len(x0_entries)
    return make_structure(
        n=n,
        k=len(c_entries),
        A=[[to_poly(e) for e in row] for row in a_entries],
        C=[[to_poly(e) for e in row] for row in c_entries],
        x0=[to_poly(e) for e in x0_entries],
        theta=theta,
        outflow_params=[Poly.zero()] * n,
        compartmental=False,
        table=table,
    )


def test_single_compartment_by_inspection():
    table = SymbolTable(["k", "c", "x0"])
    k, c, x0 = table.symbols()
    spec = make_structure(
        n=1, k=1,
        A=[[-Poly.var(k)]],
        C=[[Poly.var(c)]],
        x0=[Poly.var(x0)],
        theta=[k, c, x0],
        outflow_params=[Poly.var(k)],
        compartmental=True,
        table=table,
    )
    tm = build_transfer_matrix(spec)
    assert len(tm.entries) == 1
    entry = tm.entries[0]
    s = tm.s
    assert entry.num == Poly.var(c) * Poly.var(x0)
    assert entry.den == Poly.var(s) + Poly.var(k)


def test_parent_shares_monic_cubic_denominator(case_specs):
    tm = build_transfer_matrix(case_specs["parent"])
    assert len(tm.entries) == 3
    dens = {entry.den for entry in tm.entries}
    assert len(dens) == 1
    den = dens.pop()
    assert den.degree_in(tm.s) == 3
    assert den.leading_coefficient_in(tm.s) == Poly.one()


def test_unprocessed_denominator_is_characteristic_poly():
    # denominator must equal det(sI - A): for a diagonal A = diag(-k, -m)
    # that determinant is (s+k)(s+m)
    spec = simple_spec(
        [[Poly.zero(), Poly.zero()], [Poly.zero(), Poly.zero()]],
        [[Poly.one(), Poly.zero()]],
        ["x1", "x2"],
        ["k", "m", "x1", "x2"],
    )
    table = spec.table
    k, m = table.get("k"), table.get("m")
    A = [[-Poly.var(k), Poly.zero()], [Poly.zero(), -Poly.var(m)]]
    spec = make_structure(
        n=2, k=1, A=A, C=spec.C, x0=spec.x0, theta=spec.theta,
        outflow_params=[Poly.zero()] * 2, compartmental=False, table=table,
    )
    tm = build_transfer_matrix(spec)
    s = tm.s
    expected = (Poly.var(s) + Poly.var(k)) * (Poly.var(s) + Poly.var(m))
    assert tm.entries[0].den == expected


def test_numerator_degree_below_denominator_degree(case_specs):
    tm = build_transfer_matrix(case_specs["parent"])
    for entry in tm.entries:
        assert entry.num.degree_in(tm.s) < entry.den.degree_in(tm.s)


def test_matches_exact_linear_solve_oracle():
    rng = Random(1729)
    for _ in range(12):
        spec = random_compartmental_spec(rng)
        tm = build_transfer_matrix(spec)
        symbols = spec.symbol_order()
        checked = 0
        while checked < 3:
            point = rational_point(rng, symbols)
            s_value = Fraction(rng.randint(1, 60), rng.randint(1, 5))
            expected = exact_output_at(spec, s_value, point)
            if expected is None:
                continue
            full = dict(point)
            full[tm.s] = s_value
            for entry, want in zip(tm.entries, expected):
                den = entry.den.evaluate(full)
                assert den != 0
                assert entry.num.evaluate(full) / den == want
            checked += 1


def test_process_reduces_to_lowest_terms(case_specs):
    tm = process_matrix(build_transfer_matrix(case_specs["parent"]))
    assert tm.processed
    for entry in tm.entries:
        if entry.num.is_zero():
            continue
        assert poly_gcd(entry.num, entry.den).is_const()


def test_process_rejects_processed_input(case_specs):
    tm = process_matrix(build_transfer_matrix(case_specs["parent"]))
    with pytest.raises(TransferError):
        process_matrix(tm)
