from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from structid.algebra import (
    MonomialOrder,
    NoSolutionError,
    Poly,
    Symbol,
    groebner_basis,
    variety_dimension,
)

X, Y, Z = Symbol("x"), Symbol("y"), Symbol("z")


def test_point_ideal():
    report = variety_dimension([Poly.var(X) - 1, Poly.var(Y) - 2], [X, Y])
    assert report.dimension == 0
    assert report.count == 1
    assert report.free_unknowns == ()


def test_two_points():
    basis = groebner_basis([Poly.var(X, 2) - 1, Poly.var(Y) - Poly.var(X)], symbols=[X, Y])
    report = variety_dimension(basis, [X, Y])
    assert report.dimension == 0
    assert report.count == 2


def test_line():
    report = variety_dimension([Poly.var(X) - Poly.var(Y)], [X, Y])
    assert report.dimension == 1
    assert report.free_unknowns == (Y,)


def test_inconsistent_raises():
    with pytest.raises(NoSolutionError):
        variety_dimension([Poly.one()], [X, Y])


def test_empty_basis_everything_free():
    report = variety_dimension([], [X, Y, Z])
    assert report.dimension == 3
    assert set(report.free_unknowns) == {X, Y, Z}


def test_multiplicity_counted():
    # x^2 = 0 has the origin with multiplicity two
    report = variety_dimension([Poly.var(X, 2)], [X])
    assert report.dimension == 0
    assert report.count == 2


def test_mixed_dimension():
    # x fixed, y free, z tied to y
    basis = groebner_basis(
        [Poly.var(X) - 3, Poly.var(Z) - Poly.var(Y)],
        order=MonomialOrder.GREVLEX,
        symbols=[X, Y, Z],
    )
    report = variety_dimension(basis, [X, Y, Z])
    assert report.dimension == 1


@given(
    st.lists(
        st.fractions(min_value=-20, max_value=20, max_denominator=9),
        min_size=1,
        max_size=3,
    )
)
def test_known_point_systems(values):
    symbols = [X, Y, Z][: len(values)]
    basis = groebner_basis(
        [Poly.var(s) - Poly.const(Fraction(v)) for s, v in zip(symbols, values)],
        symbols=symbols,
    )
    report = variety_dimension(basis, symbols)
    assert report.dimension == 0
    assert report.count == 1


@given(st.integers(1, 5), st.integers(1, 5))
def test_product_of_univariate_counts(da, db):
    # x^da and y^db: quotient dimension is the product of the degrees
    basis = groebner_basis([Poly.var(X, da), Poly.var(Y, db)], symbols=[X, Y])
    report = variety_dimension(basis, [X, Y])
    assert report.dimension == 0
    assert report.count == da * db
