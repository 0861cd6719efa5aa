from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from structid.algebra import (
    MonomialOrder,
    Poly,
    Symbol,
    groebner_basis,
    reduce_mod_basis,
)

X, Y, Z = Symbol("x"), Symbol("y"), Symbol("z")


def _sympy_of(p: Poly):
    expr = sympy.Integer(0)
    for mono, coeff in p.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for sym, exp in mono:
            term *= sympy.Symbol(sym.name) ** exp
        expr += term
    return sympy.expand(expr)


def monomials():
    pairs = st.lists(
        st.tuples(st.sampled_from((X, Y, Z)), st.integers(1, 2)),
        max_size=2,
        unique_by=lambda t: t[0],
    )
    return pairs.map(lambda ps: tuple(sorted(ps)))


def polys():
    coeffs = st.integers(-4, 4).filter(bool).map(Fraction)
    return st.dictionaries(monomials(), coeffs, min_size=1, max_size=3).map(Poly)


def systems():
    return st.lists(polys(), min_size=1, max_size=3)


def test_linear_triangular_system():
    basis = groebner_basis(
        [Poly.var(X) - 1, Poly.var(Y) - Poly.var(X)],
        order=MonomialOrder.LEX,
        symbols=[X, Y],
    )
    assert set(basis) == {Poly.var(X) - 1, Poly.var(Y) - 1}


def test_single_polynomial_already_reduced():
    p = Poly.var(X, 2) - 1
    assert groebner_basis([p], order=MonomialOrder.LEX, symbols=[X]) == [p]


def test_circle_meets_diagonal():
    # x^2 + y^2 - 1 and x - y: substituting x = y gives 2y^2 - 1, so the
    # reduced lex basis contains that univariate element (up to scaling).
    circle = Poly.var(X, 2) + Poly.var(Y, 2) - 1
    diag = Poly.var(X) - Poly.var(Y)
    basis = groebner_basis([circle, diag], order=MonomialOrder.LEX, symbols=[X, Y])
    univariate = [b for b in basis if b.symbols() == {Y}]
    assert len(univariate) == 1
    assert univariate[0] * 2 == Poly.var(Y, 2) * 2 - 1


def test_empty_input_gives_empty_basis():
    assert groebner_basis([], order=MonomialOrder.LEX, symbols=[X]) == []
    assert groebner_basis([Poly.zero()], symbols=[X]) == []


def test_inconsistent_system_gives_unit_ideal():
    basis = groebner_basis([Poly.var(X) - 1, Poly.var(X) - 2], symbols=[X])
    assert basis == [Poly.one()]


@given(systems())
def test_inputs_reduce_to_zero(polys_in):
    basis = groebner_basis(polys_in, symbols=[X, Y, Z])
    for p in polys_in:
        assert reduce_mod_basis(p, basis, symbols=[X, Y, Z]).is_zero()


@given(systems())
def test_s_polynomials_reduce_to_zero(polys_in):
    symbols = [X, Y, Z]
    basis = groebner_basis(polys_in, symbols=symbols)
    if basis == [Poly.one()]:
        return

    def lead(p):
        mono, coeff = p.leading(symbols, MonomialOrder.GREVLEX)
        return mono, coeff

    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            mi, ci = lead(basis[i])
            mj, cj = lead(basis[j])
            merged = dict(mi)
            for sym, exp in mj:
                merged[sym] = max(merged.get(sym, 0), exp)
            lcm = tuple(sorted(merged.items()))

            def quotient(mono):
                rest = dict(lcm)
                for sym, exp in mono:
                    rest[sym] = rest.get(sym, 0) - exp
                return Poly({tuple(sorted((s, e) for s, e in rest.items() if e)): Fraction(1)})

            spoly = quotient(mi) * basis[i] / ci - quotient(mj) * basis[j] / cj
            assert reduce_mod_basis(spoly, basis, symbols=symbols).is_zero()


@given(systems())
@settings(max_examples=20)
def test_matches_sympy_groebner(polys_in):
    nonzero = [p for p in polys_in if not p.is_zero()]
    if not nonzero:
        return
    symbols = [X, Y, Z]
    for order, name in ((MonomialOrder.LEX, "lex"), (MonomialOrder.GREVLEX, "grevlex")):
        ours = groebner_basis(nonzero, order=order, symbols=symbols)
        gb = sympy.groebner(
            [_sympy_of(p) for p in nonzero],
            *[sympy.Symbol(s.name) for s in symbols],
            order=name,
        )
        sy_symbols = [sympy.Symbol(s.name) for s in symbols]

        def monic(e):
            return sympy.Poly(e, *sy_symbols).monic().as_expr()

        theirs = {str(monic(e)) for e in gb.exprs}
        ours_sympy = {str(monic(_sympy_of(p))) for p in ours}
        assert ours_sympy == theirs


def test_reduce_mod_basis_normal_form():
    basis = groebner_basis([Poly.var(X, 2) - 1], symbols=[X])
    p = Poly.var(X, 3) + Poly.var(X, 2)
    nf = reduce_mod_basis(p, basis, symbols=[X])
    assert nf == Poly.var(X) + 1
