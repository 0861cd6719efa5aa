"""Exact symbolic algebra kernel: polynomials, rational functions,
multivariate gcd, Groebner bases and small variety solvers over Q."""

from .symbols import Symbol, SymbolTable, SymbolError
from .poly import Poly, MonomialOrder
from .ratfunc import RatFunc
from .parse import parse_poly, format_poly, format_ratfunc, PolyParseError
from .gcd import poly_gcd, poly_sqrt, GcdError
from .groebner import (
    groebner_basis,
    reduce_mod_basis,
    GroebnerTimeout,
    Deadline,
)
from .solve import (
    DimensionReport,
    GenericPoint,
    Branch,
    NoSolutionError,
    NotExtractableError,
    solve_triangular,
    variety_dimension,
)

__all__ = [
    "Symbol",
    "SymbolTable",
    "SymbolError",
    "Poly",
    "MonomialOrder",
    "RatFunc",
    "parse_poly",
    "format_poly",
    "format_ratfunc",
    "PolyParseError",
    "poly_gcd",
    "poly_sqrt",
    "GcdError",
    "groebner_basis",
    "reduce_mod_basis",
    "GroebnerTimeout",
    "Deadline",
    "DimensionReport",
    "GenericPoint",
    "Branch",
    "NoSolutionError",
    "NotExtractableError",
    "solve_triangular",
    "variety_dimension",
]
