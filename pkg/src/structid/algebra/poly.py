"""Sparse multivariate polynomials with exact rational coefficients.

Terms map a monomial to a nonzero Fraction. A monomial is a tuple of
(symbol, exponent) pairs sorted by symbol name with all exponents
positive; the empty tuple is the constant monomial. The zero polynomial
has no terms, and zero coefficients are never stored. Instances are
treated as immutable and all operations return new polynomials.

Monomial comparisons take an explicit variable order (largest variable
first). The module's fixed fallback, used wherever no order is given,
is graded reverse lexicographic over the symbols sorted by name.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .symbols import Symbol

Monomial = Tuple[Tuple[Symbol, int], ...]
Scalar = Union[int, Fraction]

CONST_MONO: Monomial = ()


class MonomialOrder(enum.Enum):
    LEX = "lex"
    GREVLEX = "grevlex"


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged: dict[Symbol, int] = dict(a)
    for sym, exp in b:
        merged[sym] = merged.get(sym, 0) + exp
    return tuple(sorted(merged.items(), key=lambda it: it[0].name))


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b, or None when b does not divide a."""
    if not b:
        return a
    result: dict[Symbol, int] = dict(a)
    for sym, exp in b:
        have = result.get(sym, 0)
        if have < exp:
            return None
        if have == exp:
            del result[sym]
        else:
            result[sym] = have - exp
    return tuple(sorted(result.items(), key=lambda it: it[0].name))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    return mono_div(a, b) is not None


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    merged: dict[Symbol, int] = dict(a)
    for sym, exp in b:
        if merged.get(sym, 0) < exp:
            merged[sym] = exp
    return tuple(sorted(merged.items(), key=lambda it: it[0].name))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    other = dict(b)
    out = []
    for sym, exp in a:
        e = min(exp, other.get(sym, 0))
        if e > 0:
            out.append((sym, e))
    return tuple(out)


def mono_degree(m: Monomial) -> int:
    return sum(exp for _, exp in m)


def mono_exponents(m: Monomial, symbol_order: Sequence[Symbol]) -> Tuple[int, ...]:
    """Dense exponent vector over symbol_order; every symbol of m must be listed."""
    index = {sym: i for i, sym in enumerate(symbol_order)}
    exps = [0] * len(symbol_order)
    for sym, exp in m:
        try:
            exps[index[sym]] = exp
        except KeyError:
            raise KeyError(f"symbol {sym.name!r} not in the given variable order")
    return tuple(exps)


def mono_sort_key(
    m: Monomial,
    symbol_order: Sequence[Symbol],
    order: MonomialOrder = MonomialOrder.GREVLEX,
) -> tuple:
    """Ascending sort key; symbol_order lists the largest variable first."""
    exps = mono_exponents(m, symbol_order)
    if order is MonomialOrder.LEX:
        return exps
    return (sum(exps), tuple(-e for e in reversed(exps)))


def _coerce(value: Union["Poly", Scalar]) -> "Poly":
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to Poly")


class Poly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None) -> None:
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    clean[mono] = c
        self.terms = clean
        self._hash: Optional[int] = None

    # construction

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls({CONST_MONO: Fraction(1)})

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls({CONST_MONO: Fraction(value)})

    @classmethod
    def var(cls, sym: Symbol, exp: int = 1) -> "Poly":
        if exp < 0:
            raise ValueError("negative exponent")
        if exp == 0:
            return cls.one()
        return cls({((sym, exp),): Fraction(1)})

    # predicates and views

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and CONST_MONO in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if self.is_const():
            return self.terms[CONST_MONO]
        raise ValueError("polynomial is not constant")

    def symbols(self) -> set[Symbol]:
        out: set[Symbol] = set()
        for mono in self.terms:
            for sym, _ in mono:
                out.add(sym)
        return out

    def sorted_symbols(self) -> list[Symbol]:
        return sorted(self.symbols(), key=lambda s: s.name)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(mono_degree(m) for m in self.terms)

    def degree_in(self, sym: Symbol) -> int:
        best = 0
        for mono in self.terms:
            for s, exp in mono:
                if s == sym and exp > best:
                    best = exp
        return best

    def coefficients_in(self, sym: Symbol) -> list[Tuple[int, "Poly"]]:
        """View as univariate in sym: list of (power, coefficient) ascending,
        zero coefficients omitted."""
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for mono, coeff in self.terms.items():
            power = 0
            rest = []
            for s, exp in mono:
                if s == sym:
                    power = exp
                else:
                    rest.append((s, exp))
            buckets.setdefault(power, {})[tuple(rest)] = coeff
        return [(p, Poly(buckets[p])) for p in sorted(buckets)]

    def coefficient_of(self, sym: Symbol, power: int) -> "Poly":
        for p, c in self.coefficients_in(sym):
            if p == power:
                return c
        return Poly.zero()

    def leading(
        self,
        symbol_order: Optional[Sequence[Symbol]] = None,
        order: MonomialOrder = MonomialOrder.GREVLEX,
    ) -> Tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if symbol_order is None:
            symbol_order = self.sorted_symbols()
        mono = max(self.terms, key=lambda m: mono_sort_key(m, symbol_order, order))
        return mono, self.terms[mono]

    def leading_coefficient_in(self, sym: Symbol) -> "Poly":
        coeffs = self.coefficients_in(sym)
        if not coeffs:
            return Poly.zero()
        return coeffs[-1][1]

    # arithmetic

    def __add__(self, other: Union["Poly", Scalar]) -> "Poly":
        other = _coerce(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = terms.get(mono)
            if c is None:
                terms[mono] = coeff
            else:
                c = c + coeff
                if c:
                    terms[mono] = c
                else:
                    del terms[mono]
        out = Poly.__new__(Poly)
        out.terms = terms
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        out = Poly.__new__(Poly)
        out.terms = {m: -c for m, c in self.terms.items()}
        out._hash = None
        return out

    def __sub__(self, other: Union["Poly", Scalar]) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return Poly.zero()
            out = Poly.__new__(Poly)
            out.terms = {m: c * q for m, c in self.terms.items()}
            out._hash = None
            return out
        other = _coerce(other)
        if not self.terms or not other.terms:
            return Poly.zero()
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = mono_mul(m1, m2)
                c = terms.get(mono)
                if c is None:
                    terms[mono] = c1 * c2
                else:
                    c = c + c1 * c2
                    if c:
                        terms[mono] = c
                    else:
                        del terms[mono]
        out = Poly.__new__(Poly)
        out.terms = terms
        out._hash = None
        return out

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Poly":
        q = Fraction(other)
        if not q:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        return self * (1 / q)

    def __pow__(self, exp: int) -> "Poly":
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = Poly.one()
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base if exp > 1 else base
            exp >>= 1
        return result

    # substitution and calculus

    def evaluate(self, assignment: Mapping[Symbol, Scalar]) -> Fraction:
        """Full evaluation; every symbol of the polynomial must be assigned."""
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            value = coeff
            for sym, exp in mono:
                if sym not in assignment:
                    raise KeyError(f"no value assigned to symbol {sym.name!r}")
                value = value * Fraction(assignment[sym]) ** exp
            total += value
        return total

    def specialize(self, assignment: Mapping[Symbol, Scalar]) -> "Poly":
        """Substitute rational values for a subset of the symbols."""
        out = Poly.zero()
        for mono, coeff in self.terms.items():
            factor = coeff
            rest = []
            for sym, exp in mono:
                if sym in assignment:
                    factor = factor * Fraction(assignment[sym]) ** exp
                else:
                    rest.append((sym, exp))
            out = out + Poly({tuple(rest): factor})
        return out

    def rename(self, mapping: Mapping[Symbol, Symbol]) -> "Poly":
        """Replace symbols by symbols. The map need not cover all symbols."""
        terms: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            renamed: dict[Symbol, int] = {}
            for sym, exp in mono:
                target = mapping.get(sym, sym)
                renamed[target] = renamed.get(target, 0) + exp
            key = tuple(sorted(renamed.items(), key=lambda it: it[0].name))
            c = terms.get(key)
            terms[key] = coeff if c is None else c + coeff
        return Poly(terms)

    def substitute(self, mapping: Mapping[Symbol, object]) -> "RatFunc":
        """Substitute rational functions (or polynomials, or scalars) for
        symbols; unmapped symbols stay symbolic. Returns a rational function."""
        from .ratfunc import RatFunc

        def as_rf(value: object) -> RatFunc:
            if isinstance(value, RatFunc):
                return value
            if isinstance(value, Poly):
                return RatFunc(value, Poly.one())
            return RatFunc(Poly.const(Fraction(value)), Poly.one())  # type: ignore[arg-type]

        total = RatFunc(Poly.zero(), Poly.one())
        for mono, coeff in self.terms.items():
            term = RatFunc(Poly.const(coeff), Poly.one())
            for sym, exp in mono:
                if sym in mapping:
                    term = term * as_rf(mapping[sym]) ** exp
                else:
                    term = term * RatFunc(Poly.var(sym, exp), Poly.one())
            total = total + term
        return total

    def derivative(self, sym: Symbol) -> "Poly":
        terms: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            for i, (s, exp) in enumerate(mono):
                if s != sym:
                    continue
                rest = list(mono)
                if exp == 1:
                    del rest[i]
                else:
                    rest[i] = (s, exp - 1)
                key = tuple(rest)
                c = terms.get(key)
                new = coeff * exp
                terms[key] = new if c is None else c + new
                break
        return Poly(terms)

    # exact division

    def try_div(self, divisor: "Poly") -> Optional["Poly"]:
        """Exact quotient self / divisor, or None when not divisible."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return Poly.zero()
        if divisor.is_const():
            return self / divisor.constant_value()
        order = sorted(self.symbols() | divisor.symbols(), key=lambda s: s.name)
        key: Callable[[Monomial], tuple] = lambda m: mono_sort_key(m, order)
        div_mono = max(divisor.terms, key=key)
        div_coeff = divisor.terms[div_mono]
        remainder = self
        quotient: dict[Monomial, Fraction] = {}
        while not remainder.is_zero():
            lead = max(remainder.terms, key=key)
            q_mono = mono_div(lead, div_mono)
            if q_mono is None:
                return None
            q_coeff = remainder.terms[lead] / div_coeff
            quotient[q_mono] = q_coeff
            remainder = remainder - divisor * Poly({q_mono: q_coeff})
        return Poly(quotient)

    def div_exact(self, divisor: "Poly") -> "Poly":
        q = self.try_div(divisor)
        if q is None:
            raise ValueError("inexact polynomial division")
        return q

    # normalization helpers

    def rational_content(self) -> Fraction:
        """Positive rational c with self / c having coprime integer
        coefficients. Zero polynomial has content 0."""
        if not self.terms:
            return Fraction(0)
        from math import gcd, lcm

        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def monic(
        self,
        symbol_order: Optional[Sequence[Symbol]] = None,
        order: MonomialOrder = MonomialOrder.GREVLEX,
    ) -> "Poly":
        if self.is_zero():
            return self
        _, lead = self.leading(symbol_order, order)
        return self / lead

    # comparisons

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_const() and self.constant_value() == other
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        from .parse import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self})"
