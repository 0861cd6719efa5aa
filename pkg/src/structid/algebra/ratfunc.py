"""Quotients of polynomials.

A RatFunc stores numerator and denominator exactly as given; nothing is
cancelled behind the caller's back, because some consumers need the raw
fraction (for example a transfer function entry before pole-zero
cancellation). cancelled() removes the polynomial gcd while preserving
the denominator's scale; normalized() additionally rescales so the
denominator is monic under the module's fixed monomial order, which is
the canonical form used by arithmetic results.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .poly import Poly, MonomialOrder, Scalar
from .symbols import Symbol


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Union[Poly, None] = None) -> None:
        if den is None:
            den = Poly.one()
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def from_scalar(cls, value: Scalar) -> "RatFunc":
        return cls(Poly.const(Fraction(value)), Poly.one())

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p, Poly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == Poly.one()

    def cancelled(self) -> "RatFunc":
        """Divide out gcd(num, den); the denominator keeps its leading scale."""
        from .gcd import poly_gcd

        if self.num.is_zero():
            return RatFunc(Poly.zero(), Poly.one())
        g = poly_gcd(self.num, self.den)
        if g.is_const():
            return self
        return RatFunc(self.num.div_exact(g), self.den.div_exact(g))

    def normalized(self) -> "RatFunc":
        """Cancelled, with the denominator made monic under the fixed order."""
        r = self.cancelled()
        _, lead = r.den.leading()
        if lead == 1:
            return r
        return RatFunc(r.num / lead, r.den / lead)

    # arithmetic; results come back normalized

    def _coerce(self, other: object) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_scalar(other)
        raise TypeError(f"cannot combine RatFunc with {type(other).__name__}")

    def __add__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den).normalized()

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: object) -> "RatFunc":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "RatFunc":
        return self._coerce(other) + (-self)

    def __mul__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den).normalized()

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num).normalized()

    def __rtruediv__(self, other: object) -> "RatFunc":
        return self._coerce(other) / self

    def __pow__(self, exp: int) -> "RatFunc":
        if not isinstance(exp, int):
            raise ValueError("rational function exponent must be an integer")
        if exp < 0:
            if self.num.is_zero():
                raise ZeroDivisionError("zero rational function to a negative power")
            return RatFunc(self.den ** (-exp), self.num ** (-exp)).normalized()
        return RatFunc(self.num**exp, self.den**exp).normalized()

    def evaluate(self, assignment: Mapping[Symbol, Scalar]) -> Fraction:
        den = self.den.evaluate(assignment)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at the given point")
        return self.num.evaluate(assignment) / den

    def equivalent(self, other: "RatFunc") -> bool:
        """Equality as rational functions (cross multiplication)."""
        return (self.num * other.den - other.num * self.den).is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        from .parse import format_ratfunc

        return format_ratfunc(self)

    def __repr__(self) -> str:
        return f"RatFunc({self})"
