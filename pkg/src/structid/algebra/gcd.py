"""Multivariate polynomial gcd over Q.

The gcd is computed one variable at a time: split each input into its
content and primitive part with respect to a main variable, recurse on
the contents, and run a primitive pseudo-remainder sequence on the
primitive parts. Rational scalars are units here, so the result is
normalized to have leading coefficient 1 under the module's fixed
monomial order (graded reverse lex over symbols sorted by name).

poly_sqrt recovers q with q*q == p by coefficient matching in one
variable at a time; it returns None when p is not a perfect square.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from .deadline import Deadline
from .poly import Poly, mono_gcd
from .symbols import Symbol


class GcdError(ValueError):
    """Invalid gcd input (both arguments zero)."""


def _normalize(p: Poly) -> Poly:
    return p.monic()


def _monomial_content(p: Poly) -> Poly:
    """Largest monomial dividing every term."""
    monos = iter(p.terms)
    acc = next(monos)
    for m in monos:
        acc = mono_gcd(acc, m)
        if not acc:
            break
    return Poly({acc: Fraction(1)})


def _is_single_term(p: Poly) -> bool:
    return len(p.terms) == 1


def _main_variable(a: Poly, b: Poly) -> Symbol:
    return min(a.symbols() | b.symbols(), key=lambda s: s.name)


def _content_and_primitive(
    p: Poly, x: Symbol, deadline: Optional[Deadline] = None
) -> tuple[Poly, Poly]:
    coeffs = [c for _, c in p.coefficients_in(x)]
    content = coeffs[0]
    for c in coeffs[1:]:
        if content.is_const():
            break
        content = _gcd_inner(content, c, deadline)
    content = _normalize(content)
    if content.is_const():
        return Poly.one(), p
    return content, p.div_exact(content)


def _pseudo_remainder(
    f: Poly, g: Poly, x: Symbol, deadline: Optional[Deadline] = None
) -> Poly:
    """Remainder of lc(g)^k * f under division by g, univariate in x."""
    deg_g = g.degree_in(x)
    lc_g = g.leading_coefficient_in(x)
    r = f
    while not r.is_zero():
        if deadline is not None:
            deadline.check()
        deg_r = r.degree_in(x)
        if deg_r < deg_g:
            break
        lc_r = r.leading_coefficient_in(x)
        shift = Poly.var(x, deg_r - deg_g) if deg_r > deg_g else Poly.one()
        r = r * lc_g - g * shift * lc_r
    return r


def _gcd_inner(a: Poly, b: Poly, deadline: Optional[Deadline] = None) -> Poly:
    """gcd of two nonzero polynomials, normalized leading coefficient 1."""
    if a == b:
        return _normalize(a)
    if a.is_const() or b.is_const():
        return Poly.one()
    if _is_single_term(a) or _is_single_term(b):
        shared = mono_gcd(_monomial_content(a).leading()[0], _monomial_content(b).leading()[0])
        return Poly({shared: Fraction(1)})
    if deadline is not None:
        deadline.check()
    x = _main_variable(a, b)
    cont_a, prim_a = _content_and_primitive(a, x, deadline)
    cont_b, prim_b = _content_and_primitive(b, x, deadline)
    cont_gcd = _gcd_inner(cont_a, cont_b, deadline) if not (cont_a.is_const() and cont_b.is_const()) else Poly.one()
    f, g = prim_a, prim_b
    if f.degree_in(x) < g.degree_in(x):
        f, g = g, f
    while True:
        r = _pseudo_remainder(f, g, x, deadline)
        if r.is_zero():
            prim_gcd = _content_and_primitive(g, x, deadline)[1]
            break
        if r.degree_in(x) == 0:
            prim_gcd = Poly.one()
            break
        f, g = g, _content_and_primitive(r, x, deadline)[1]
    return _normalize(cont_gcd * prim_gcd)


def poly_gcd(a: Poly, b: Poly, deadline: Optional[Deadline] = None) -> Poly:
    """Greatest common divisor, leading coefficient normalized to 1.

    One argument may be zero (the other is returned normalized); both
    zero is an error. An optional deadline bounds the wall-clock cost of
    large coefficient-field computations.
    """
    if a.is_zero() and b.is_zero():
        raise GcdError("gcd(0, 0) is undefined")
    if a.is_zero():
        return _normalize(b)
    if b.is_zero():
        return _normalize(a)
    return _gcd_inner(a, b, deadline)


def _fraction_sqrt(c: Fraction) -> Optional[Fraction]:
    if c < 0:
        return None
    num = math.isqrt(c.numerator)
    den = math.isqrt(c.denominator)
    if num * num != c.numerator or den * den != c.denominator:
        return None
    return Fraction(num, den)


def poly_sqrt(p: Poly) -> Optional[Poly]:
    """Exact square root of p, or None when p is not a perfect square."""
    if p.is_zero():
        return Poly.zero()
    if p.is_const():
        root = _fraction_sqrt(p.constant_value())
        return None if root is None else Poly.const(root)
    x = min(p.symbols(), key=lambda s: s.name)
    coeffs = dict(p.coefficients_in(x))
    deg = p.degree_in(x)
    if deg % 2:
        return None
    half = deg // 2
    lead = poly_sqrt(coeffs[deg])
    if lead is None:
        return None
    q: dict[int, Poly] = {half: lead}
    two_lead = lead * 2
    for k in range(half - 1, -1, -1):
        acc = coeffs.get(half + k, Poly.zero())
        # subtract the ordered convolution over already known coefficients
        for i in range(k + 1, half):
            acc = acc - q[i] * q[half + k - i]
        qk = acc.try_div(two_lead)
        if qk is None:
            return None
        q[k] = qk
    candidate = Poly.zero()
    for power, coeff in q.items():
        candidate = candidate + coeff * Poly.var(x, power)
    if (candidate * candidate) == p:
        return candidate
    return None
