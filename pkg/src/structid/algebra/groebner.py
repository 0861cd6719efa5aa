"""Reduced Groebner bases by Buchberger's algorithm with Gebauer-Moller
pair elimination.

The engine works on dense exponent tuples over an explicit unknown list
(largest variable first) and is generic over the coefficient domain:

* RationalDomain: coefficients are Fractions. Used once parameters have
  been specialized at a generic point.
* PolyCoeffDomain: coefficients are polynomials in symbols that play the
  role of transcendental base-field elements. Division is avoided via
  pseudo-reduction (cross multiplication by leading coefficients divided
  by their gcd) and every completed polynomial is stripped to its
  content-free, scale-normalized form, so the result is a reduced basis
  over the fraction field of the coefficient ring.

Reduced bases are unique for a fixed order and normalization; elements
are returned sorted ascending by leading monomial, which makes every
downstream artifact deterministic.

This targets desk scale (a dozen unknowns, equations from small state
space structures), not industrial Groebner workloads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .deadline import Deadline, GroebnerTimeout
from .gcd import poly_gcd
from .poly import CONST_MONO, MonomialOrder, Poly, mono_sort_key
from .symbols import Symbol

Exps = tuple  # dense exponent tuple over the unknown list
GPoly = dict  # Exps -> coefficient (Fraction or Poly)


def exps_mul(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))

def exps_div(a: Exps, b: Exps) -> Optional[Exps]:
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)

def exps_divides(b: Exps, a: Exps) -> bool:
    return all(x >= y for x, y in zip(a, b))

def exps_lcm(a: Exps, b: Exps) -> Exps:
    return tuple(max(x, y) for x, y in zip(a, b))

def exps_coprime(a: Exps, b: Exps) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def order_key(order: MonomialOrder) -> Callable[[Exps], tuple]:
    if order is MonomialOrder.LEX:
        return lambda e: e
    return lambda e: (sum(e), tuple(-x for x in reversed(e)))


class RationalDomain:
    """Coefficients are exact rationals; a genuine field."""

    def is_zero(self, c: Fraction) -> bool:
        return c == 0

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def cross(self, cf: Fraction, cg: Fraction) -> tuple[Fraction, Fraction]:
        """Multipliers (u, v) with u*cf == v*cg, u kept minimal."""
        return Fraction(1), cf / cg

    def scale_to_canonical(self, g: GPoly, lead: Exps) -> GPoly:
        lc = g[lead]
        if lc == 1:
            return g
        return {e: c / lc for e, c in g.items()}

    def is_one(self, c: Fraction) -> bool:
        return c == 1


class PolyCoeffDomain:
    """Coefficients are polynomials in transcendental symbols, treated as
    elements of their fraction field via pseudo-reduction."""

    def __init__(self, deadline: Optional[Deadline] = None) -> None:
        self.deadline = deadline

    def is_zero(self, c: Poly) -> bool:
        return c.is_zero()

    def add(self, a: Poly, b: Poly) -> Poly:
        return a + b

    def neg(self, a: Poly) -> Poly:
        return -a

    def mul(self, a: Poly, b: Poly) -> Poly:
        return a * b

    def cross(self, cf: Poly, cg: Poly) -> tuple[Poly, Poly]:
        if cf.is_const() and cg.is_const():
            return Poly.one(), cf / cg.constant_value()
        d = poly_gcd(cf, cg, self.deadline)
        if d.is_const():
            return cg / d.constant_value(), cf / d.constant_value()
        return cg.div_exact(d), cf.div_exact(d)

    def scale_to_canonical(self, g: GPoly, lead: Exps) -> GPoly:
        coeffs = list(g.values())
        content = coeffs[0]
        for c in coeffs[1:]:
            if content.is_const():
                break
            content = poly_gcd(content, c, self.deadline)
        if not content.is_const():
            g = {e: c.div_exact(content) for e, c in g.items()}
        _, lc_lead = g[lead].leading()
        if lc_lead != 1:
            g = {e: c / lc_lead for e, c in g.items()}
        return g

    def is_one(self, c: Poly) -> bool:
        return c.is_const() and c.constant_value() == 1


Domain = Union[RationalDomain, PolyCoeffDomain]


def _leading(g: GPoly, key: Callable[[Exps], tuple]) -> Exps:
    return max(g, key=key)


def _combine(
    domain: Domain,
    f: GPoly,
    uf,
    g: GPoly,
    ug,
    shift: Exps,
) -> GPoly:
    """uf * f - ug * x^shift * g, with zero coefficients dropped."""
    out: GPoly = {}
    skip_scale = domain.is_one(uf)
    for e, c in f.items():
        val = c if skip_scale else domain.mul(c, uf)
        if not domain.is_zero(val):
            out[e] = val
    for e, c in g.items():
        target = exps_mul(e, shift)
        sub = domain.mul(c, ug)
        cur = out.get(target)
        if cur is None:
            if not domain.is_zero(sub):
                out[target] = domain.neg(sub)
        else:
            new = domain.add(cur, domain.neg(sub))
            if domain.is_zero(new):
                del out[target]
            else:
                out[target] = new
    return out


def _spoly(domain: Domain, f: GPoly, g: GPoly, lf: Exps, lg: Exps) -> GPoly:
    lcm = exps_lcm(lf, lg)
    u, v = domain.cross(f[lf], g[lg])
    shift_f = exps_div(lcm, lf)
    shift_g = exps_div(lcm, lg)
    lifted_f = {exps_mul(e, shift_f): c for e, c in f.items()}
    return _combine(domain, lifted_f, u, g, v, shift_g)


def _reduce_full(
    domain: Domain,
    f: GPoly,
    basis: Sequence[tuple[Exps, GPoly]],
    key: Callable[[Exps], tuple],
    deadline: Optional[Deadline] = None,
    track: bool = False,
):
    """Normal form of f against basis; deterministic scan order.

    Pseudo-reduction scales the input: the result r satisfies
    u * f = sum(q_i * g_i) + r for an accumulated base multiplier u.
    With track=True the pair (r, u) is returned so callers can state
    exact ideal relations; u is 1 over a true coefficient field.
    """
    done: GPoly = {}
    mult = None
    work = dict(f)
    while work:
        if deadline is not None:
            deadline.check()
        mono = _leading(work, key)
        reducer = None
        for lm, g in basis:
            if exps_divides(lm, mono):
                reducer = (lm, g)
                break
        if reducer is None:
            done[mono] = work.pop(mono)
            continue
        lm, g = reducer
        u, v = domain.cross(work[mono], g[lm])
        shift = exps_div(mono, lm)
        if not domain.is_one(u):
            if done:
                done = {e: domain.mul(c, u) for e, c in done.items()}
            if track:
                mult = u if mult is None else domain.mul(mult, u)
        work = _combine(domain, work, u, g, v, shift)
        work.pop(mono, None)
    if track:
        return done, (mult if mult is not None else _unit_coeff(domain))
    return done


def _gm_update(
    pairs: set[tuple[int, int]],
    leads: dict[int, Exps],
    t: int,
) -> set[tuple[int, int]]:
    """Gebauer-Moller pair update when element t joins the basis."""
    lt = leads[t]
    fresh = {}
    for i, li in leads.items():
        if i == t:
            continue
        fresh[i] = exps_lcm(li, lt)
    # drop new pairs whose lcm is a strict multiple of another new pair's lcm
    keep: list[int] = []
    for i in sorted(fresh):
        li_lcm = fresh[i]
        dominated = False
        for j in sorted(fresh):
            if j == i:
                continue
            lj_lcm = fresh[j]
            if lj_lcm != li_lcm and exps_divides(lj_lcm, li_lcm):
                dominated = True
                break
            if lj_lcm == li_lcm and j < i and j in keep:
                dominated = True
                break
        if not dominated:
            keep.append(i)
    # Buchberger's coprimality criterion
    new_pairs = {
        (i, t)
        for i in keep
        if not exps_coprime(leads[i], lt)
    }
    # prune old pairs strictly refined by the newcomer
    survivors = set()
    for (i, j) in pairs:
        lij = exps_lcm(leads[i], leads[j])
        if (
            exps_divides(lt, lij)
            and exps_lcm(leads[i], lt) != lij
            and exps_lcm(leads[j], lt) != lij
        ):
            continue
        survivors.add((i, j))
    return survivors | new_pairs


def _engine_buchberger(
    domain: Domain,
    polys: list[GPoly],
    width: int,
    key: Callable[[Exps], tuple],
    deadline: Optional[Deadline],
) -> list[GPoly]:
    basis: dict[int, GPoly] = {}
    leads: dict[int, Exps] = {}
    pairs: set[tuple[int, int]] = set()
    counter = 0
    trivial = [{tuple([0] * width): _unit_coeff(domain)}]

    def add_element(g: GPoly) -> bool:
        """Returns True when the ideal is the whole ring."""
        nonlocal counter, pairs
        lead = _leading(g, key)
        if lead == tuple([0] * len(lead)):
            return True
        g = domain.scale_to_canonical(g, lead)
        idx = counter
        counter += 1
        basis[idx] = g
        leads[idx] = lead
        pairs = _gm_update(pairs, leads, idx)
        return False

    for p in polys:
        if not p:
            continue
        if deadline is not None:
            deadline.check()
        reduced = _reduce_full(
            domain, p, [(leads[i], basis[i]) for i in sorted(basis)], key, deadline
        )
        if reduced and add_element(reduced):
            return trivial

    while pairs:
        if deadline is not None:
            deadline.check()
        i, j = min(
            pairs,
            key=lambda pr: (key(exps_lcm(leads[pr[0]], leads[pr[1]])), pr),
        )
        pairs.discard((i, j))
        s = _spoly(domain, basis[i], basis[j], leads[i], leads[j])
        if not s:
            continue
        reduced = _reduce_full(
            domain, s, [(leads[idx], basis[idx]) for idx in sorted(basis)], key, deadline
        )
        if not reduced:
            continue
        if add_element(reduced):
            return trivial

    # minimalize: drop elements whose lead is divisible by another lead
    alive = sorted(basis)
    minimal: list[int] = []
    for i in alive:
        li = leads[i]
        redundant = any(
            exps_divides(leads[j], li) and j != i and (leads[j] != li or j < i)
            for j in alive
        )
        if not redundant:
            minimal.append(i)
    # inter-reduce
    final: list[GPoly] = []
    for pos, i in enumerate(minimal):
        others = [
            (leads[j], basis[j]) for j in minimal if j != i
        ]
        reduced = _reduce_full(domain, basis[i], others, key, deadline)
        if reduced:
            lead = _leading(reduced, key)
            final.append(domain.scale_to_canonical(reduced, lead))
    final.sort(key=lambda g: key(_leading(g, key)))
    return final


def _unit_coeff(domain: Domain):
    return Fraction(1) if isinstance(domain, RationalDomain) else Poly.one()


def poly_to_engine(
    p: Poly, unknowns: Sequence[Symbol], domain: Domain
) -> GPoly:
    """Split a flat polynomial into unknown monomials with coefficients in
    the remaining symbols (PolyCoeffDomain) or plain rationals."""
    index = {sym: i for i, sym in enumerate(unknowns)}
    width = len(unknowns)
    out: GPoly = {}
    for mono, coeff in p.terms.items():
        exps = [0] * width
        rest = []
        for sym, exp in mono:
            pos = index.get(sym)
            if pos is None:
                rest.append((sym, exp))
            else:
                exps[pos] = exp
        key = tuple(exps)
        if isinstance(domain, RationalDomain):
            if rest:
                raise ValueError(
                    f"symbol {rest[0][0].name!r} is neither an unknown nor specialized"
                )
            cur = out.get(key, Fraction(0))
            cur = cur + coeff
            if cur:
                out[key] = cur
            elif key in out:
                del out[key]
        else:
            add = Poly({tuple(rest): coeff})
            cur = out.get(key)
            new = add if cur is None else cur + add
            if new.is_zero():
                out.pop(key, None)
            else:
                out[key] = new
    return out


def engine_to_poly(g: GPoly, unknowns: Sequence[Symbol], domain: Domain) -> Poly:
    total = Poly.zero()
    for exps, coeff in g.items():
        mono = Poly.one()
        for sym, exp in zip(unknowns, exps):
            if exp:
                mono = mono * Poly.var(sym, exp)
        total = total + mono * coeff
    return total


def groebner_engine(
    polys: Sequence[Poly],
    unknowns: Sequence[Symbol],
    order: MonomialOrder,
    domain: Domain,
    deadline: Optional[Deadline] = None,
) -> list[GPoly]:
    key = order_key(order)
    engine_polys = [poly_to_engine(p, unknowns, domain) for p in polys if not p.is_zero()]
    return _engine_buchberger(domain, engine_polys, len(unknowns), key, deadline)


def groebner_basis(
    polys: Sequence[Poly],
    order: MonomialOrder = MonomialOrder.GREVLEX,
    symbols: Optional[Sequence[Symbol]] = None,
    deadline: Optional[Deadline] = None,
) -> list[Poly]:
    """Reduced Groebner basis of flat polynomials over Q.

    symbols fixes the variable order (largest first); by default every
    symbol that appears is an unknown, sorted by name. Returns elements
    sorted ascending by leading monomial; [] for no nonzero input; [1]
    when the ideal is the whole ring.
    """
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        return []
    if symbols is None:
        all_syms: set[Symbol] = set()
        for p in nonzero:
            all_syms |= p.symbols()
        symbols = sorted(all_syms, key=lambda s: s.name)
    domain = RationalDomain()
    result = groebner_engine(nonzero, symbols, order, domain, deadline)
    return [engine_to_poly(g, symbols, domain) for g in result]


def reduce_mod_basis(
    p: Poly,
    basis: Sequence[Poly],
    order: MonomialOrder = MonomialOrder.GREVLEX,
    symbols: Optional[Sequence[Symbol]] = None,
) -> Poly:
    """Normal form of p against a basis over Q (flat polynomials)."""
    nonzero = [b for b in basis if not b.is_zero()]
    if symbols is None:
        all_syms = set(p.symbols())
        for b in nonzero:
            all_syms |= b.symbols()
        symbols = sorted(all_syms, key=lambda s: s.name)
    if not nonzero:
        return p
    domain = RationalDomain()
    key = order_key(order)
    f = poly_to_engine(p, symbols, domain)
    engine_basis = []
    for b in nonzero:
        g = poly_to_engine(b, symbols, domain)
        engine_basis.append((_leading(g, key), g))
    reduced = _reduce_full(domain, f, engine_basis, key)
    return engine_to_poly(reduced, symbols, domain)
