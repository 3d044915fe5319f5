#!/usr/bin/env python3

"""
Groebner bases and the ideal toolkit built on them.

Bases are computed by Buchberger's algorithm with the normal selection strategy
and the Gebauer-Moeller pair update. Every reduction step is charged against a
step budget; running out raises ResourceExhausted.
"""

import heapq
import itertools
import logging
import threading
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .exceptions import BothZero, ContextMismatch, DivisionByZero, MixedFieldError, ResourceExhausted
from .field import FieldSpec, Raw
from .poly import (
    GREVLEX_ORDER,
    Monomial,
    MonomialOrder,
    Polynomial,
    VarContext,
    exact_divide,
    fresh_name,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomial_quotient,
    monomials_coprime,
)

DEFAULT_STEP_BUDGET: int = 10**6


class StepCounter:
    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.used = 0

    def charge(self, steps: int = 1) -> None:
        self.used += steps
        if self.used > self.limit:
            raise ResourceExhausted(f"step budget of {self.limit} reductions exhausted")


_active_budget: ContextVar[Optional[StepCounter]] = ContextVar("detpoly_step_budget", default=None)


@contextmanager
def step_budget(limit: int = DEFAULT_STEP_BUDGET) -> Iterator[StepCounter]:
    """
    Share one budget of `limit` reduction steps among every basis computation in
    the block. Outside such a block each computation gets DEFAULT_STEP_BUDGET.
    """
    counter = StepCounter(limit)
    token = _active_budget.set(counter)
    try:
        yield counter
    finally:
        _active_budget.reset(token)


def _counter() -> StepCounter:
    counter = _active_budget.get()
    return counter if counter is not None else StepCounter(DEFAULT_STEP_BUDGET)


# -- reduction ---------------------------------------------------------------


def _reduce(p: Polynomial, basis: Sequence[Polynomial], counter: StepCounter) -> Polynomial:
    """Full remainder of p by `basis`; the remainder is kept in a dict, pending monomials in a heap."""
    if p.is_zero or not basis:
        return p
    ctx, spec = p.context, p.spec
    heap_key = ctx.heap_key
    leads = [(g.leading_monomial(), g.leading_coefficient(), g.raw_terms[1:]) for g in basis]
    rem: Dict[Monomial, Raw] = dict(p.raw_terms)
    heap = [(heap_key(e), e) for e in rem]
    heapq.heapify(heap)
    out: Dict[Monomial, Raw] = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = rem.pop(e, None)
        if c is None:
            continue
        for lm, lc, tail in leads:
            if monomial_divides(lm, e):
                break
        else:
            out[e] = c
            continue
        counter.charge()
        m = monomial_quotient(e, lm)
        f = spec.div(c, lc)
        for et, ct in tail:
            t = monomial_mul(et, m)
            delta = spec.mul(f, ct)
            if t in rem:
                v = spec.sub(rem[t], delta)
                if spec.is_zero(v):
                    del rem[t]
                else:
                    rem[t] = v
            else:
                rem[t] = spec.neg(delta)
                heapq.heappush(heap, (heap_key(t), t))
    return Polynomial._from_dict(ctx, spec, out)


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two monic polynomials."""
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = monomial_lcm(lf, lg)
    one = f.spec.one
    return f.mul_term(monomial_quotient(lcm, lf), one) - g.mul_term(monomial_quotient(lcm, lg), one)


# -- Buchberger ----------------------------------------------------------------


def _update(
    G: List[Polynomial], lms: List[Monomial], P: Set[Tuple[int, int]], h: Polynomial
) -> Set[Tuple[int, int]]:
    """Add h to G and return the new pair set (Gebauer-Moeller criteria)."""
    lmh = h.leading_monomial()
    key = h.context.sort_key

    def lcm_of(i: int, j: int) -> Monomial:
        return monomial_lcm(lms[i], lms[j])

    # chain criterion on old pairs
    kept = set()
    for i, j in P:
        lij = lcm_of(i, j)
        if (
            not monomial_divides(lmh, lij)
            or lij == monomial_lcm(lms[i], lmh)
            or lij == monomial_lcm(lms[j], lmh)
        ):
            kept.add((i, j))

    by_lcm: Dict[Monomial, List[int]] = {}
    for i in range(len(G)):
        by_lcm.setdefault(monomial_lcm(lms[i], lmh), []).append(i)
    minimal: List[Monomial] = []
    for L in sorted(by_lcm, key=lambda L: (sum(L), key(L))):
        if all(not monomial_divides(M, L) for M in minimal):
            minimal.append(L)
    new = len(G)
    for L in minimal:
        # product criterion
        if not any(monomials_coprime(lms[i], lmh) for i in by_lcm[L]):
            kept.add((min(by_lcm[L]), new))

    G.append(h)
    lms.append(lmh)
    return kept


def _select(lms: List[Monomial], P: Set[Tuple[int, int]], ctx: VarContext) -> Tuple[int, int]:
    key = ctx.sort_key

    def strategy_key(pair: Tuple[int, int]) -> Tuple[int, Tuple[int, ...], Tuple[int, int]]:
        lcm = monomial_lcm(lms[pair[0]], lms[pair[1]])
        return sum(lcm), key(lcm), pair

    return min(P, key=strategy_key)


def _minimalize(G: Sequence[Polynomial]) -> List[Polynomial]:
    key = G[0].context.sort_key
    Gmin: List[Polynomial] = []
    for f in sorted(G, key=lambda h: key(h.leading_monomial())):
        if all(not monomial_divides(g.leading_monomial(), f.leading_monomial()) for g in Gmin):
            Gmin.append(f)
    return Gmin


def _interreduce(G: Sequence[Polynomial], counter: StepCounter) -> List[Polynomial]:
    Gred = []
    for i, g in enumerate(G):
        Gred.append(_reduce(g, [*G[:i], *G[i + 1 :]], counter).monic())
    return Gred


def buchberger(F: Sequence[Polynomial], counter: Optional[StepCounter] = None) -> List[Polynomial]:
    """Reduced, monic Groebner basis of F, sorted by leading monomial, largest first."""
    F = [f for f in F if not f.is_zero]
    if not F:
        return []
    ctx, spec = F[0].context, F[0].spec
    counter = counter if counter is not None else _counter()
    one = Polynomial.constant(ctx, spec, 1)
    if any(f.is_constant for f in F):
        return [one]

    G: List[Polynomial] = []
    lms: List[Monomial] = []
    P: Set[Tuple[int, int]] = set()
    key = ctx.sort_key
    for f in sorted(F, key=lambda f: key(f.leading_monomial())):
        h = _reduce(f, G, counter)
        if h.is_zero:
            continue
        if h.is_constant:
            return [one]
        P = _update(G, lms, P, h.monic())

    pairs_done = 0
    while P:
        pair = _select(lms, P, ctx)
        P.remove(pair)
        pairs_done += 1
        h = _reduce(_spoly(G[pair[0]], G[pair[1]]), G, counter)
        if h.is_zero:
            continue
        if h.is_constant:
            logging.debug(f"Buchberger: unit ideal after {pairs_done} pairs")
            return [one]
        P = _update(G, lms, P, h.monic())

    basis = _interreduce(_minimalize(G), counter)
    basis.sort(key=lambda g: key(g.leading_monomial()), reverse=True)
    logging.debug(
        f"Buchberger over {ctx}: {pairs_done} pairs, {counter.used} reductions so far,"
        f" {len(G)} intermediate and {len(basis)} reduced elements"
    )
    return basis


# -- ideals --------------------------------------------------------------------


class Ideal:
    """
    A generator list over one context and field, with the reduced Groebner basis
    for the context's order cached on first use. The zero ideal is generated by
    the zero polynomial.
    """

    def __init__(
        self,
        generators: Iterable[Polynomial],
        context: Optional[VarContext] = None,
        spec: Optional[FieldSpec] = None,
    ) -> None:
        gens = list(generators)
        if gens:
            context = context or gens[0].context
            spec = spec or gens[0].spec
        if context is None or spec is None:
            raise ValueError("an ideal without generators needs a context and a field")
        for g in gens:
            if g.context != context:
                raise ContextMismatch(f"generator {g} lives in {g.context}, not {context}")
            if g.spec != spec:
                raise MixedFieldError(f"generator {g} is over {g.spec}, not {spec}")
        self.context = context
        self.spec = spec
        self.generators: Tuple[Polynomial, ...] = tuple(gens) or (Polynomial.zero(context, spec),)
        self._gb: Optional[Tuple[Polynomial, ...]] = None
        self._lock = threading.Lock()

    @classmethod
    def _with_basis(cls, basis: Sequence[Polynomial], context: VarContext, spec: FieldSpec) -> "Ideal":
        ideal = cls(basis, context, spec)
        ideal._gb = tuple(basis)
        return ideal

    def groebner_basis(self) -> Tuple[Polynomial, ...]:
        if self._gb is None:
            basis = tuple(buchberger(self.generators))
            with self._lock:
                if self._gb is None:
                    self._gb = basis
        return self._gb

    @property
    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant

    @property
    def is_zero(self) -> bool:
        return not self.groebner_basis()

    def contains(self, g: Polynomial) -> bool:
        return normal_form(g, self).is_zero

    def __contains__(self, g: object) -> bool:
        return isinstance(g, Polynomial) and self.contains(g)

    def reorder(self, order: MonomialOrder) -> "Ideal":
        ctx = self.context.with_order(order)
        return Ideal([g.with_context(ctx) for g in self.generators], ctx, self.spec)

    def with_context(self, context: VarContext) -> "Ideal":
        return Ideal([g.with_context(context) for g in self.generators], context, self.spec)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return (
            self.context == other.context
            and self.spec == other.spec
            and self.groebner_basis() == other.groebner_basis()
        )

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __repr__(self) -> str:
        return f"Ideal({self}, {self.context}, {self.spec})"


def groebner(ideal: Ideal) -> List[Polynomial]:
    return list(ideal.groebner_basis())


def _check_context(g: Polynomial, ideal: Ideal) -> None:
    if g.context != ideal.context:
        raise ContextMismatch(f"{g} lives in {g.context}, the ideal in {ideal.context}")
    if g.spec != ideal.spec:
        raise MixedFieldError(f"{g} is over {g.spec}, the ideal over {ideal.spec}")


def normal_form(g: Polynomial, ideal: Ideal) -> Polynomial:
    _check_context(g, ideal)
    return _reduce(g, ideal.groebner_basis(), _counter())


def elimination_ideal(ideal: Ideal, keep: Iterable[str]) -> Ideal:
    """I ∩ k[keep] in the context restricted to `keep`."""
    ctx = ideal.context
    keep_set = set(keep)
    for name in keep_set:
        ctx.index(name)
    if keep_set == set(ctx.names):
        return ideal
    front = [n for n in ctx.names if n not in keep_set]
    back = [n for n in ctx.names if n in keep_set]
    logging.debug(f"Eliminating {', '.join(front)} from an ideal over {ctx}")
    basis = ideal.reorder(MonomialOrder.block(front, back)).groebner_basis()
    target = ctx.restrict(back)
    kept = [g.with_context(target) for g in basis if keep_set.issuperset(g.used_variables())]
    if target.order == GREVLEX_ORDER:
        # the block-order basis restricted to the back block is reduced for grevlex
        key = target.sort_key
        kept.sort(key=lambda g: key(g.leading_monomial()), reverse=True)
        return Ideal._with_basis(kept, target, ideal.spec)
    return Ideal(kept, target, ideal.spec)


def _extend(ideal: Ideal, extra: str) -> Tuple[VarContext, List[Polynomial]]:
    ctx = VarContext((*ideal.context.names, extra))
    return ctx, [g.with_context(ctx) for g in ideal.generators]


def radical_membership(g: Polynomial, ideal: Ideal) -> bool:
    """Whether g^k ∈ I for some k: 1 ∈ I + <z*g - 1>."""
    _check_context(g, ideal)
    if g.is_zero:
        return True
    z = fresh_name("z", ideal.context.names)
    ctx, gens = _extend(ideal, z)
    zg = Polynomial.variable(ctx, ideal.spec, z) * g.with_context(ctx)
    return Ideal([*gens, zg - 1], ctx, ideal.spec).is_unit


def saturation(ideal: Ideal, g: Polynomial) -> Ideal:
    """I : g^∞."""
    _check_context(g, ideal)
    if g.is_zero:
        raise DivisionByZero("saturation by the zero polynomial")
    z = fresh_name("z", ideal.context.names)
    ctx, gens = _extend(ideal, z)
    zg = Polynomial.variable(ctx, ideal.spec, z) * g.with_context(ctx)
    eliminated = elimination_ideal(Ideal([*gens, zg - 1], ctx, ideal.spec), ideal.context.names)
    return eliminated.with_context(ideal.context)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    if I.context != J.context:
        raise ContextMismatch(f"cannot intersect ideals over {I.context} and {J.context}")
    if I.spec != J.spec:
        raise MixedFieldError(f"cannot intersect ideals over {I.spec} and {J.spec}")
    w = fresh_name("w", I.context.names)
    ctx = VarContext((*I.context.names, w))
    wv = Polynomial.variable(ctx, I.spec, w)
    gens = [wv * g.with_context(ctx) for g in I.generators]
    gens += [(1 - wv) * g.with_context(ctx) for g in J.generators]
    return elimination_ideal(Ideal(gens, ctx, I.spec), I.context.names).with_context(I.context)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return Ideal([*I.generators, *J.generators], I.context, I.spec)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    return Ideal([f * g for f in I.generators for g in J.generators], I.context, I.spec)


def gcd_multivariate(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd, as p*q / lcm with <lcm> = <p> ∩ <q>."""
    if p.is_zero and q.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    if p.is_constant or q.is_constant:
        return Polynomial.constant(p.context, p.spec, 1)
    meet = ideal_intersection(Ideal([p]), Ideal([q])).groebner_basis()
    if len(meet) != 1:
        raise ArithmeticError(f"<{p}> ∩ <{q}> is not principal")
    quotient = exact_divide(p * q, meet[0])
    if quotient is None:
        raise ArithmeticError(f"lcm {meet[0]} does not divide {p} * {q}")
    return quotient.monic()


def _independent_sets(lms: Sequence[Monomial], arity: int) -> Iterator[Tuple[int, ...]]:
    supports = [frozenset(i for i, x in enumerate(lm) if x) for lm in lms]
    for size in range(arity, -1, -1):
        for subset in itertools.combinations(range(arity), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                yield subset


def dimension(ideal: Ideal) -> int:
    """
    -1 for the unit ideal, otherwise the size of a largest set of variables no
    leading monomial of the reduced basis is supported on.
    """
    if ideal.is_unit:
        return -1
    lms = [g.leading_monomial() for g in ideal.groebner_basis()]
    return len(next(_independent_sets(lms, ideal.context.arity)))


def dimension_by_elimination(ideal: Ideal) -> int:
    """The defining computation: the largest S with I ∩ k[S] = <0>."""
    if ideal.is_unit:
        return -1
    names = ideal.context.names
    for size in range(len(names), 0, -1):
        for subset in itertools.combinations(names, size):
            if elimination_ideal(ideal, subset).is_zero:
                return size
    return 0
