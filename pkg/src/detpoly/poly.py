#!/usr/bin/env python3

"""
Multivariate polynomials over a FieldSpec.

A Polynomial is an immutable, strictly decreasing (with respect to the
context's monomial order) tuple of (exponent vector, raw coefficient) pairs
with no zero coefficients; the zero polynomial is the empty tuple.
"""

import heapq
import operator
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .exceptions import (
    ArityMismatch,
    CharacteristicZeroError,
    ContextMismatch,
    DegreeMismatch,
    DegreeZero,
    DivisionByZero,
    MixedFieldError,
    UnknownVariable,
)
from .field import FieldElement, FieldSpec, Raw, Scalar, frobenius_root

Monomial = Tuple[int, ...]
SortKey = Tuple[int, ...]

# deg_v of the zero polynomial
NEG_INFINITY = float("-inf")

LEX = "lex"
GREVLEX = "grevlex"
BLOCK = "block"


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(operator.add, a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(operator.sub, a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def monomials_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """
    lex, grevlex, or a block order. A block order is an ordered tuple of
    variable blocks; monomials are compared block by block, each block by
    grevlex. `block(front, back)` is the usual two-block elimination order and
    `chain(...)` nests several of them.
    """

    kind: str
    blocks: Tuple[Tuple[str, ...], ...] = ()

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls(LEX)

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls(GREVLEX)

    @classmethod
    def block(cls, front: Iterable[str], back: Iterable[str]) -> "MonomialOrder":
        return cls(BLOCK, (tuple(front), tuple(back)))

    @classmethod
    def chain(cls, *blocks: Iterable[str]) -> "MonomialOrder":
        return cls(BLOCK, tuple(tuple(b) for b in blocks))

    @classmethod
    def from_name(cls, name: str) -> "MonomialOrder":
        if name == LEX:
            return cls.lex()
        if name == GREVLEX:
            return cls.grevlex()
        raise ValueError(f"unknown monomial order {name!r}; use 'lex' or 'grevlex'")

    def __str__(self) -> str:
        if self.kind != BLOCK:
            return self.kind
        return "block(" + " | ".join(",".join(b) for b in self.blocks) + ")"


GREVLEX_ORDER = MonomialOrder.grevlex()


def _grevlex_key(indices: Sequence[int]) -> Callable[[Monomial], SortKey]:
    rev = tuple(reversed(indices))

    def key(e: Monomial) -> SortKey:
        return (sum(e[i] for i in indices), *(-e[i] for i in rev))

    return key


@dataclass(frozen=True)
class VarContext:
    names: Tuple[str, ...]
    order: MonomialOrder = GREVLEX_ORDER

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"variable names must be distinct: {', '.join(self.names)}")
        if self.order.kind == BLOCK:
            flat = [v for b in self.order.blocks for v in b]
            if sorted(flat) != sorted(self.names):
                raise ValueError(f"block order {self.order} does not partition {', '.join(self.names)}")

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError as e:
            raise UnknownVariable(f"unknown variable {name!r}; declared: {', '.join(self.names)}") from e

    def __contains__(self, name: object) -> bool:
        return name in self._positions

    @cached_property
    def _positions(self) -> Dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    @cached_property
    def sort_key(self) -> Callable[[Monomial], SortKey]:
        """Flat integer key; a larger key is a larger monomial."""
        if self.order.kind == LEX:
            return lambda e: e
        if self.order.kind == GREVLEX:
            return _grevlex_key(range(self.arity))
        block_keys = [_grevlex_key([self.index(v) for v in b]) for b in self.order.blocks if b]

        def key(e: Monomial) -> SortKey:
            out: Tuple[int, ...] = ()
            for k in block_keys:
                out += k(e)
            return out

        return key

    def heap_key(self, e: Monomial) -> SortKey:
        """Key under which heapq pops the largest monomial first."""
        return tuple(-k for k in self.sort_key(e))

    def with_order(self, order: MonomialOrder) -> "VarContext":
        return VarContext(self.names, order)

    def restrict(self, keep: Iterable[str]) -> "VarContext":
        """Sub-context on `keep` (in this context's variable order) with the induced order."""
        keep_set = set(keep)
        for name in keep_set:
            self.index(name)
        names = tuple(n for n in self.names if n in keep_set)
        if self.order.kind != BLOCK:
            return VarContext(names, self.order)
        blocks = [tuple(v for v in b if v in keep_set) for b in self.order.blocks]
        blocks = [b for b in blocks if b]
        if len(blocks) <= 1:
            return VarContext(names, GREVLEX_ORDER)
        return VarContext(names, MonomialOrder(BLOCK, tuple(blocks)))

    def __str__(self) -> str:
        return f"[{', '.join(self.names)}; {self.order}]"


def fresh_name(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    if base not in taken:
        return base
    i = 0
    while f"{base}_{i}" in taken:
        i += 1
    return f"{base}_{i}"


def fresh_names(prefix: str, count: int, taken: Iterable[str]) -> Tuple[str, ...]:
    """prefix1..prefixN, adding underscores to the prefix until none collides."""
    taken = set(taken)
    while any(f"{prefix}{i}" in taken for i in range(1, count + 1)):
        prefix += "_"
    return tuple(f"{prefix}{i}" for i in range(1, count + 1))


Terms = Tuple[Tuple[Monomial, Raw], ...]
PolyLike = Union["Polynomial", Scalar]


class Polynomial:
    __slots__ = ("context", "spec", "_terms")

    context: VarContext
    spec: FieldSpec
    _terms: Terms

    def __init__(
        self,
        context: VarContext,
        spec: FieldSpec,
        terms: Union[Mapping[Monomial, Scalar], Iterable[Tuple[Monomial, Scalar]]] = (),
    ) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Monomial, Raw] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != context.arity or any(x < 0 for x in exps):
                raise ArityMismatch(f"exponent vector {exps} does not fit {context}")
            raw = spec.convert(c)
            acc[exps] = spec.add(acc[exps], raw) if exps in acc else raw
        self.context = context
        self.spec = spec
        self._terms = _sorted_terms(context, spec, acc)

    @classmethod
    def _make(cls, context: VarContext, spec: FieldSpec, terms: Terms) -> "Polynomial":
        self = object.__new__(cls)
        self.context = context
        self.spec = spec
        self._terms = terms
        return self

    @classmethod
    def _from_dict(cls, context: VarContext, spec: FieldSpec, acc: Mapping[Monomial, Raw]) -> "Polynomial":
        return cls._make(context, spec, _sorted_terms(context, spec, acc))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, context: VarContext, spec: FieldSpec) -> "Polynomial":
        return cls._make(context, spec, ())

    @classmethod
    def constant(cls, context: VarContext, spec: FieldSpec, c: Scalar) -> "Polynomial":
        raw = spec.convert(c)
        if spec.is_zero(raw):
            return cls.zero(context, spec)
        return cls._make(context, spec, (((0,) * context.arity, raw),))

    @classmethod
    def variable(cls, context: VarContext, spec: FieldSpec, name: str) -> "Polynomial":
        exps = [0] * context.arity
        exps[context.index(name)] = 1
        return cls._make(context, spec, ((tuple(exps), spec.one),))

    @classmethod
    def monomial(cls, context: VarContext, spec: FieldSpec, exps: Monomial, c: Scalar = 1) -> "Polynomial":
        return cls(context, spec, [(exps, c)])

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> List[Tuple[Monomial, FieldElement]]:
        return [(e, FieldElement(self.spec, c)) for e, c in self._terms]

    @property
    def raw_terms(self) -> Terms:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(self._terms[0][0]))

    def constant_value(self) -> FieldElement:
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        return FieldElement(self.spec, self._terms[0][1] if self._terms else self.spec.zero)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return self._terms[0][0]

    def leading_coefficient(self) -> Raw:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._terms[0][1]

    def degree(self, var: str) -> Union[int, float]:
        i = self.context.index(var)
        if not self._terms:
            return NEG_INFINITY
        return max(e[i] for e, _ in self._terms)

    def total_degree(self) -> Union[int, float]:
        if not self._terms:
            return NEG_INFINITY
        return max(sum(e) for e, _ in self._terms)

    def used_variables(self) -> Tuple[str, ...]:
        used = [False] * self.context.arity
        for e, _ in self._terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return tuple(n for n, u in zip(self.context.names, used) if u)

    def coefficients_in(self, var: str) -> Dict[int, "Polynomial"]:
        """Univariate view {k: c_k} with self = sum c_k * var^k; c_k free of var."""
        i = self.context.index(var)
        groups: Dict[int, Dict[Monomial, Raw]] = defaultdict(dict)
        for e, c in self._terms:
            groups[e[i]][e[:i] + (0,) + e[i + 1 :]] = c
        # terms stay sorted: removing var^k from monomials that all contain var^k keeps their order
        return {k: Polynomial._make(self.context, self.spec, tuple(g.items())) for k, g in groups.items()}

    def is_canonical(self) -> bool:
        key = self.context.sort_key
        for idx, (e, c) in enumerate(self._terms):
            if len(e) != self.context.arity or not self.spec.is_canonical(c) or self.spec.is_zero(c):
                return False
            if idx and not key(self._terms[idx - 1][0]) > key(e):
                return False
        return True

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other: PolyLike) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.context != self.context:
                raise ContextMismatch(f"polynomials live in different contexts: {self.context} vs {other.context}")
            if other.spec != self.spec:
                raise MixedFieldError(f"polynomials over different fields: {self.spec} vs {other.spec}")
            return other
        return Polynomial.constant(self.context, self.spec, other)

    def __add__(self, other: PolyLike) -> "Polynomial":
        other = self._coerce(other)
        spec = self.spec
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = spec.add(acc[e], c) if e in acc else c
        return Polynomial._from_dict(self.context, spec, acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        neg = self.spec.neg
        return Polynomial._make(self.context, self.spec, tuple((e, neg(c)) for e, c in self._terms))

    def __sub__(self, other: PolyLike) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: PolyLike) -> "Polynomial":
        return self._coerce(other) + (-self)

    def __mul__(self, other: PolyLike) -> "Polynomial":
        other = self._coerce(other)
        if not self._terms or not other._terms:
            return Polynomial.zero(self.context, self.spec)
        spec = self.spec
        add, mul = spec.add, spec.mul
        acc: Dict[Monomial, Raw] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = tuple(map(operator.add, e1, e2))
                c = mul(c1, c2)
                acc[e] = add(acc[e], c) if e in acc else c
        return Polynomial._from_dict(self.context, spec, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("polynomials only take nonnegative powers")
        result = Polynomial.constant(self.context, self.spec, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        raw = self.spec.convert(c)
        if self.spec.is_zero(raw):
            return Polynomial.zero(self.context, self.spec)
        mul = self.spec.mul
        return Polynomial._make(self.context, self.spec, tuple((e, mul(x, raw)) for e, x in self._terms))

    def mul_term(self, exps: Monomial, c: Raw) -> "Polynomial":
        mul = self.spec.mul
        # multiplying by a monomial preserves the order of the terms
        return Polynomial._make(
            self.context, self.spec, tuple((monomial_mul(e, exps), mul(x, c)) for e, x in self._terms)
        )

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(FieldElement(self.spec, self.spec.inv(self._terms[0][1])))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, FieldElement)):
                return self.is_constant and self.constant_value() == self.spec.element(other)
            return NotImplemented
        return self.context == other.context and self.spec == other.spec and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.context, self.spec, self._terms))

    # -- conversions ------------------------------------------------------

    def with_context(self, context: VarContext, rename: Optional[Mapping[str, str]] = None) -> "Polynomial":
        """
        The same polynomial read in `context`, variables matched by name after
        applying `rename`.
        """
        rename = rename or {}
        src = self.context.names
        used = set(self.used_variables())
        target = [context.index(rename.get(n, n)) if n in used else -1 for n in src]
        acc: Dict[Monomial, Raw] = {}
        for e, c in self._terms:
            new = [0] * context.arity
            for i, x in enumerate(e):
                if x:
                    new[target[i]] += x
            k = tuple(new)
            acc[k] = self.spec.add(acc[k], c) if k in acc else c
        return Polynomial._from_dict(context, self.spec, acc)

    def __str__(self) -> str:
        from .expr import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, {self.context}, {self.spec})"


def _sorted_terms(context: VarContext, spec: FieldSpec, acc: Mapping[Monomial, Raw]) -> Terms:
    key = context.sort_key
    return tuple(sorted(((e, c) for e, c in acc.items() if not spec.is_zero(c)), key=lambda t: key(t[0]), reverse=True))


def _check_same(p: Polynomial, q: Polynomial) -> None:
    if p.context != q.context:
        raise ContextMismatch(f"polynomials live in different contexts: {p.context} vs {q.context}")
    if p.spec != q.spec:
        raise MixedFieldError(f"polynomials over different fields: {p.spec} vs {q.spec}")


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    _check_same(p, q)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def exact_divide(p: Polynomial, q: Polynomial) -> Optional[Polynomial]:
    """
    a with a*q = p if q divides p in the full polynomial ring, else None.
    Repeated leading-term cancellation; the quotient is confirmed by a
    verification multiply.
    """
    _check_same(p, q)
    if q.is_zero:
        raise DivisionByZero("exact division by the zero polynomial")
    if p.is_zero:
        return p
    ctx, spec = p.context, p.spec
    heap_key = ctx.heap_key
    lm_q, lc_q = q._terms[0]
    tail = q._terms[1:]
    inv = spec.inv(lc_q)
    rem: Dict[Monomial, Raw] = dict(p._terms)
    heap = [(heap_key(e), e) for e in rem]
    heapq.heapify(heap)
    quotient: Dict[Monomial, Raw] = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = rem.pop(e, None)
        if c is None:
            continue
        if not monomial_divides(lm_q, e):
            return None
        m = monomial_quotient(e, lm_q)
        f = spec.mul(c, inv)
        quotient[m] = f
        for eq, cq in tail:
            t = monomial_mul(eq, m)
            delta = spec.mul(f, cq)
            if t in rem:
                v = spec.sub(rem[t], delta)
                if spec.is_zero(v):
                    del rem[t]
                else:
                    rem[t] = v
            else:
                rem[t] = spec.neg(delta)
                heapq.heappush(heap, (heap_key(t), t))
    a = Polynomial._from_dict(ctx, spec, quotient)
    if a * q != p:
        return None
    return a


def partial_derivative(p: Polynomial, v: str) -> Polynomial:
    i = p.context.index(v)
    spec = p.spec
    acc: Dict[Monomial, Raw] = {}
    for e, c in p._terms:
        if e[i]:
            # in characteristic chi the factor e[i] is taken mod chi
            acc[e[:i] + (e[i] - 1,) + e[i + 1 :]] = spec.mul(c, spec.from_int(e[i]))
    return Polynomial._from_dict(p.context, spec, acc)


def compose(p: Polynomial, fs: Sequence[Polynomial], target: Optional[VarContext] = None) -> Polynomial:
    """p(f_1, ..., f_m), Horner's scheme one variable at a time."""
    m = p.context.arity
    if len(fs) != m:
        raise ArityMismatch(f"{m} polynomials expected for {p.context}, got {len(fs)}")
    if fs:
        target = fs[0].context
        for f in fs[1:]:
            _check_same(fs[0], f)
        if fs[0].spec != p.spec:
            raise MixedFieldError(f"cannot substitute polynomials over {fs[0].spec} into one over {p.spec}")
    elif target is None:
        raise ArityMismatch("a target context is needed to compose a polynomial in no variables")
    spec = p.spec
    zero = Polynomial.zero(target, spec)
    powers: Dict[Tuple[int, int], Polynomial] = {}

    def power(i: int, k: int) -> Polynomial:
        if (i, k) not in powers:
            powers[i, k] = fs[i] ** k
        return powers[i, k]

    def horner(terms: List[Tuple[Monomial, Raw]], i: int) -> Polynomial:
        if i == m:
            total = spec.zero
            for _, c in terms:
                total = spec.add(total, c)
            return Polynomial.constant(target, spec, FieldElement(spec, total))
        groups: Dict[int, List[Tuple[Monomial, Raw]]] = defaultdict(list)
        for e, c in terms:
            groups[e[i]].append((e, c))
        degrees = sorted(groups, reverse=True)
        acc = zero
        prev = degrees[0]
        for d in degrees:
            acc = acc * power(i, prev - d) + horner(groups[d], i + 1)
            prev = d
        return acc * power(i, prev)

    if p.is_zero:
        return zero
    return horner(list(p._terms), 0)


def evaluate(p: Polynomial, point: Sequence[Scalar]) -> FieldElement:
    if len(point) != p.context.arity:
        raise ArityMismatch(f"point of length {len(point)} for {p.context}")
    spec = p.spec
    values = [spec.convert(a) for a in point]
    total = spec.zero
    for e, c in p._terms:
        term = c
        for a, x in zip(values, e):
            if x:
                term = spec.mul(term, spec.pow(a, x))
        total = spec.add(total, term)
    return FieldElement(spec, total)


def sylvester_matrix(p: Polynomial, q: Polynomial, v: str, d: int, e: int) -> List[List[Polynomial]]:
    zero = Polynomial.zero(p.context, p.spec)
    pc, qc = p.coefficients_in(v), q.coefficients_in(v)
    n = d + e
    rows: List[List[Polynomial]] = []
    for shift in range(e):
        row = [zero] * n
        for k in range(d + 1):
            row[shift + k] = pc.get(d - k, zero)
        rows.append(row)
    for shift in range(d):
        row = [zero] * n
        for k in range(e + 1):
            row[shift + k] = qc.get(e - k, zero)
        rows.append(row)
    return rows


def bareiss_determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant by fraction-free (Bareiss) elimination; every division is exact."""
    n = len(matrix)
    M = [list(row) for row in matrix]
    if n == 1:
        return M[0][0]
    sign = 1
    prev: Optional[Polynomial] = None
    for k in range(n - 1):
        if M[k][k].is_zero:
            for i in range(k + 1, n):
                if not M[i][k].is_zero:
                    M[i], M[k] = M[k], M[i]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(M[0][0].context, M[0][0].spec)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = M[k][k] * M[i][j] - M[i][k] * M[k][j]
                if prev is not None:
                    quotient = exact_divide(elt, prev)
                    if quotient is None:
                        raise ArithmeticError("Bareiss step is not exact")
                    elt = quotient
                M[i][j] = elt
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant_wrt(
    p: Polynomial, q: Polynomial, v: str, degrees: Optional[Tuple[int, int]] = None
) -> Polynomial:
    """
    res^(d,e)_v(p, q): determinant of the Sylvester matrix of p and q read as
    polynomials of formal degrees d and e in v.
    """
    _check_same(p, q)
    actual = (p.degree(v), q.degree(v))
    d, e = degrees if degrees is not None else actual
    if d < 1 or e < 1:
        raise DegreeZero(f"resultant needs positive degrees in {v}, got ({d}, {e})")
    if actual[0] > d or actual[1] > e:
        raise DegreeMismatch(f"declared degrees ({d}, {e}) are below the actual degrees {actual}")
    return bareiss_determinant(sylvester_matrix(p, q, v, int(d), int(e)))


def chi_power_decompose(q: Polynomial, v: str, chi: int) -> Optional[Polynomial]:
    """p with q = p(..., v^chi, ...) if every exponent of v in q is divisible by chi."""
    if chi <= 0:
        raise ValueError("chi must be positive")
    i = q.context.index(v)
    acc: Dict[Monomial, Raw] = {}
    for e, c in q._terms:
        if e[i] % chi:
            return None
        acc[e[:i] + (e[i] // chi,) + e[i + 1 :]] = c
    return Polynomial._from_dict(q.context, q.spec, acc)


def chi_root(g: Polynomial, chi: int) -> Optional[Polynomial]:
    """h with h^chi = g, if it exists."""
    spec = g.spec
    if spec.characteristic == 0:
        raise CharacteristicZeroError("chi-th roots of polynomials need positive characteristic")
    if chi != spec.characteristic:
        raise ValueError(f"chi = {chi} differs from the characteristic {spec.characteristic}")
    acc: Dict[Monomial, Raw] = {}
    for e, c in g._terms:
        if any(x % chi for x in e):
            return None
        acc[tuple(x // chi for x in e)] = frobenius_root(FieldElement(spec, c), 1).value
    h = Polynomial._from_dict(g.context, spec, acc)
    if h**chi != g:
        return None
    return h


def substitute_linear(p: Polynomial, matrix: Sequence[Sequence[Scalar]]) -> Polynomial:
    """p(A t): variable j is replaced by sum_i A[j][i] * t_i."""
    ctx, spec = p.context, p.spec
    images = []
    for row in matrix:
        acc: Dict[Monomial, Raw] = {}
        for i, a in enumerate(row):
            raw = spec.convert(a)
            if not spec.is_zero(raw):
                acc[tuple(1 if k == i else 0 for k in range(ctx.arity))] = raw
        images.append(Polynomial._from_dict(ctx, spec, acc))
    return compose(p, images)
