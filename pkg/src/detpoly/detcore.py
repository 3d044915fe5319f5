#!/usr/bin/env python3

"""
Decision procedures for a polynomial map f = (f1, ..., fm) in k[t1, ..., tn]
and a polynomial g in the same ring: determinedness over the algebraic closure,
membership of g in k[f] and in k(f), the characteristic-p variant through
chi-th powers, almost-surjectivity of f and recovery of the outer function.

Every positive answer comes with a certificate whose `verify(f, g)` re-checks
it by exact polynomial identities.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .exceptions import (
    ArityError,
    CharacteristicZeroError,
    ContextMismatch,
    HypothesisNotVerified,
    MixedFieldError,
    NotDetermined,
    NotPrincipal,
    PreconditionViolated,
    TranscendentalOverImage,
)
from .field import FieldElement, FieldSpec, Raw, Scalar, frobenius_root
from .ideal import (
    Ideal,
    dimension,
    dimension_by_elimination,
    elimination_ideal,
    gcd_multivariate,
    ideal_product,
    ideal_sum,
    normal_form,
    radical_membership,
)
from .poly import (
    GREVLEX_ORDER,
    MonomialOrder,
    Polynomial,
    VarContext,
    compose,
    evaluate,
    exact_divide,
    fresh_names,
    partial_derivative,
    substitute_linear,
)
from .utils import ceil_log

DEFAULT_POWER_CAP: int = 8
# nu cap for radchi_membership when no closure certificate is available
FALLBACK_NU_CAP: int = 4
# extra attempts of the extension-locus computation after linear changes of t
LINEAR_ATTEMPTS: int = 3
SUBSTITUTION_SEED: int = 1729

YES = "Yes"
NO = "No"
UNKNOWN = "Unknown"


class PolyMap:
    def __init__(self, components: Sequence[Polynomial], image_order: MonomialOrder = GREVLEX_ORDER) -> None:
        if not components:
            raise ArityError("a polynomial map needs at least one component")
        context, spec = components[0].context, components[0].spec
        if context.arity == 0:
            raise ArityError("a polynomial map needs at least one variable")
        for c in components[1:]:
            if c.context != context:
                raise ContextMismatch(f"component {c} lives in {c.context}, not {context}")
            if c.spec != spec:
                raise MixedFieldError(f"component {c} is over {c.spec}, not {spec}")
        self.components: Tuple[Polynomial, ...] = tuple(components)
        self.context = context
        self.spec = spec
        self.image_order = image_order

    @property
    def n(self) -> int:
        return self.context.arity

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def characteristic(self) -> int:
        return self.spec.characteristic

    def image_context(self) -> VarContext:
        """x1..xm, the coordinates of the target space."""
        return VarContext(tuple(f"x{i}" for i in range(1, self.m + 1)), self.image_order)

    def compose(self, p: Polynomial) -> Polynomial:
        return compose(p, self.components)

    def __call__(self, point: Sequence[Scalar]) -> Tuple[FieldElement, ...]:
        return tuple(evaluate(c, point) for c in self.components)

    def check(self, g: Polynomial) -> None:
        if g.context != self.context:
            raise ContextMismatch(f"{g} lives in {g.context}, the map in {self.context}")
        if g.spec != self.spec:
            raise MixedFieldError(f"{g} is over {g.spec}, the map over {self.spec}")

    @cached_property
    def closure(self) -> Ideal:
        return range_closure(self)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


# -- certificates ------------------------------------------------------------


@dataclass(frozen=True)
class InRing:
    """g = p(f)."""

    p: Polynomial
    kind = "InRing"

    def verify(self, f: PolyMap, g: Polynomial) -> bool:
        return f.compose(self.p) == g

    def to_dict(self) -> Dict[str, object]:
        return {"kind": self.kind, "p": str(self.p)}


@dataclass(frozen=True)
class RadChi:
    """g^(chi^nu) = p(f)."""

    p: Polynomial
    nu: int
    kind = "RadChi"

    def verify(self, f: PolyMap, g: Polynomial) -> bool:
        chi = f.characteristic
        if chi == 0:
            return self.nu == 0 and f.compose(self.p) == g
        return f.compose(self.p) == g ** (chi**self.nu)

    def to_dict(self) -> Dict[str, object]:
        return {"kind": self.kind, "p": str(self.p), "nu": self.nu}


@dataclass(frozen=True)
class RationalOnly:
    """g * s(f) = r(f) with s(f) != 0."""

    r: Polynomial
    s: Polynomial
    kind = "RationalOnly"

    def verify(self, f: PolyMap, g: Polynomial) -> bool:
        sf = f.compose(self.s)
        return not sf.is_zero and g * sf == f.compose(self.r)

    def to_dict(self) -> Dict[str, object]:
        return {"kind": self.kind, "r": str(self.r), "s": str(self.s)}


@dataclass(frozen=True)
class CounterexampleIdeal:
    """The double-point ideal of (f, g) is proper: some a, b over the closure have f(a) = f(b), g(a) != g(b)."""

    ideal: Ideal
    kind = "CounterexampleIdeal"

    def verify(self, f: PolyMap, g: Polynomial) -> bool:
        return self.ideal.generators == double_point_ideal(f, g).generators and not self.ideal.is_unit

    def to_dict(self) -> Dict[str, object]:
        return {"kind": self.kind, "ideal": [str(p) for p in self.ideal.generators]}


@dataclass(frozen=True)
class UnitDoublePointIdeal:
    """The double-point ideal of (f, g) is the unit ideal."""

    ideal: Ideal
    kind = "UnitDoublePointIdeal"

    def verify(self, f: PolyMap, g: Polynomial) -> bool:
        return self.ideal.generators == double_point_ideal(f, g).generators and self.ideal.is_unit

    def to_dict(self) -> Dict[str, object]:
        return {"kind": self.kind, "ideal": [str(p) for p in self.ideal.generators]}


Certificate = Union[InRing, RadChi, RationalOnly, CounterexampleIdeal, UnitDoublePointIdeal]


@dataclass(frozen=True)
class DeterminednessResult:
    determined: bool
    certificate: Certificate

    def verify(self, f: PolyMap, g: Polynomial) -> bool:
        return self.certificate.verify(f, g)


@dataclass(frozen=True)
class ClosureCertificate:
    """q = Irr of the closure of {(f(a), g(a))}, monic; d = deg of q in the last variable."""

    q: Polynomial
    d: int
    m: int

    @property
    def last(self) -> str:
        return self.q.context.names[self.m]


@dataclass(frozen=True)
class AlmostSurjWitness:
    """p(f) divides q(f) while p does not divide q."""

    p: Polynomial
    q: Polynomial

    def verify(self, f: PolyMap) -> bool:
        return divides_after_composition(self.p, self.q, f) and exact_divide(self.q, self.p) is None

    def verify_separator(self, f: PolyMap, b: Polynomial) -> bool:
        """b * p1(f) = q1(f)^2 with p1, q1 the coprime parts of p, q."""
        if not self.verify(f) or f.compose(self.p).is_zero:
            return False
        d = gcd_multivariate(self.p, self.q)
        p1, q1 = exact_divide(self.p, d), exact_divide(self.q, d)
        if p1 is None or q1 is None:
            return False
        q1f = f.compose(q1)
        return b * f.compose(p1) == q1f * q1f

    def to_dict(self) -> Dict[str, object]:
        return {"p": str(self.p), "q": str(self.q)}


@dataclass(frozen=True)
class Verdict:
    value: str
    reason: str
    witness: Optional[AlmostSurjWitness] = None
    locus: Optional[Ideal] = None

    def verify(self, f: PolyMap) -> bool:
        if self.value == NO:
            return self.witness is not None and self.witness.verify(f)
        if self.value == YES:
            return self.locus is not None and dimension_by_elimination(self.locus) <= f.m - 2
        return True

    def to_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {"value": self.value, "reason": self.reason}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.locus is not None:
            out["locus"] = [str(p) for p in self.locus.generators]
        return out


@dataclass(frozen=True)
class Decomposition:
    """h(b) = s^(chi^nu)(p(b)) on the range of f, with s the chi-th root (identity in characteristic 0)."""

    p: Polynomial
    nu: int
    characteristic: int

    def outer(self, point: Sequence[Scalar]) -> FieldElement:
        value = evaluate(self.p, point)
        if self.characteristic == 0:
            return value
        return frobenius_root(value, self.nu)

    def verify(self, f: PolyMap, g: Polynomial) -> bool:
        exponent = self.characteristic**self.nu if self.characteristic else 1
        return f.compose(self.p) == g**exponent

    def to_dict(self) -> Dict[str, object]:
        return {"p": str(self.p), "nu": self.nu, "characteristic": self.characteristic}


# -- graph ideals and closures -------------------------------------------------


def _graph_names(f: PolyMap, count: int) -> Tuple[str, ...]:
    return fresh_names("y", count, f.context.names)


def _graph_generators(ctx: VarContext, ys: Sequence[str], polys: Sequence[Polynomial]) -> List[Polynomial]:
    spec = polys[0].spec
    return [Polynomial.variable(ctx, spec, y) - p.with_context(ctx) for y, p in zip(ys, polys)]


def graph_ideal(f: PolyMap, g: Optional[Polynomial] = None) -> Ideal:
    """<y_i - f_i> (and y_{m+1} - g) in k[t, y] under the order eliminating t."""
    polys = list(f.components)
    if g is not None:
        f.check(g)
        polys.append(g)
    ys = _graph_names(f, len(polys))
    ctx = VarContext((*f.context.names, *ys), MonomialOrder.block(f.context.names, ys))
    return Ideal(_graph_generators(ctx, ys, polys), ctx, f.spec)


def _to_image(ideal: Ideal, target: VarContext) -> Ideal:
    """Move an ideal over the y variables to `target`, matching variables by position."""
    rename = dict(zip(ideal.context.names, target.names))
    return Ideal([p.with_context(target, rename) for p in ideal.groebner_basis()], target, ideal.spec)


def range_closure(f: PolyMap) -> Ideal:
    """The ideal of the Zariski closure of range(f), over x1..xm."""
    graph = graph_ideal(f)
    ys = graph.context.names[f.n :]
    return _to_image(elimination_ideal(graph, ys), f.image_context())


def _rank(rows: Sequence[Sequence[Raw]], spec: FieldSpec) -> int:
    M = [list(r) for r in rows]
    rank = 0
    cols = len(M[0]) if M else 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(M)) if not spec.is_zero(M[i][col])), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        inv = spec.inv(M[rank][col])
        for i in range(rank + 1, len(M)):
            factor = spec.mul(M[i][col], inv)
            if not spec.is_zero(factor):
                M[i] = [spec.sub(a, spec.mul(factor, b)) for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def _jacobian_has_full_rank(f: PolyMap, attempts: int = 3) -> bool:
    """Rank m of the Jacobian at some integer point; only meaningful in characteristic 0."""
    rows = [[partial_derivative(c, t) for t in f.context.names] for c in f.components]
    rng = random.Random(SUBSTITUTION_SEED + f.n)
    for _ in range(attempts):
        point = [rng.randint(-9, 9) for _ in range(f.n)]
        values = [[evaluate(d, point).value for d in row] for row in rows]
        if _rank(values, f.spec) == f.m:
            return True
    return False


def algebraically_independent(f: PolyMap) -> bool:
    if f.m > f.n:
        return False
    if f.characteristic == 0 and _jacobian_has_full_rank(f):
        return True
    return f.closure.is_zero


def _closure_context(f: PolyMap) -> VarContext:
    names = tuple(f"x{i}" for i in range(1, f.m + 2))
    return VarContext(names, MonomialOrder.block(names[f.m :], names[: f.m]))


def irr_of_closure(f: PolyMap, g: Polynomial) -> ClosureCertificate:
    """
    The monic generator q of the ideal of the closure of {(f(a), g(a))} in
    k[x1..x_{m+1}], under the order that ranks x_{m+1} above x1..xm.
    """
    f.check(g)
    if not algebraically_independent(f):
        raise PreconditionViolated(f"the components of {f} are algebraically dependent")
    ts = f.context.names
    ys = _graph_names(f, f.m + 1)
    ctx = VarContext((*ts, *ys), MonomialOrder.chain(ts, ys[f.m :], ys[: f.m]))
    basis = Ideal(_graph_generators(ctx, ys, [*f.components, g]), ctx, f.spec).groebner_basis()
    ys_set = set(ys)
    eliminated = [p for p in basis if ys_set.issuperset(p.used_variables())]
    if not eliminated:
        raise TranscendentalOverImage(f"{g} is transcendental over k({', '.join(map(str, f.components))})")
    if len(eliminated) > 1:
        raise NotPrincipal(f"the closure ideal has {len(eliminated)} reduced generators")
    target = _closure_context(f)
    q = eliminated[0].with_context(target, dict(zip(ys, target.names)))
    d = q.degree(target.names[f.m])
    if d < 1:
        raise NotPrincipal(f"{q} does not involve {target.names[f.m]}")
    logging.debug(f"Irr of the closure for g = {g}: {q} (degree {d})")
    return ClosureCertificate(q, int(d), f.m)


def rational_membership(f: PolyMap, g: Polynomial) -> Optional[Tuple[Polynomial, Polynomial]]:
    """(r, s) with g * s(f) = r(f), when g has degree 1 over k(f)."""
    cert = irr_of_closure(f, g)
    if cert.d != 1:
        return None
    coeffs = cert.q.coefficients_in(cert.last)
    image = f.image_context()
    s = coeffs[1].with_context(image)
    r = -coeffs[0].with_context(image) if 0 in coeffs else Polynomial.zero(image, f.spec)
    if g * f.compose(s) != f.compose(r):
        raise ArithmeticError(f"rational certificate ({r}, {s}) fails for {g}")
    return r, s


def subalgebra_membership(f: PolyMap, g: Polynomial) -> Optional[Polynomial]:
    """p with p(f) = g, if g ∈ k[f]."""
    graph = graph_ideal(f)
    f.check(g)
    remainder = normal_form(g.with_context(graph.context), graph)
    ys = graph.context.names[f.n :]
    if not set(ys).issuperset(remainder.used_variables()):
        return None
    image = f.image_context()
    p = remainder.with_context(image, dict(zip(ys, image.names)))
    if f.compose(p) != g:
        raise ArithmeticError(f"{p} composed with {f} is not {g}")
    return p


def default_nu_cap(f: PolyMap, g: Polynomial) -> Optional[int]:
    """ceil(log_chi d) + 1 from the closure certificate; None when g is transcendental over k(f)."""
    chi = f.characteristic
    if not algebraically_independent(f):
        return FALLBACK_NU_CAP
    try:
        cert = irr_of_closure(f, g)
    except TranscendentalOverImage:
        return None
    except NotPrincipal:
        return FALLBACK_NU_CAP
    return ceil_log(cert.d, chi) + 1


def radchi_membership(f: PolyMap, g: Polynomial, nu_cap: Optional[int] = None) -> Optional[Tuple[Polynomial, int]]:
    """The smallest nu <= nu_cap with g^(chi^nu) ∈ k[f], and p with p(f) = g^(chi^nu)."""
    chi = f.characteristic
    if chi == 0:
        raise CharacteristicZeroError("rad_chi membership needs positive characteristic")
    f.check(g)
    if nu_cap is None:
        nu_cap = default_nu_cap(f, g)
        if nu_cap is None:
            return None
    h = g
    for nu in range(nu_cap + 1):
        if nu:
            h = h**chi
        p = subalgebra_membership(f, h)
        if p is not None:
            return p, nu
    return None


# -- determinedness ------------------------------------------------------------


def double_point_ideal(f: PolyMap, g: Polynomial) -> Ideal:
    """<f_i(s) - f_i(u)> + <z * (g(s) - g(u)) - 1> in k[s, u, z]."""
    f.check(g)
    ts = f.context.names
    ss = fresh_names("s", f.n, ())
    us = fresh_names("u", f.n, ss)
    ctx = VarContext((*ss, *us, "z"))
    to_s, to_u = dict(zip(ts, ss)), dict(zip(ts, us))

    def diff(p: Polynomial) -> Polynomial:
        return p.with_context(ctx, to_s) - p.with_context(ctx, to_u)

    z = Polynomial.variable(ctx, f.spec, "z")
    gens = [diff(c) for c in f.components]
    gens.append(z * diff(g) - 1)
    return Ideal(gens, ctx, f.spec)


def is_determined(f: PolyMap, g: Polynomial) -> DeterminednessResult:
    """Determinedness over the algebraic closure: no a, b with f(a) = f(b) and g(a) != g(b)."""
    ideal = double_point_ideal(f, g)
    if ideal.is_unit:
        return DeterminednessResult(True, UnitDoublePointIdeal(ideal))
    return DeterminednessResult(False, CounterexampleIdeal(ideal))


def determined_theorem_route(f: PolyMap, g: Polynomial) -> DeterminednessResult:
    """
    Decide determinedness through membership, valid for algebraically
    independent, almost surjective maps: g is determined iff g ∈ k[f]
    (characteristic 0), iff some g^(chi^nu) ∈ k[f] (characteristic chi).
    """
    f.check(g)
    if not algebraically_independent(f):
        raise HypothesisNotVerified(f"the components of {f} are algebraically dependent")
    verdict = almost_surjectivity(f)
    if verdict.value != YES:
        raise HypothesisNotVerified(f"almost-surjectivity of {f} is {verdict.value}")
    chi = f.characteristic
    if chi == 0:
        p = subalgebra_membership(f, g)
        if p is not None:
            return DeterminednessResult(True, InRing(p))
        return DeterminednessResult(False, CounterexampleIdeal(double_point_ideal(f, g)))

    h, nu = g, 0
    try:
        cert = irr_of_closure(f, h)
        while partial_derivative(cert.q, cert.last).is_zero:
            h, nu = h**chi, nu + 1
            logging.debug(f"Inseparable closure polynomial {cert.q}; moving to g^({chi}^{nu})")
            cert = irr_of_closure(f, h)
    except TranscendentalOverImage:
        return DeterminednessResult(False, CounterexampleIdeal(double_point_ideal(f, g)))
    if cert.d == 1 and (found := radchi_membership(f, g, nu_cap=nu)) is not None:
        return DeterminednessResult(True, RadChi(*found))
    return DeterminednessResult(False, CounterexampleIdeal(double_point_ideal(f, g)))


# -- almost surjectivity -------------------------------------------------------


def divides_after_composition(p: Polynomial, q: Polynomial, f: PolyMap) -> bool:
    """p(f) | q(f); 0 | 0 counts as true."""
    pf, qf = f.compose(p), f.compose(q)
    if pf.is_zero:
        return qf.is_zero
    return exact_divide(qf, pf) is not None


def non_almost_surjective_witness(f: PolyMap, p: Polynomial, q: Polynomial, check: bool = True) -> Polynomial:
    """
    b = q1(f)^2 / p1(f) with p1, q1 the parts of p, q prime to each other: a
    polynomial that is determined by f but does not lie in k[f].
    """
    pf = f.compose(p)
    if pf.is_zero:
        raise PreconditionViolated(f"{p} vanishes on the range of {f}")
    if not divides_after_composition(p, q, f):
        raise PreconditionViolated(f"{p} composed with f does not divide {q} composed with f")
    if exact_divide(q, p) is not None:
        raise PreconditionViolated(f"{p} divides {q}")
    d = gcd_multivariate(p, q)
    p1, q1 = exact_divide(p, d), exact_divide(q, d)
    assert p1 is not None and q1 is not None
    q1f = f.compose(q1)
    a = exact_divide(q1f, f.compose(p1))
    if a is None:
        raise PreconditionViolated(f"{p1} composed with f does not divide {q1} composed with f")
    b = q1f * a
    if check and (not is_determined(f, b).determined or subalgebra_membership(f, b) is not None):
        raise PreconditionViolated(f"{b} does not separate determinedness from membership in k[f]")
    return b


def _linear_substitutions(f: PolyMap, count: int) -> List[List[List[Raw]]]:
    spec, n = f.spec, f.n
    rng = random.Random(SUBSTITUTION_SEED)
    out: List[List[List[Raw]]] = []
    for _ in range(count * 20):
        if len(out) == count:
            break
        if spec.is_rationals:
            matrix = [[spec.from_int(rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        else:
            matrix = [[spec.from_int(rng.randrange(spec.modulus)) for _ in range(n)] for _ in range(n)]
        if _rank(matrix, spec) == n:
            out.append(matrix)
    return out


def _extension_locus(f: PolyMap, components: Sequence[Polynomial]) -> Ideal:
    """
    An ideal over x1..xm whose zero set holds every point of the closure of the
    range that fails to lift, found level by level with the extension theorem.
    """
    spec = f.spec
    ts = f.context.names
    ys = _graph_names(f, f.m)
    ctx = VarContext((*ts, *ys), MonomialOrder.chain(*((t,) for t in ts), ys))
    basis = Ideal(_graph_generators(ctx, ys, components), ctx, spec).groebner_basis()
    image = f.image_context()
    locus = Ideal([Polynomial.constant(image, spec, 1)], image, spec)
    for j, t in enumerate(ts):
        earlier = set(ts[:j])
        level = [g for g in basis if not earlier.intersection(g.used_variables())]
        involved = [g for g in level if t in g.used_variables()]
        if not involved:
            continue
        leading = []
        for g in involved:
            coeffs = g.coefficients_in(t)
            leading.append(coeffs[max(coeffs)])
        if any(c.is_constant for c in leading):
            continue
        below = [g for g in level if t not in g.used_variables()]
        bad = elimination_ideal(Ideal([*below, *leading], ctx, spec), ys)
        logging.debug(f"Partial solutions may fail to lift through {t} on <{', '.join(map(str, bad.generators))}>")
        locus = ideal_product(locus, _to_image(bad, image))
    return locus


def almost_surjectivity(f: PolyMap, power_cap: int = DEFAULT_POWER_CAP, attempts: int = LINEAR_ATTEMPTS) -> Verdict:
    """
    Yes, No or Unknown for: the closure of k^m minus range(f) has dimension at
    most m - 2. Yes carries an ideal whose zero set contains every point outside
    the range; No carries a pair (p, q) with p(f) | q(f) but p ∤ q.
    """
    closure = f.closure
    if not closure.is_zero:
        u = closure.groebner_basis()[0]
        return Verdict(NO, "not-dominant", AlmostSurjWitness(u * u, u))

    locus = _extension_locus(f, f.components)
    bound = f.m - 2
    for matrix in [None, *_linear_substitutions(f, attempts)]:
        if matrix is not None:
            moved = [substitute_linear(c, matrix) for c in f.components]
            locus = ideal_sum(locus, _extension_locus(f, moved))
        if dimension(locus) <= bound:
            return Verdict(YES, "extension-locus", locus=locus)
    logging.debug(f"Extension locus of {f} has dimension {dimension(locus)}; searching for a witness")

    image = f.image_context()
    candidates = [p for p in locus.groebner_basis() if not p.is_constant]
    if len(candidates) > 1:
        common = candidates[0]
        for p in candidates[1:]:
            common = gcd_multivariate(common, p)
        if not common.is_constant:
            candidates.append(common)
    graph = graph_ideal(f)
    ys = graph.context.names[f.n :]
    for p in candidates:
        pf = f.compose(p)
        if pf.is_zero:
            continue
        fibre = Ideal([*graph.generators, pf.with_context(graph.context)], graph.context, f.spec)
        for q in _to_image(elimination_ideal(fibre, ys), image).groebner_basis():
            if radical_membership(q, Ideal([p], image, f.spec)):
                continue
            qf = f.compose(q)
            power = qf
            for nu in range(1, power_cap + 1):
                if exact_divide(power, pf) is not None:
                    return Verdict(NO, "witness", AlmostSurjWitness(p, q**nu), locus)
                power = power * qf
    return Verdict(UNKNOWN, "undecided", locus=locus)


def decompose(f: PolyMap, g: Polynomial, assume_almost_surjective: bool = False) -> Decomposition:
    """p (and nu) with p(f) = g^(chi^nu), describing the outer function h with g = h(f)."""
    if not assume_almost_surjective:
        verdict = almost_surjectivity(f)
        if verdict.value != YES:
            raise HypothesisNotVerified(f"almost-surjectivity of {f} is {verdict.value}")
    if not is_determined(f, g).determined:
        raise NotDetermined(f"{g} is not determined by {f}")
    chi = f.characteristic
    if chi == 0:
        p = subalgebra_membership(f, g)
        if p is None:
            raise HypothesisNotVerified(f"{g} is determined by {f} but not in k[f]; f is not almost surjective")
        return Decomposition(p, 0, 0)
    found = radchi_membership(f, g)
    if found is None:
        raise HypothesisNotVerified(f"no power g^({chi}^nu) of {g} lies in k[f]; f is not almost surjective")
    return Decomposition(found[0], found[1], chi)


def search_separating_pair(
    f: PolyMap, g: Polynomial, radius: int = 2
) -> Optional[Tuple[Tuple[FieldElement, ...], Tuple[FieldElement, ...]]]:
    """
    Points a, b with f(a) = f(b) and g(a) != g(b): all of F_p^n, or the integer
    box [-radius, radius]^n over Q.
    """
    f.check(g)
    spec = f.spec
    values = list(range(-radius, radius + 1)) if spec.is_rationals else list(range(spec.modulus))
    seen: Dict[Tuple[FieldElement, ...], Tuple[Tuple[FieldElement, ...], FieldElement]] = {}
    for raw in itertools.product(values, repeat=f.n):
        point = tuple(spec.element(v) for v in raw)
        image = f(point)
        value = evaluate(g, point)
        if image in seen:
            other, other_value = seen[image]
            if other_value != value:
                return other, point
        else:
            seen[image] = (point, value)
    return None

