#!/usr/bin/env python3

import random
import unittest

from detpoly.exceptions import BothZero, ContextMismatch, DivisionByZero, ResourceExhausted
from detpoly.ideal import (
    Ideal,
    dimension,
    dimension_by_elimination,
    elimination_ideal,
    gcd_multivariate,
    groebner,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    normal_form,
    radical_membership,
    saturation,
    step_budget,
)
from detpoly.poly import MonomialOrder, Polynomial, VarContext, exact_divide, monomial_divides

from .base_tmpl import GF3, QQ, BaseTmpl

try:
    import sympy
except ImportError:  # pragma: no cover
    sympy = None


class TestGroebner(BaseTmpl):
    def test_lex_basis(self):
        ctx = self.ctx("t1,t2,y1,y2", MonomialOrder.lex())
        ideal = Ideal([self.poly("t1 - y1", ctx), self.poly("t1*t2 - y2", ctx)])
        self.assertSamePolys(groebner(ideal), ["t1 - y1", "t2*y1 - y2"], ctx)

    def test_trivial_ideals(self):
        ctx = self.ctx("x")
        zero = Ideal([], ctx, QQ)
        self.assertEqual(groebner(zero), [])
        self.assertTrue(zero.is_zero)
        self.assertFalse(zero.is_unit)
        unit = Ideal([self.poly("x", ctx), self.poly("x + 1", ctx)])
        self.assertSamePolys(groebner(unit), ["1"], ctx)
        self.assertTrue(unit.is_unit)
        self.assertRaises(ValueError, Ideal, [])

    def test_reduced_and_idempotent(self):
        ctx = self.ctx("x1,x2,x3")
        ideal = Ideal([self.poly(t, ctx) for t in ("x1^2 - x2", "x1*x2 - x3", "x2^2 - x1*x3")])
        basis = ideal.groebner_basis()
        for i, g in enumerate(basis):
            self.assertEqual(g.leading_coefficient(), 1)
            for j, h in enumerate(basis):
                if j != i:
                    self.assertFalse(any(monomial_divides(h.leading_monomial(), e) for e, _ in g.raw_terms))
        self.assertEqual(Ideal(basis).groebner_basis(), basis)
        for gen in ideal.generators:
            self.assertIn(gen, ideal)

    def test_membership_of_combinations(self):
        rng = random.Random(21)
        ctx = self.ctx("x1,x2,x3")
        for spec in (QQ, GF3):
            gens = [self.poly("x1^2 - x2*x3", ctx, spec), self.poly("x2^2 - x1 + 1", ctx, spec)]
            ideal = Ideal(gens)
            for _ in range(10):
                a, b = self.random_poly(rng, ctx, spec), self.random_poly(rng, ctx, spec)
                self.assertTrue(ideal.contains(a * gens[0] + b * gens[1]))
            self.assertFalse(ideal.contains(self.poly("x3", ctx, spec)))

    def test_normal_form(self):
        lex = self.ctx("t1,t2,y1,y2", MonomialOrder.lex())
        ideal = Ideal([self.poly("t1 - y1", lex), self.poly("t1*t2 - y2", lex)])
        self.assertEqual(normal_form(self.poly("t1*t2^2", lex), ideal), self.poly("t2*y2", lex))
        self.assertTrue(normal_form(self.poly("t1*t2 - y2", lex), ideal).is_zero)

        block = VarContext(("t1", "t2", "y1", "y2"), MonomialOrder.block(("t1", "t2"), ("y1", "y2")))
        newton = Ideal([self.poly("t1 + t2 - y1", block), self.poly("t1*t2 - y2", block)])
        self.assertEqual(normal_form(self.poly("t1^2 + t2^2", block), newton), self.poly("y1^2 - 2*y2", block))
        self.assertRaises(ContextMismatch, normal_form, self.poly("t1", lex), newton)

    def test_step_budget(self):
        ctx = self.ctx("x1,x2")
        with step_budget(0):
            ideal = Ideal([self.poly("x1^2 - 1", ctx), self.poly("x1^2 - x2", ctx)])
            self.assertRaises(ResourceExhausted, ideal.groebner_basis)
        with step_budget(1000) as counter:
            self.assertSamePolys(groebner(ideal), ["x1^2 - 1", "x2 - 1"], ctx)
        self.assertGreater(counter.used, 0)

    @unittest.skipUnless(sympy is not None, "sympy is not installed")
    def test_against_sympy(self):
        ctx = self.ctx("x1,x2,x3")
        symbols = sympy.symbols("x1 x2 x3")
        rng = random.Random(4)
        for _ in range(10):
            gens = [self.random_poly(rng, ctx, QQ) for _ in range(2)]
            gens = [g for g in gens if not g.is_zero]
            if not gens:
                continue
            ours = Ideal(gens)
            theirs = sympy.groebner([sympy.sympify(str(g).replace("^", "**")) for g in gens], *symbols, order="grevlex")
            converted = [self.poly(str(e).replace("**", "^"), ctx) for e in theirs.exprs]
            self.assertEqual(len(converted), len(ours.groebner_basis()))
            self.assertEqual(Ideal(converted), ours)


class TestIdealTools(BaseTmpl):
    def setUp(self):
        self.x = self.ctx("x1,x2")
        return super().setUp()

    def test_elimination(self):
        ctx = self.ctx("t1,y1,y2")
        ideal = Ideal([self.poly("y1 - t1^2", ctx), self.poly("y2 - t1^3", ctx)])
        eliminated = elimination_ideal(ideal, ["y1", "y2"])
        self.assertEqual(eliminated.context, VarContext(("y1", "y2")))
        self.assertSamePolys(eliminated.groebner_basis(), ["y1^3 - y2^2"], eliminated.context)
        self.assertIs(elimination_ideal(ideal, ["t1", "y1", "y2"]), ideal)

        ctx = self.ctx("t1,t2,y1,y2")
        graph = Ideal([self.poly("y1 - t1", ctx), self.poly("y2 - t1*t2", ctx)])
        self.assertTrue(elimination_ideal(graph, ["y1", "y2"]).is_zero)

    def test_radical_membership(self):
        ideal = Ideal([self.poly("x1^2", self.x)])
        self.assertTrue(radical_membership(self.poly("x1", self.x), ideal))
        self.assertTrue(radical_membership(self.poly("x1^3*x2", self.x), ideal))
        self.assertFalse(radical_membership(self.poly("x2", self.x), ideal))
        self.assertTrue(radical_membership(Polynomial.zero(self.x, QQ), ideal))

    def test_radical_membership_agrees_with_power_search(self):
        # I = <a^2, b^2, a*b*h> has radical <a, b>, a point, and contains <a, b>^3
        rng = random.Random(11)
        outcomes = set()
        for spec in (GF3, QQ):
            for _ in range(20):
                c, c1, c2 = (rng.randint(-2, 2) for _ in range(3))
                a = self.poly(f"x1 + {c}*x2 + {c1}", self.x, spec)
                b = self.poly(f"x2 + {c2}", self.x, spec)
                h = self.random_poly(rng, self.x, spec)
                ideal = Ideal([a * a, b * b, a * b * h], self.x, spec)
                for g in (
                    self.random_poly(rng, self.x, spec),
                    self.random_poly(rng, self.x, spec) * a + self.random_poly(rng, self.x, spec) * b,
                ):
                    expected = any(g**k in ideal for k in range(1, 9))
                    self.assertEqual(radical_membership(g, ideal), expected, f"{g} over {ideal.generators}")
                    outcomes.add(expected)
        self.assertEqual(outcomes, {True, False})

    def test_saturation(self):
        x1 = self.poly("x1", self.x)
        self.assertEqual(saturation(Ideal([self.poly("x1*x2", self.x)]), x1), Ideal([self.poly("x2", self.x)]))
        self.assertTrue(saturation(Ideal([self.poly("x1^2", self.x)]), x1).is_unit)
        ideal = Ideal([self.poly("x1*x2 - 1", self.x)])
        self.assertEqual(saturation(ideal, self.poly("1", self.x)), ideal)
        self.assertRaises(DivisionByZero, saturation, ideal, Polynomial.zero(self.x, QQ))

    def test_intersection_sum_product(self):
        a, b = Ideal([self.poly("x1", self.x)]), Ideal([self.poly("x2", self.x)])
        self.assertEqual(ideal_intersection(a, b), Ideal([self.poly("x1*x2", self.x)]))
        self.assertEqual(ideal_product(a, b), Ideal([self.poly("x1*x2", self.x)]))
        self.assertEqual(ideal_sum(a, b), Ideal([self.poly("x2", self.x), self.poly("x1", self.x)]))
        self.assertRaises(ContextMismatch, ideal_intersection, a, Ideal([self.poly("x", self.ctx("x"))]))

    def test_gcd(self):
        ctx = self.ctx("x1,x2,x3")
        self.assertEqual(gcd_multivariate(self.poly("x1*x2", ctx), self.poly("x1*x3", ctx)), self.poly("x1", ctx))
        self.assertEqual(gcd_multivariate(self.poly("x1", ctx), self.poly("x2", ctx)), 1)
        p = self.poly("2*x1^2 - 2*x2", ctx)
        self.assertEqual(gcd_multivariate(p, p), p.monic())
        self.assertEqual(gcd_multivariate(p, Polynomial.zero(ctx, QQ)), p.monic())
        self.assertRaises(BothZero, gcd_multivariate, Polynomial.zero(ctx, QQ), Polynomial.zero(ctx, QQ))

    def test_gcd_random(self):
        rng = random.Random(1)
        for _ in range(50):
            c = self.random_poly(rng, self.x, QQ, terms=2)
            a = self.random_poly(rng, self.x, QQ, terms=2)
            b = self.random_poly(rng, self.x, QQ, terms=2)
            p, q = c * a, c * b
            if c.is_zero or (p.is_zero and q.is_zero):
                continue
            g = gcd_multivariate(p, q)
            self.assertIsNotNone(exact_divide(p, g))
            self.assertIsNotNone(exact_divide(q, g))
            self.assertIsNotNone(exact_divide(g, c))

    def test_dimension(self):
        self.assertEqual(dimension(Ideal([self.poly("1", self.x)])), -1)
        self.assertEqual(dimension(Ideal([self.poly("x1", self.x)])), 1)
        self.assertEqual(dimension(Ideal([], self.x, QQ)), 2)
        self.assertEqual(dimension(Ideal([self.poly("x1", self.x), self.poly("x2 - 3", self.x)])), 0)
        self.assertEqual(dimension_by_elimination(Ideal([self.poly("x1*x2", self.x)])), 1)

    def test_dimension_agrees_with_elimination(self):
        rng = random.Random(9)
        ctx = self.ctx("x1,x2,x3")
        for _ in range(12):
            gens = [self.random_poly(rng, ctx, QQ) for _ in range(rng.randint(1, 2))]
            gens = [g for g in gens if not g.is_zero]
            if not gens:
                continue
            ideal = Ideal(gens)
            self.assertEqual(dimension(ideal), dimension_by_elimination(ideal))
