#!/usr/bin/env python3

from detpoly.detcore import (
    NO,
    YES,
    CounterexampleIdeal,
    InRing,
    PolyMap,
    RadChi,
    UnitDoublePointIdeal,
    algebraically_independent,
    almost_surjectivity,
    decompose,
    determined_theorem_route,
    divides_after_composition,
    graph_ideal,
    irr_of_closure,
    is_determined,
    non_almost_surjective_witness,
    radchi_membership,
    range_closure,
    rational_membership,
    search_separating_pair,
    subalgebra_membership,
)
from detpoly.exceptions import (
    ArityError,
    CharacteristicZeroError,
    ContextMismatch,
    HypothesisNotVerified,
    NotDetermined,
    PreconditionViolated,
    TranscendentalOverImage,
)
from detpoly.expr import parse
from detpoly.ideal import Ideal
from detpoly.poly import Polynomial

from .base_tmpl import AFFINE_PLANE, CUSP, GF2, GF3, IDENTITY, NEWTON, QQ, SQUARE_FIRST, BaseTmpl


class DetcoreTmpl(BaseTmpl):
    def g(self, f: PolyMap, text: str) -> Polynomial:
        return parse(text, f.context, f.spec)

    def x(self, f: PolyMap, text: str) -> Polynomial:
        return parse(text, f.image_context(), f.spec)


class TestClosures(DetcoreTmpl):
    def test_polymap(self):
        self.assertRaises(ArityError, PolyMap, [])
        f = self.polymap(*AFFINE_PLANE)
        self.assertEqual((f.n, f.m, f.characteristic), (2, 2, 0))
        self.assertEqual(f((2, 3)), (QQ.element(2), QQ.element(6)))
        self.assertEqual(f.compose(self.x(f, "x2 - x1")), self.g(f, "t1*t2 - t1"))
        self.assertRaises(ContextMismatch, f.check, self.poly("t1", self.ctx("t1")))

    def test_graph_ideal(self):
        f = self.polymap(*AFFINE_PLANE)
        graph = graph_ideal(f)
        self.assertEqual(graph.context.names, ("t1", "t2", "y1", "y2"))
        self.assertEqual([str(p) for p in graph.generators], ["-t1 + y1", "-t1*t2 + y2"])
        self.assertEqual(len(graph_ideal(f, self.g(f, "t2")).generators), 3)

    def test_range_closure(self):
        self.assertTrue(range_closure(self.polymap(*AFFINE_PLANE)).is_zero)
        cusp = self.polymap(*CUSP)
        self.assertEqual(range_closure(cusp), Ideal([self.x(cusp, "x1^3 - x2^2")]))
        constant = self.polymap("t1", "3")
        self.assertEqual(range_closure(constant), Ideal([self.x(constant, "x1 - 3")]))

    def test_algebraic_independence(self):
        self.assertTrue(algebraically_independent(self.polymap(*AFFINE_PLANE)))
        self.assertTrue(algebraically_independent(self.polymap("t1", "t1")))
        self.assertFalse(algebraically_independent(self.polymap(*CUSP)))
        self.assertFalse(algebraically_independent(self.polymap("t1,t2", "t1;t1^2")))
        self.assertTrue(algebraically_independent(self.polymap("t1,t2", "t1^2;t2", chi=2)))
        self.assertFalse(algebraically_independent(self.polymap("t1,t2", "t1^2;t1", chi=2)))

    def test_irr_of_closure(self):
        f = self.polymap(*AFFINE_PLANE)
        cert = irr_of_closure(f, self.g(f, "t2"))
        self.assertEqual((str(cert.q), cert.d, cert.last), ("x1*x3 - x2", 1, "x3"))
        cert = irr_of_closure(f, self.g(f, "t1*t2^2"))
        self.assertEqual((str(cert.q), cert.d), ("x1*x3 - x2^2", 1))
        square = self.polymap("t1", "t1^2")
        cert = irr_of_closure(square, self.g(square, "t1"))
        self.assertEqual((str(cert.q), cert.d), ("x2^2 - x1", 2))

    def test_irr_of_closure_errors(self):
        cusp = self.polymap(*CUSP)
        self.assertRaises(PreconditionViolated, irr_of_closure, cusp, self.g(cusp, "t1"))
        f = self.polymap("t1,t2", "t1")
        self.assertRaises(TranscendentalOverImage, irr_of_closure, f, self.g(f, "t2"))


class TestMembership(DetcoreTmpl):
    def test_rational_membership(self):
        f = self.polymap(*AFFINE_PLANE)
        r, s = rational_membership(f, self.g(f, "t2"))
        self.assertEqual((str(r), str(s)), ("x2", "x1"))
        r, s = rational_membership(f, self.g(f, "t1*t2^2"))
        self.assertEqual((str(r), str(s)), ("x2^2", "x1"))
        square = self.polymap("t1", "t1^2")
        self.assertIsNone(rational_membership(square, self.g(square, "t1")))

    def test_subalgebra_membership(self):
        f = self.polymap(*NEWTON)
        self.assertEqual(str(subalgebra_membership(f, self.g(f, "t1^2 + t2^2"))), "x1^2 - 2*x2")
        self.assertEqual(str(subalgebra_membership(f, self.g(f, "5"))), "5")
        self.assertIsNone(subalgebra_membership(f, self.g(f, "t1")))
        f = self.polymap(*AFFINE_PLANE)
        self.assertIsNone(subalgebra_membership(f, self.g(f, "t1*t2^2")))
        self.assertEqual(subalgebra_membership(f, self.g(f, "t1^2*t2")), self.x(f, "x1*x2"))

    def test_radchi_membership(self):
        f = self.polymap("t1", "t1^2", chi=2)
        self.assertEqual(radchi_membership(f, self.g(f, "t1")), (self.x(f, "x1"), 1))
        self.assertEqual(radchi_membership(f, self.g(f, "t1^2")), (self.x(f, "x1"), 0))
        self.assertIsNone(radchi_membership(f, self.g(f, "t1"), nu_cap=0))
        f = self.polymap("t1", "t1^3", chi=3)
        self.assertEqual(radchi_membership(f, self.g(f, "t1")), (self.x(f, "x1"), 1))
        f = self.polymap("t1,t2", "t1", chi=2)
        self.assertIsNone(radchi_membership(f, self.g(f, "t2")))
        f = self.polymap(*AFFINE_PLANE)
        self.assertRaises(CharacteristicZeroError, radchi_membership, f, self.g(f, "t1"))


class TestDeterminedness(DetcoreTmpl):
    def test_is_determined(self):
        f = self.polymap(*AFFINE_PLANE)
        result = is_determined(f, self.g(f, "t1*t2^2"))
        self.assertTrue(result.determined)
        self.assertIsInstance(result.certificate, UnitDoublePointIdeal)
        self.assertTrue(result.verify(f, self.g(f, "t1*t2^2")))
        result = is_determined(f, self.g(f, "t2"))
        self.assertFalse(result.determined)
        self.assertIsInstance(result.certificate, CounterexampleIdeal)
        self.assertTrue(result.verify(f, self.g(f, "t2")))
        cube = self.polymap("t1", "t1^3")
        self.assertFalse(is_determined(cube, self.g(cube, "t1")).determined)

    def test_theorem_route(self):
        f = self.polymap(*NEWTON)
        g = self.g(f, "t1^2 + t2^2")
        result = determined_theorem_route(f, g)
        self.assertTrue(result.determined)
        self.assertEqual(result.certificate, InRing(self.x(f, "x1^2 - 2*x2")))
        self.assertTrue(result.verify(f, g))
        self.assertFalse(determined_theorem_route(f, self.g(f, "t1")).determined)

        square = self.polymap("t1", "t1^2", chi=2)
        result = determined_theorem_route(square, self.g(square, "t1"))
        self.assertTrue(result.determined)
        self.assertEqual(result.certificate, RadChi(self.x(square, "x1"), 1))

    def test_theorem_route_hypotheses(self):
        f = self.polymap(*AFFINE_PLANE)
        self.assertRaises(HypothesisNotVerified, determined_theorem_route, f, self.g(f, "t1*t2^2"))
        cusp = self.polymap(*CUSP)
        self.assertRaises(HypothesisNotVerified, determined_theorem_route, cusp, self.g(cusp, "t1"))

    def test_corpus_over_rationals(self):
        corpus = {
            NEWTON: ["t1", "t1 - t2", "(t1 - t2)^2", "t1*t2", "t1^3 + t2^3"],
            IDENTITY: ["t1", "t1*t2^2", "t2^3 - t1 + 1"],
            SQUARE_FIRST: ["t1", "t1^2*t2", "t2^2", "t1*t2"],
        }
        for (names, components), gs in corpus.items():
            f = self.polymap(names, components)
            self.assertEqual(almost_surjectivity(f).value, YES)
            for text in gs:
                g = self.g(f, text)
                self.assertEqual(parse(str(g), f.context, f.spec), g)
                result = is_determined(f, g)
                self.assertTrue(result.verify(f, g))
                in_ring = subalgebra_membership(f, g) is not None
                self.assertEqual(result.determined, in_ring, text)
                self.assertEqual(determined_theorem_route(f, g).determined, result.determined, text)
                rational = rational_membership(f, g)
                if rational is not None:
                    self.assertTrue(in_ring, text)
                if result.determined:
                    r, s = rational
                    self.assertEqual(g * f.compose(s), f.compose(r))

    def test_corpus_without_almost_surjectivity(self):
        # (g, determined, in k[f]) for maps whose determined polynomials escape k[f]
        corpus = {
            AFFINE_PLANE: [
                ("t1", True, True),
                ("t2", False, False),
                ("t1*t2^2", True, False),
                ("t1^2*t2", True, True),
                ("t2^2", False, False),
            ],
            CUSP: [
                ("t1", True, False),
                ("t1^2", True, True),
                ("t1^5", True, True),
                ("t1^4 + t1", True, False),
            ],
        }
        for (names, components), cases in corpus.items():
            f = self.polymap(names, components)
            self.assertEqual(almost_surjectivity(f).value, NO)
            for text, determined, in_ring in cases:
                g = self.g(f, text)
                self.assertEqual(parse(str(g), f.context, f.spec), g)
                result = is_determined(f, g)
                self.assertTrue(result.verify(f, g))
                self.assertEqual(result.determined, determined, text)
                self.assertEqual(subalgebra_membership(f, g) is not None, in_ring, text)
                if determined and algebraically_independent(f):
                    r, s = rational_membership(f, g)
                    self.assertEqual(g * f.compose(s), f.compose(r))

    def test_corpus_in_positive_characteristic(self):
        corpus = [
            (("t1", "t1^2", 2), ["t1", "t1^2", "t1^3", "t1 + 1"]),
            (("t1,t2", "t1+t2;t1*t2", 2), ["t1", "t1^2", "t1^2 + t2^2", "t1*t2"]),
            (("t1,t2", "t1;t2", 2), ["t1*t2", "t2^2 + t1"]),
            (("t1", "t1^3", 3), ["t1", "t1 + 1", "t1^2"]),
            (("t1,t2", "t1+t2;t1*t2", 3), ["t1", "t1^2 + t2^2", "t1^3 + t2^3"]),
        ]
        for (names, components, chi), gs in corpus:
            f = self.polymap(names, components, chi)
            for text in gs:
                g = self.g(f, text)
                result = is_determined(f, g)
                route = determined_theorem_route(f, g)
                self.assertEqual(route.determined, result.determined, f"{f}, {text}")
                self.assertTrue(route.verify(f, g))
                if result.determined:
                    p, nu = radchi_membership(f, g)
                    self.assertEqual(f.compose(p), g ** (chi**nu))
                    r, s = rational_membership(f, g ** (chi**nu))
                    self.assertEqual(g ** (chi**nu) * f.compose(s), f.compose(r))

    def test_sampling_never_contradicts(self):
        cases = [
            (("t1,t2", "t1+t2;t1*t2", 5), ["t1", "t1*t2", "t1^2 + t2^2"]),
            (("t1", "t1^3", 7), ["t1", "t1^6"]),
            (("t1,t2", "t1;t1*t2", 5), ["t2", "t1*t2^2"]),
            (("t1", "t1^2", 11), ["t1", "t1^4"]),
        ]
        found = 0
        for (names, components, chi), gs in cases:
            f = self.polymap(names, components, chi)
            for text in gs:
                g = self.g(f, text)
                pair = search_separating_pair(f, g)
                if pair is not None:
                    found += 1
                    a, b = pair
                    self.assertEqual(f(a), f(b))
                    self.assertFalse(is_determined(f, g).determined, text)
        self.assertEqual(found, 4)

    def test_search_over_rationals(self):
        f = self.polymap(*AFFINE_PLANE)
        a, b = search_separating_pair(f, self.g(f, "t2"), radius=1)
        self.assertEqual(f(a), f(b))
        self.assertIsNone(search_separating_pair(f, self.g(f, "t1*t2^2"), radius=1))


class TestAlmostSurjectivity(DetcoreTmpl):
    def test_yes(self):
        for names, components, chi in (
            (*NEWTON, 0),
            (*SQUARE_FIRST, 0),
            (*IDENTITY, 0),
            ("t1,t2", "t1*t2", 0),
            ("t1", "t1^2", 2),
            ("t1", "t1^3", 3),
        ):
            f = self.polymap(names, components, chi)
            verdict = almost_surjectivity(f)
            self.assertEqual(verdict.value, YES, str(f))
            self.assertTrue(verdict.verify(f))
            self.assertTrue(algebraically_independent(f), str(f))

    def test_no_with_witness(self):
        f = self.polymap(*AFFINE_PLANE)
        verdict = almost_surjectivity(f)
        self.assertEqual((verdict.value, verdict.reason), (NO, "witness"))
        self.assertEqual(verdict.witness.p, self.x(f, "x1"))
        self.assertEqual(verdict.witness.q, self.x(f, "x2"))
        self.assertTrue(verdict.verify(f))
        self.assertEqual(verdict.to_dict()["witness"], {"p": "x1", "q": "x2"})

    def test_reported_witness_separates(self):
        found = 0
        for names, components in (NEWTON, IDENTITY, SQUARE_FIRST, AFFINE_PLANE, CUSP):
            f = self.polymap(names, components)
            verdict = almost_surjectivity(f)
            if verdict.reason != "witness":
                continue
            found += 1
            b = non_almost_surjective_witness(f, verdict.witness.p, verdict.witness.q)
            self.assertTrue(is_determined(f, b).determined, str(f))
            self.assertIsNone(subalgebra_membership(f, b), str(f))
            self.assertTrue(verdict.witness.verify_separator(f, b))
            self.assertFalse(verdict.witness.verify_separator(f, b + 1))
        self.assertEqual(found, 1)

    def test_not_dominant(self):
        f = self.polymap(*CUSP)
        verdict = almost_surjectivity(f)
        self.assertEqual((verdict.value, verdict.reason), (NO, "not-dominant"))
        self.assertTrue(verdict.verify(f))

    def test_divides_after_composition(self):
        f = self.polymap(*AFFINE_PLANE)
        self.assertTrue(divides_after_composition(self.x(f, "x1"), self.x(f, "x2^2"), f))
        self.assertFalse(divides_after_composition(self.x(f, "x2"), self.x(f, "x1"), f))
        self.assertTrue(divides_after_composition(self.x(f, "x2"), self.x(f, "x2"), f))
        cusp = self.polymap(*CUSP)
        zero = self.x(cusp, "x1^3 - x2^2")
        self.assertTrue(divides_after_composition(zero, zero, cusp))
        self.assertFalse(divides_after_composition(zero, self.x(cusp, "x1"), cusp))

    def test_witness(self):
        f = self.polymap(*AFFINE_PLANE)
        expected = self.g(f, "t1*t2^2")
        b = non_almost_surjective_witness(f, self.x(f, "x1"), self.x(f, "x2"))
        self.assertEqual(b, expected)
        self.assertTrue(is_determined(f, b).determined)
        self.assertIsNone(subalgebra_membership(f, b))
        self.assertEqual(non_almost_surjective_witness(f, self.x(f, "x1^2"), self.x(f, "x1*x2")), expected)
        self.assertEqual(non_almost_surjective_witness(f, self.x(f, "x1"), self.x(f, "x2^2")), self.g(f, "t1^3*t2^4"))
        self.assertRaises(
            PreconditionViolated, non_almost_surjective_witness, f, self.x(f, "x1"), self.x(f, "x1*x2")
        )
        self.assertRaises(PreconditionViolated, non_almost_surjective_witness, f, self.x(f, "x2"), self.x(f, "x1"))


class TestDecompose(DetcoreTmpl):
    def test_characteristic_zero(self):
        f = self.polymap(*NEWTON)
        g = self.g(f, "t1^3 + t2^3")
        dec = decompose(f, g)
        self.assertEqual((str(dec.p), dec.nu), ("x1^3 - 3*x1*x2", 0))
        self.assertTrue(dec.verify(f, g))
        self.assertEqual(dec.outer((2, 1)), QQ.element(2))
        identity = self.polymap(*IDENTITY)
        self.assertEqual(str(decompose(identity, self.g(identity, "t1*t2^2 + 1")).p), "x1*x2^2 + 1")

    def test_positive_characteristic(self):
        f = self.polymap("t1", "t1^2", chi=2)
        dec = decompose(f, self.g(f, "t1"))
        self.assertEqual((dec.p, dec.nu, dec.characteristic), (self.x(f, "x1"), 1, 2))
        self.assertEqual(dec.outer((1,)), GF2.element(1))
        f = self.polymap("t1", "t1^3", chi=3)
        dec = decompose(f, self.g(f, "t1 + 1"))
        self.assertEqual((dec.p, dec.nu), (self.x(f, "x1 + 1"), 1))
        self.assertEqual(dec.outer((2,)), GF3.element(0))

    def test_errors(self):
        f = self.polymap(*NEWTON)
        self.assertRaises(NotDetermined, decompose, f, self.g(f, "t1"))
        f = self.polymap(*AFFINE_PLANE)
        self.assertRaises(HypothesisNotVerified, decompose, f, self.g(f, "t1*t2^2"))
        self.assertRaises(HypothesisNotVerified, decompose, f, self.g(f, "t1*t2^2"), assume_almost_surjective=True)
        self.assertEqual(str(decompose(f, self.g(f, "t1^2*t2"), assume_almost_surjective=True).p), "x1*x2")
