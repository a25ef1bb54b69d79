import unittest
from fractions import Fraction

from hypothesis import given

from g2theta import rootsys
from g2theta.errors import NotFoundError, PreconditionError
from g2theta.rootsys import C3Vec, RootVecG2

from .strategies import c3_vectors


class TestG2RootMethods(unittest.TestCase):

    def test_roots(self):
        roots = rootsys.g2_roots()
        self.assertEqual(len(roots), 12)
        self.assertEqual(sum(1 for r in roots if r.is_long), 6)
        self.assertEqual(sum(1 for r in roots if r.is_short), 6)
        self.assertIn(rootsys.HIGHEST_ROOT, roots)
        self.assertEqual(len(rootsys.g2_positive_roots()), 6)

    def test_reflections(self):
        alpha, beta = rootsys.ALPHA, rootsys.BETA
        self.assertEqual(rootsys.g2_simple_reflection("alpha", alpha), -alpha)
        self.assertEqual(rootsys.g2_simple_reflection(2, beta), -beta)
        self.assertEqual(rootsys.g2_coroot_pairing(alpha, beta), -1)
        self.assertEqual(rootsys.g2_coroot_pairing(beta, alpha), -3)
        with self.assertRaises(PreconditionError):
            rootsys.g2_simple_reflection("gamma", alpha)

    def test_weyl_group(self):
        self.assertEqual(rootsys.g2_weyl_order(), 12)
        self.assertEqual(len(rootsys.g2_weyl_group_torus()), 12)

    def test_long_root_triples(self):
        triples = rootsys.all_long_root_triples()
        self.assertEqual(len(triples), 2)
        self.assertTrue(rootsys.long_root_triples_in_one_orbit())
        self.assertEqual(rootsys.long_root_triple(),
                         (RootVecG2(-3, -2), RootVecG2(0, 1), RootVecG2(3, 1)))

    def test_weight_pairings(self):
        self.assertEqual(rootsys.g2_weight_pairings(rootsys.ALPHA), (1, -1))
        self.assertEqual(rootsys.g2_weight_pairings(rootsys.BETA), (0, 1))

    def test_dominant(self):
        self.assertTrue(rootsys.dominant_exponents(2, 1))
        self.assertTrue(rootsys.dominant_exponents(0, 0))
        self.assertFalse(rootsys.dominant_exponents(1, 2))
        self.assertFalse(rootsys.dominant_exponents(1, -1))


class TestC3Methods(unittest.TestCase):

    def test_orders(self):
        self.assertEqual(rootsys.c3_weyl_order(), 48)
        self.assertEqual(len(rootsys.c3_coweyl_group()), 48)
        self.assertEqual(rootsys.c3_subgroup_order((1, 2)), 6)
        self.assertEqual(rootsys.c3_subgroup_order((2, 3)), 8)

    def test_hyperplanes(self):
        found = rootsys.c3_reflection_hyperplanes()
        self.assertEqual(len(found), 9)
        for normal in rootsys.C3_PRINTED_HYPERPLANES:
            self.assertIn(normal, found)

    def test_generators(self):
        v = C3Vec(3, 2, 1)
        for i in (1, 2, 3):
            self.assertEqual(rootsys.c3_reflect(i, rootsys.c3_reflect(i, v)), v)
            self.assertEqual(rootsys.c3_coreflect(i, rootsys.c3_coreflect(i, v)), v)
        self.assertEqual(rootsys.c3_reflect(3, C3Vec(1, 2, 3)), C3Vec(6, -3, -2))
        with self.assertRaises(PreconditionError):
            rootsys.c3_reflect(4, v)

    def test_q_values(self):
        self.assertEqual(rootsys.c3_form_q(C3Vec(0, 1, 0)), Fraction(3, 4))
        self.assertEqual(rootsys.c3_form_q(C3Vec(1, 1, 0)), 1)
        self.assertEqual(rootsys.c3_form_q(C3Vec(0, 0, 2), "printed"), 7)
        with self.assertRaises(PreconditionError):
            rootsys.c3_form_q(C3Vec(0, 0, 1), "cubed")

    def test_printed_reading_fails(self):
        v = C3Vec(0, 0, 2)
        q = rootsys.c3_form_q(v, "printed")
        images = [rootsys.c3_form_q(rootsys.c3_apply(m, v), "printed")
                  for m in rootsys.c3_coweyl_group()]
        self.assertTrue(any(x != q for x in images))

    @given(c3_vectors)
    def test_q_invariant(self, v):
        q = rootsys.c3_form_q(v)
        for m in rootsys.c3_coweyl_group():
            self.assertEqual(rootsys.c3_form_q(rootsys.c3_apply(m, v)), q)

    def test_q_follows_the_coreflection(self):
        v = C3Vec(0, 1, 0)
        self.assertEqual(rootsys.c3_form_q(v), Fraction(3, 4))
        self.assertEqual(rootsys.c3_coreflect(3, v), C3Vec(0, 0, -1))
        self.assertEqual(rootsys.c3_form_q(rootsys.c3_coreflect(3, v)), Fraction(3, 4))
        self.assertEqual(rootsys.c3_reflect(3, v), C3Vec(1, 0, -1))
        self.assertEqual(rootsys.c3_form_q(rootsys.c3_reflect(3, v)), 2)

    @given(c3_vectors)
    def test_dual_form_invariant(self, v):
        value = rootsys.c3_dual_form(v)
        for i in (1, 2, 3):
            self.assertEqual(rootsys.c3_dual_form(rootsys.c3_reflect(i, v)), value)

    def test_regular(self):
        self.assertTrue(rootsys.c3_is_regular(C3Vec(3, 2, 1)))
        self.assertFalse(rootsys.c3_is_regular(C3Vec(1, 1, 0)))

    def test_positive_roots(self):
        positive = rootsys.c3_positive_roots()
        self.assertEqual(len(positive), 9)
        coefficients = [coeffs for _, coeffs in positive]
        self.assertIn((2, 2, 1), coefficients)


class TestParabolicMethods(unittest.TestCase):

    def test_g2_modulus(self):
        # the nilradical roots sum to the modulus exponent times the weight
        # orthogonal to the Levi root
        for name, weight in (("P", RootVecG2(3, 2)), ("Q", RootVecG2(2, 1))):
            data = rootsys.parabolic_data("G2", name)
            total = RootVecG2(0, 0)
            for root in data.nilradical_roots:
                total = total + root
            self.assertEqual(total, weight.scale(int(data.modulus_exponent[0])))
            self.assertEqual(data.nilradical_dimension, 5)

    def test_g2_borel(self):
        data = rootsys.parabolic_data("G2", "B")
        total = RootVecG2(0, 0)
        for root in data.nilradical_roots:
            total = total + root
        a1, a2 = data.modulus_exponent
        self.assertEqual(total, rootsys.E1.scale(int(a1)) + rootsys.E2.scale(int(a2)))

    def test_heisenberg_grading(self):
        data = rootsys.parabolic_data("G2", "P")
        self.assertEqual([(k, len(roots)) for k, roots, _ in data.grading],
                         [(1, 4), (2, 1)])
        data = rootsys.parabolic_data("G2", "Q")
        self.assertEqual([(k, len(roots)) for k, roots, _ in data.grading],
                         [(1, 2), (2, 1), (3, 2)])

    def test_c3_nilradicals(self):
        dims = {name: rootsys.parabolic_data("PGSp6", name).nilradical_dimension
                for name in ("P1", "P2", "P3", "P13")}
        self.assertEqual(dims, {"P1": 5, "P2": 7, "P3": 6, "P13": 8})

    def test_lookup(self):
        self.assertEqual(rootsys.parabolic_data("GL2", "Bbar").group, "GL2")
        self.assertIn(("GSp4", "Q2"), rootsys.parabolic_names())
        self.assertEqual(rootsys.parabolic_names("G2"),
                         [("G2", "B"), ("G2", "P"), ("G2", "Q")])
        with self.assertRaises(NotFoundError):
            rootsys.parabolic_data("G2", "R")
        with self.assertRaises(NotFoundError):
            rootsys.c3_nilradical("P4")


if __name__ == '__main__':
    unittest.main()
