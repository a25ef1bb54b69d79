import unittest
from fractions import Fraction

from hypothesis import given

from g2theta.chars import (CharSymbol, ExponentChar, Registry, TorusCharG2,
                           borel_char_triple, to_fraction, torus_from_triple)
from g2theta.errors import (PreconditionError, RegistryError,
                            UnknownSymbolError)

from .strategies import REGISTRY, chars, tori


class TestRegistryMethods(unittest.TestCase):

    def test_default(self):
        reg = Registry.default()
        self.assertEqual(list(reg), ["chi2", "chi3", "eta2", "eta3"])
        self.assertEqual(reg.unramified_symbol(2).name, "chi2")
        self.assertEqual(reg.unramified_symbol(3).name, "chi3")
        self.assertIsNone(reg.unramified_symbol(5))
        self.assertTrue(reg["eta2"].ramified)

    def test_torsion_characters(self):
        # 2 * 2 * 3 * 3 residue choices
        self.assertEqual(len(list(REGISTRY.torsion_characters())), 36)

    def test_bad_registries(self):
        with self.assertRaises(RegistryError):
            Registry([CharSymbol("a", 2), CharSymbol("b", 2)])
        with self.assertRaises(RegistryError):
            Registry([CharSymbol("a", 2, True), CharSymbol("a", 3, True)])
        with self.assertRaises(RegistryError):
            CharSymbol("sc", 2)
        with self.assertRaises(RegistryError):
            CharSymbol("x", 0)
        with self.assertRaises(RegistryError):
            CharSymbol("1", 2)
        with self.assertRaises(RegistryError):
            Registry.from_records([{"name": "x"}])
        with self.assertRaises(RegistryError):
            Registry.from_records([{"name": "x", "order": 2, "colour": "red"}])

    def test_unknown_symbol(self):
        with self.assertRaises(UnknownSymbolError) as cm:
            REGISTRY.char("psi5")
        self.assertIn("psi5", str(cm.exception))
        self.assertIsInstance(cm.exception, ValueError)


class TestExponentCharMethods(unittest.TestCase):

    def test_arithmetic(self):
        chi3 = REGISTRY.char("chi3")
        self.assertEqual(chi3.power(3), REGISTRY.trivial())
        self.assertEqual(chi3.inverse(), REGISTRY.char("chi3", 2))
        self.assertEqual(str(chi3 * chi3), "chi3^2")
        mixed = REGISTRY.char("eta2") * REGISTRY.absolute(Fraction(1, 2))
        self.assertEqual(str(mixed), "eta2*|.|^1/2")
        self.assertEqual(str(REGISTRY.absolute(Fraction(-3, 2))), "|.|^-3/2")
        self.assertEqual(str(REGISTRY.trivial()), "1")

    def test_predicates(self):
        chi2 = REGISTRY.char("chi2")
        self.assertTrue(chi2.is_quadratic)
        self.assertFalse(chi2.is_cubic)
        self.assertTrue(chi2.is_unramified)
        self.assertFalse(REGISTRY.char("eta3").is_unramified)
        twisted = chi2.twist(1)
        self.assertIsNone(twisted.order)
        self.assertEqual(twisted.unitary_order, 2)
        self.assertEqual(twisted.unitary_part(), chi2)
        self.assertEqual((REGISTRY.char("chi2") * REGISTRY.char("chi3")).order, 6)

    def test_exact_exponents(self):
        with self.assertRaises(PreconditionError):
            to_fraction(0.5)
        with self.assertRaises(PreconditionError):
            to_fraction("half")
        self.assertEqual(to_fraction("3/4"), Fraction(3, 4))

    def test_registry_mismatch(self):
        other = Registry([CharSymbol("chi2", 2)], name="small")
        with self.assertRaises(RegistryError):
            REGISTRY.char("chi2") * other.char("chi2")

    @given(chars, chars)
    def test_group_laws(self, a, b):
        self.assertEqual(a * b, b * a)
        self.assertTrue((a * a.inverse()).is_trivial)
        self.assertEqual((a / b) * b, a)


class TestTorusMethods(unittest.TestCase):

    def test_borel_char_triple(self):
        c1 = REGISTRY.char("chi3")
        c2 = REGISTRY.absolute(1)
        triple = borel_char_triple(TorusCharG2(c1, c2))
        self.assertEqual(triple, ((c1 * c2).inverse(), c2, c1))

    def test_coroot_values(self):
        from g2theta.rootsys import ALPHA, BETA
        chi = TorusCharG2(REGISTRY.char("chi2"), REGISTRY.absolute(2))
        self.assertEqual(chi.coroot_value(ALPHA), chi.c1 / chi.c2)
        self.assertEqual(chi.coroot_value(BETA), chi.c2)

    def test_regular_orbit(self):
        chi = TorusCharG2(REGISTRY.absolute(3), REGISTRY.absolute(1))
        self.assertEqual(len(chi.weyl_orbit()), 12)

    def test_bad_triple(self):
        one = REGISTRY.trivial()
        with self.assertRaises(PreconditionError):
            torus_from_triple((REGISTRY.char("chi2"), one, one))

    @given(tori)
    def test_triple_roundtrip(self, chi):
        self.assertEqual(torus_from_triple(borel_char_triple(chi)), chi)

    @given(tori)
    def test_orbit_closed(self, chi):
        orbit = chi.weyl_orbit()
        self.assertIn(chi, orbit)
        for other in orbit:
            self.assertEqual(other.weyl_orbit(), orbit)


if __name__ == '__main__':
    unittest.main()
