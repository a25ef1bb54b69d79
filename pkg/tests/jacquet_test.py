import unittest
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from g2theta import jacquet
from g2theta.errors import NotFoundError, PreconditionError

from .strategies import fractions

ALGEBRAS = [jacquet.EtaleCubic.parse(text) for text in ("split", "partial:K", "field:E")]


class TestMinrepMethods(unittest.TestCase):

    def test_layer_counts(self):
        self.assertEqual(len(jacquet.minrep_jacquet("G2", "P")), 3)
        self.assertEqual(len(jacquet.minrep_jacquet("G2", "Q")), 3)
        self.assertEqual(len(jacquet.minrep_jacquet_p6("P3")), 3)
        self.assertEqual(len(jacquet.minrep_jacquet_p6("P1")), 3)
        self.assertEqual(len(jacquet.minrep_jacquet_p6("P2")), 4)

    def test_layers_numbered_from_bottom(self):
        pieces = jacquet.minrep_jacquet("G2", "P")
        self.assertEqual([p.layer for p in pieces], [0, 1, 2])
        self.assertEqual(pieces[0].name, "bottom")
        self.assertEqual(pieces[-1].kind, jacquet.MINIMAL)

    def test_top_twists(self):
        top = jacquet.minrep_jacquet("G2", "Q")[-1]
        self.assertEqual([str(m) for m in top.summands],
                         ["Pi_A5*|det|^3/2", "Pi_A1*|det|^2"])
        top = jacquet.minrep_jacquet_p6("P3")[-1]
        self.assertEqual(str(top), "Pi_E6 + Pi_0*|det|^1")

    def test_descriptor(self):
        middle = jacquet.minrep_jacquet("G2", "P")[1]
        self.assertEqual(str(middle), "Ind_{Bbar x P2}(delta(-1/2, 1) * C_c(GL1))")
        record = middle.as_dict()
        self.assertEqual(record["subgroups"], [["GL2", "Bbar"], ["PGSp6", "P2"]])
        self.assertEqual(record["delta"], ["-1/2", "1"])
        self.assertIsNone(record["twist"])

    def test_unknown_tables(self):
        with self.assertRaises(NotFoundError):
            jacquet.minrep_jacquet("PGSp6", "P1")
        with self.assertRaises(NotFoundError):
            jacquet.minrep_jacquet("G2", "B")
        with self.assertRaises(NotFoundError):
            jacquet.minrep_jacquet_p6("P13")

    def test_modulus_consistency(self):
        rows = jacquet.modulus_consistency()
        self.assertEqual([key for key, _, _ in rows],
                         [("G2", "P"), ("PGSp6", "P1"), ("PGSp6", "P3")])
        for key, twist, half in rows:
            with self.subTest(table=key):
                self.assertEqual(twist, half)
        self.assertEqual(rows[2][1], 1)


class TestIEFiltrationMethods(unittest.TestCase):

    def test_etale_algebras(self):
        self.assertEqual([E.m_E for E in ALGEBRAS], [3, 1, 0])
        self.assertEqual([str(E) for E in ALGEBRAS], ["F^3", "F x K", "E"])
        with self.assertRaises(PreconditionError):
            jacquet.EtaleCubic.parse("quartic")
        with self.assertRaises(PreconditionError):
            jacquet.EtaleCubic.parse("split:K")

    def test_layers(self):
        names = [[p.name for p in jacquet.ie_filtration(0, E)] for E in ALGEBRAS]
        self.assertEqual(names[0], ["I0", "J1", "J2", "J3", "J4"])
        self.assertEqual(names[1], names[0])
        self.assertEqual(names[2], ["I0", "J1", "J4"])
        for E in ALGEBRAS:
            bottom = jacquet.ie_filtration(0, E)[0]
            self.assertEqual(str(bottom), "ind_{N}(psibar_E)")
            self.assertEqual(bottom.subgroups, (("G2", "N"),))
            self.assertEqual(jacquet.subgroup_parabolic(*bottom.subgroups[0]).name, "P")
        with self.assertRaises(NotFoundError):
            jacquet.subgroup_parabolic("G2", "U")

    def test_multiplicities(self):
        for E, m in zip(ALGEBRAS[:2], (3, 1)):
            pieces = {p.name: p for p in jacquet.ie_filtration(0, E)}
            self.assertEqual(pieces["J2"].multiplicity, m)
            self.assertEqual(pieces["J3"].multiplicity, m)
            self.assertEqual(pieces["J4"].multiplicity, 1)
        bottom = jacquet.ie_filtration(0, ALGEBRAS[0])[0]
        self.assertEqual(bottom.kind, jacquet.COMPACT)

    @given(fractions, st.sampled_from(ALGEBRAS))
    def test_twists(self, s, E):
        pieces = {p.name: p for p in jacquet.ie_filtration(s, E)}
        self.assertEqual(pieces["J1"].twist, s / 2 + Fraction(1, 4))
        self.assertEqual(pieces["J4"].twist, s + 1)
        self.assertIsNone(pieces["I0"].twist)
        self.assertEqual([p.layer for p in pieces.values()], list(range(len(pieces))))


class TestJordanMethods(unittest.TestCase):

    def test_tables(self):
        self.assertEqual(jacquet.jordan_algebra_table()[15], "E7")
        self.assertEqual(jacquet.dualpair_table("H3M2").h_j, "PGSp6")
        self.assertEqual(jacquet.jordan_case("Dplus").pair.ambient, "E6^D")
        with self.assertRaises(NotFoundError):
            jacquet.jordan_case("H3O")

    def test_s_values(self):
        self.assertEqual([jacquet.jordan_case(t).s_J for t in ("Dplus", "M3F", "H3M2")],
                         [Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2)])

    def test_rje(self):
        split, _, field = ALGEBRAS
        result = jacquet.rje_structure("Dplus", split)
        self.assertTrue(result.zero)
        self.assertIsNone(result.embedding)
        self.assertEqual(result.ie_half_length, 2)
        result = jacquet.rje_structure("H3M2", field)
        self.assertFalse(result.zero)
        self.assertEqual(result.ie_half_length, 3)
        self.assertEqual(result.embedding, "R_H3M2(E) -> I_E(1/2)")
        self.assertEqual(str(result.sequences[0]),
                         "0 -> R_H3M2(E) -> I_E(1/2) -> R_Dplus(E) -> 0")
        self.assertEqual(jacquet.rje_structure("M3F", split).sequences[0].quotient, "0")

    def test_twisted_jacquet(self):
        split, _, field = ALGEBRAS
        self.assertEqual(jacquet.twisted_jacquet("M3F", split),
                         "ind_{PEx x| Z/2}^{PGL3 x| Z/2}(1)")
        self.assertEqual(jacquet.twisted_jacquet("Dplus", field), "ind_{PEx}^{PDx}(1)")
        with self.assertRaises(PreconditionError):
            jacquet.twisted_jacquet("Dplus", split)


if __name__ == '__main__':
    unittest.main()
