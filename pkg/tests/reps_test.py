import unittest
from fractions import Fraction

from g2theta import reps
from g2theta.chars import Registry, TorusCharG2
from g2theta.errors import PreconditionError

R = Registry.default()
ONE = R.trivial()
CHI2 = R.char("chi2")
ETA2 = R.char("eta2")
CHI3 = R.char("chi3")


def sc(label="a", central=ONE, **kwargs):
    return reps.GL2Supercuspidal(label, central, **kwargs)


def s3(label="b", flag=True):
    return reps.GL2Supercuspidal(label, CHI2, True, flag)


class TestGL2Methods(unittest.TestCase):

    def test_supercuspidal_literals(self):
        self.assertEqual(str(sc()), "sc(a, sd)")
        self.assertEqual(str(sc(central=CHI3)), "sc(a, w=chi3)")
        self.assertEqual(str(s3()), "sc(b, sd, w=chi2, S3)")
        self.assertEqual(str(sc().twisted(Fraction(1, 2))), "sc(a, sd)*|det|^1/2")

    def test_contragredient(self):
        tau = sc(central=CHI3)
        dual = tau.contragredient()
        self.assertEqual(str(dual), "sc(a, w=chi3^2)^v")
        self.assertEqual(dual.contragredient(), tau)
        self.assertFalse(tau.self_dual)
        self.assertTrue(sc().self_dual)
        self.assertEqual(reps.central_character(tau), CHI3)

    def test_supercuspidal_errors(self):
        with self.assertRaises(PreconditionError):
            sc(central=CHI3, self_dual_flag=True)
        with self.assertRaises(PreconditionError):
            sc(dihedral_s3=True)
        with self.assertRaises(PreconditionError):
            sc(central=R.absolute(1))
        with self.assertRaises(PreconditionError):
            sc(label="9a")

    def test_principal_series(self):
        ps = reps.GL2PrincipalSeries(CHI2, ONE)
        self.assertEqual(str(ps), "ps(1, chi2)")
        self.assertTrue(ps.tempered)
        with self.assertRaises(PreconditionError):
            reps.GL2PrincipalSeries(R.absolute(Fraction(1, 2)),
                                    R.absolute(Fraction(-1, 2)))

    def test_steinberg(self):
        st = reps.GL2Steinberg(CHI2)
        self.assertTrue(st.discrete_series)
        self.assertFalse(st.twisted(1).tempered)
        self.assertEqual(st.twisted(1).split_twist(), (st, 1))


class TestGL3Methods(unittest.TestCase):

    def test_steinberg(self):
        self.assertTrue(reps.GL3Steinberg(ONE).self_dual)
        self.assertFalse(reps.GL3Steinberg(CHI3).self_dual)
        with self.assertRaises(PreconditionError):
            reps.GL3Steinberg(CHI2)

    def test_principal_series(self):
        tau = reps.GL3PrincipalSeries(ETA2, CHI2, CHI2 * ETA2)
        self.assertEqual(str(tau), "ps3(chi2, chi2*eta2, eta2)")
        self.assertTrue(tau.irreducible)
        self.assertFalse(tau.has_trivial_summand)
        with self.assertRaises(PreconditionError):
            reps.GL3PrincipalSeries(CHI2, ONE, ONE)
        reducible = reps.GL3PrincipalSeries(R.absolute(1), ONE, R.absolute(-1))
        self.assertFalse(reducible.irreducible)

    def test_extensions(self):
        sc3 = reps.GL3Supercuspidal("a")
        (ext,) = reps.classify_pgl3_extension(sc3)
        self.assertEqual(str(ext), "Ind(sc3(a))")
        self.assertEqual(reps.PGL3ExtRep(sc3.contragredient(), reps.IND), ext)
        plus, minus = reps.classify_pgl3_extension(reps.GL3Supercuspidal("a", True))
        self.assertEqual(str(minus), "sc3(a, sd)-")
        self.assertFalse(minus.generic)
        with self.assertRaises(PreconditionError):
            reps.PGL3ExtRep(reps.GL3Supercuspidal("a", True), reps.IND)
        with self.assertRaises(PreconditionError):
            reps.PGL3ExtRep(sc3, reps.PLUS)

    def test_theta_null(self):
        ind = reps.GL3Induced(sc())
        self.assertTrue(ind.has_trivial_summand)
        self.assertTrue(reps.PGL3ExtRep(ind, reps.MINUS).theta_null)
        self.assertFalse(reps.PGL3ExtRep(ind, reps.PLUS).theta_null)
        self.assertTrue(reps.PGL3ExtRep(reps.GL3LanglandsQuotient(ONE),
                                        reps.MINUS).theta_null)
        self.assertFalse(reps.PGL3ExtRep(reps.GL3Steinberg(ONE),
                                         reps.MINUS).theta_null)


class TestGSp4Methods(unittest.TestCase):

    def test_saito_kurokawa(self):
        sk = reps.GSp4Supercuspidal(rho=reps.GL2Steinberg(ONE))
        self.assertEqual(str(sk), "sk(st(1))")
        self.assertFalse(sk.generic)
        self.assertTrue(sk.trivial_central and sk.std_contains_trivial)
        reps.check_p1_datum(sk)
        with self.assertRaises(PreconditionError):
            reps.check_p1_datum(reps.GSp4Supercuspidal("t"))


class TestG2Methods(unittest.TestCase):

    def test_predicates(self):
        self.assertTrue(reps.StG2().discrete_series)
        self.assertTrue(reps.StG2().generic)
        self.assertFalse(reps.TrivG2().tempered)
        self.assertFalse(reps.PiDeg1().generic)
        self.assertFalse(reps.PiSc("1").generic)
        ip = reps.IPIrred(sc(central=CHI3))
        self.assertTrue(ip.tempered)
        self.assertFalse(ip.discrete_series)
        jp = reps.JP(1, sc())
        self.assertFalse(jp.tempered)
        self.assertEqual(str(jp), "JP(1; sc(a, sd))")

    def test_langlands_data(self):
        with self.assertRaises(PreconditionError):
            reps.JP(0, sc())
        with self.assertRaises(PreconditionError):
            reps.JQ(1, reps.GL2Steinberg(R.absolute(1)))
        with self.assertRaises(PreconditionError):
            reps.JB(TorusCharG2(R.absolute(1), R.absolute(2)))
        with self.assertRaises(PreconditionError):
            reps.JB(TorusCharG2(R.absolute(2), R.absolute(1)))

    def test_brackets(self):
        self.assertEqual(reps.PiGen(CHI3), reps.PiGen(CHI3.inverse()))
        self.assertEqual(str(reps.PiGen(CHI3.inverse())), "pi_gen[chi3]")
        self.assertEqual(str(reps.PiGen(s3())), "pi_gen[sc(b, sd, w=chi2, S3)]")
        with self.assertRaises(PreconditionError):
            reps.PiGen(s3(flag=False))
        with self.assertRaises(PreconditionError):
            reps.SigmaGen(CHI3)
        with self.assertRaises(PreconditionError):
            reps.PiSc("w3")

    def test_discrete_series_data(self):
        self.assertEqual(str(reps.DeltaP(sc())), "deltaP(sc(a, sd))")
        with self.assertRaises(PreconditionError):
            reps.DeltaQ(sc(central=CHI3))
        with self.assertRaises(PreconditionError):
            reps.ScFromPD(reps.PDOther("a", "no"))

    def test_unitary_inductions(self):
        tau = sc(central=CHI3)
        self.assertEqual(reps.IPIrred(tau), reps.IPIrred(tau.contragredient()))
        with self.assertRaises(PreconditionError):
            reps.IPIrred(s3())
        self.assertTrue(reps.IPSummand(s3(), reps.GEN).generic)
        self.assertFalse(reps.IPSummand(s3(), reps.DEG).generic)
        # the S3 image keeps I_Q(0, tau) irreducible
        reps.IQIrred(s3())
        with self.assertRaises(PreconditionError):
            reps.IQIrred(s3(flag=False))
        with self.assertRaises(PreconditionError):
            reps.IPSummand(sc(), reps.GEN)

    def test_unitary_principal_series(self):
        chi = TorusCharG2(CHI2, ETA2)
        with self.assertRaises(PreconditionError):
            reps.IBIrred(chi)
        summand = reps.IBSummand(chi, reps.GEN)
        for other in chi.weyl_orbit():
            self.assertEqual(reps.IBSummand(other, reps.GEN), summand)
        irred = reps.IBIrred(TorusCharG2(CHI3, ONE))
        self.assertTrue(irred.generic)

    def test_abstract(self):
        pi = reps.ScAbstract("x", False, reps.GL2Steinberg(ONE))
        self.assertEqual(pi.label, "pi_rho")
        self.assertEqual(str(pi), "sc_G2(pi_rho; rho=st(1))")
        with self.assertRaises(PreconditionError):
            reps.ScAbstract("x", True, reps.GL2Steinberg(ONE))
        self.assertEqual(str(reps.ScAbstract("x", True)), "sc_G2(x; gen)")
        self.assertEqual(str(reps.Unresolved("G2", "rest")), 'unresolved_G2("rest")')

    def test_unresolved(self):
        pi = reps.Unresolved("PGSp6", "x")
        self.assertEqual(pi.group, "PGSp6")
        self.assertEqual(pi.target_group, "PGSp6")
        self.assertEqual(str(pi), 'unresolved_P6("x")')
        self.assertEqual(pi, reps.Unresolved("PGSp6", "x"))
        self.assertNotEqual(pi, reps.Unresolved("G2", "x"))
        self.assertFalse(pi.tempered)


class TestSmartConstructorMethods(unittest.TestCase):

    def test_jp_moves_twist(self):
        tau = reps.GL2Steinberg(R.absolute(Fraction(1, 2)))
        self.assertEqual(reps.jp(1, tau), reps.JP(Fraction(3, 2), reps.GL2Steinberg(ONE)))
        with self.assertRaises(PreconditionError):
            reps.jq(Fraction(1, 2), reps.GL2Steinberg(R.absolute(-1)))

    def test_trivial_representation(self):
        self.assertEqual(reps.jp(Fraction(3, 2), reps.GL2OneDim(ONE)), reps.TrivG2())
        rho = TorusCharG2(R.absolute(2), R.absolute(1))
        self.assertEqual(reps.langlands_quotient_of_torus(rho), reps.TrivG2())

    def test_walls(self):
        a = R.absolute
        self.assertIsInstance(reps.langlands_quotient_of_torus(
            TorusCharG2(a(3), a(1))), reps.JB)
        self.assertEqual(reps.langlands_quotient_of_torus(TorusCharG2(a(1), a(1))),
                         reps.JP(1, reps.GL2PrincipalSeries(ONE, ONE)))
        self.assertEqual(reps.langlands_quotient_of_torus(TorusCharG2(a(2), ONE)),
                         reps.JQ(2, reps.GL2PrincipalSeries(ONE, ONE)))
        # anti-dominant input has the same quotient
        self.assertEqual(reps.langlands_quotient_of_torus(TorusCharG2(a(-3), a(-1))),
                         reps.langlands_quotient_of_torus(TorusCharG2(a(3), a(1))))

    def test_generic_quotients(self):
        a = R.absolute
        self.assertFalse(reps.JB(TorusCharG2(a(3), a(1))).generic)
        self.assertTrue(reps.JB(TorusCharG2(a(Fraction(7, 2)), a(Fraction(1, 2)))).generic)
        self.assertFalse(reps.JP(Fraction(1, 2), sc()).generic)
        self.assertTrue(reps.JP(1, sc()).generic)


if __name__ == '__main__':
    unittest.main()
