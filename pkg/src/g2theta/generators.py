"""Seeded families of representations and parameters for the verifiers.

A :class:`Generator` draws from one registry with its own
``random.Random``; equal seeds give equal families.  Every value it
returns is in the canonical form the oracles produce, so equality of
outputs means equality of representations.
"""
import logging
import random
from fractions import Fraction

from . import langlands, reps
from .chars import TorusCharG2, borel_char_triple
from .config import normalize_p_context

logger = logging.getLogger(__name__)

LABELS = ("a", "b", "c", "d", "e")
TWISTS = tuple(Fraction(n, d) for n, d in
               ((1, 2), (1, 1), (3, 2), (2, 1), (5, 2), (1, 3), (3, 4)))
EXPONENTS = tuple(Fraction(n, 2) for n in range(1, 8))
C3_RANGE = tuple(Fraction(n, 2) for n in range(-6, 7))


class Generator:
    """Random representations over ``registry``.

    ``p_context`` gates the data that exist only for one residue
    characteristic: self-dual GL3 supercuspidals (p = 2) and PD^x
    representations outside the heart (p = 3).
    """

    def __init__(self, registry, seed=0, p_context="other"):
        self.registry = registry
        self.seed = seed
        self.p_context = normalize_p_context(p_context)
        self.rng = random.Random(seed)
        self._unitary = list(registry.torsion_characters())
        self._quadratic = [c for c in self._unitary if c.is_quadratic]
        self._cubic = [c for c in self._unitary if c.is_cubic]

    def choice(self, seq):
        return self.rng.choice(list(seq))

    # -- characters ------------------------------------------------------------

    def unitary_char(self):
        return self.choice(self._unitary)

    def quadratic_char(self):
        return self.choice(self._quadratic) if self._quadratic else None

    def cubic_char(self):
        return self.choice(self._cubic) if self._cubic else None

    def unitary_torus(self):
        return TorusCharG2(self.unitary_char(), self.unitary_char())

    def twist(self):
        return self.choice(TWISTS)

    # -- GL2 -------------------------------------------------------------------

    def gl2_supercuspidal(self, central=None, self_dual=None):
        label = self.choice(LABELS)
        if central is None:
            central = self.unitary_char()
        if central.is_trivial:
            return reps.GL2Supercuspidal(label, central)
        if self_dual is None:
            self_dual = central.is_quadratic and self.rng.random() < 0.5
        if self_dual:
            return reps.GL2Supercuspidal(label, central, True,
                                         self.rng.random() < 0.5)
        return reps.GL2Supercuspidal(label, central, dual=self.rng.random() < 0.5)

    def gl2_sc_trivial_central(self):
        return reps.GL2Supercuspidal(self.choice(LABELS), self.registry.trivial())

    def gl2_s3(self):
        chi = self.quadratic_char()
        if chi is None:
            return None
        return reps.GL2Supercuspidal(self.choice(LABELS), chi, True, True)

    def gl2_discrete_series(self):
        if self.rng.random() < 0.6:
            return self.gl2_supercuspidal()
        return reps.GL2Steinberg(self.unitary_char())

    def gl2_tempered(self):
        if self.rng.random() < 0.7:
            return self.gl2_discrete_series()
        return reps.GL2PrincipalSeries(self.unitary_char(), self.unitary_char())

    # -- G2 --------------------------------------------------------------------

    def g2_nontempered(self):
        kind = self.choice(("JP", "JQ", "JB", "1"))
        if kind == "1":
            return reps.TrivG2()
        if kind == "JB":
            a1, a2 = sorted(self.rng.sample(EXPONENTS, 2), reverse=True)
            chi = TorusCharG2(self.unitary_char().twist(a1),
                              self.unitary_char().twist(a2))
            return reps.langlands_quotient_of_torus(chi)
        make = reps.jp if kind == "JP" else reps.jq
        return make(self.twist(), self.gl2_discrete_series())

    def g2_tempered(self):
        """A tempered representation named by the tables."""
        makers = [
            lambda: reps.StG2(),
            lambda: reps.PiDeg1(),
            lambda: reps.PiGen(self.registry.trivial()),
            lambda: reps.PiSc("1"),
            lambda: reps.DeltaP(self.gl2_sc_trivial_central()),
            lambda: reps.DeltaQ(self.gl2_sc_trivial_central()),
            self._g2_ip,
            self._g2_iq,
            self._g2_ib,
            lambda: reps.ScAbstract(self.choice(LABELS), self.rng.random() < 0.5),
            lambda: reps.ScAbstract("pi_rho", False, self.gl2_discrete_series()),
            lambda: reps.ScFromPD(reps.PDOther(self.choice(LABELS), "yes")),
            lambda: reps.ScFromB(self._sc3_extension()),
        ]
        if self._quadratic:
            makers.append(lambda: reps.PiGen(self.quadratic_char()))
            makers.append(lambda: reps.PiGen(self.gl2_s3()))
        if self._cubic:
            makers.append(lambda: reps.PiGen(self.cubic_char()))
        if self.registry.unramified_symbol(3) is not None:
            makers.append(lambda: reps.PiSc(self.choice(("w", "w2"))))
        return self.choice(makers)()

    def _g2_ip(self):
        tau = self.gl2_discrete_series()
        if reps.splits_at_zero_p(tau):
            return reps.IPSummand(tau, self.choice(reps.SUMMAND_KINDS))
        return reps.IPIrred(tau)

    def _g2_iq(self):
        tau = self.gl2_discrete_series()
        if reps.splits_at_zero_q(tau):
            return reps.IQSummand(tau, self.choice(reps.SUMMAND_KINDS))
        return reps.IQIrred(tau)

    def _g2_ib(self):
        chi = self.unitary_torus()
        if reps.three_distinct_quadratics(borel_char_triple(chi)):
            return reps.IBSummand(chi, self.choice(reps.SUMMAND_KINDS))
        return reps.IBIrred(chi)

    def g2_rep(self):
        if self.rng.random() < 0.35:
            return self.g2_nontempered()
        return self.g2_tempered()

    def g2_discrete_series(self):
        while True:
            pi = self.g2_tempered()
            if pi.discrete_series:
                return pi

    # -- PD^x and PGL3 x| Z/2 ----------------------------------------------------

    def pd_rep(self):
        makers = [lambda: reps.PDTrivial(),
                  lambda: reps.PDOther(self.choice(LABELS), "yes")]
        sym = self.registry.unramified_symbol(3)
        if sym is not None:
            base = self.registry.char(sym.name)
            makers.append(lambda: reps.PDUnramifiedCubic(base.power(self.choice((1, 2)))))
        if self.p_context == "3":
            makers.append(lambda: reps.PDOther(self.choice(LABELS),
                                               self.choice(("no", "unknown"))))
        return self.choice(makers)()

    def gl3_supercuspidal(self):
        label = self.choice(LABELS)
        if self.p_context == "2" and self.rng.random() < 0.5:
            return reps.GL3Supercuspidal(label, True)
        return reps.GL3Supercuspidal(label, dual=self.rng.random() < 0.5)

    def _sc3_extension(self):
        return self.choice(reps.classify_pgl3_extension(self.gl3_supercuspidal()))

    def gl3_rep(self):
        makers = [
            self.gl3_supercuspidal,
            lambda: reps.GL3Steinberg(self.choice([self.registry.trivial()]
                                                  + self._cubic)),
            lambda: reps.GL3Induced(self.gl2_discrete_series()),
            self._gl3_principal_series,
            lambda: reps.GL3LanglandsQuotient(
                self.choice([self.registry.trivial()] + self._quadratic)),
        ]
        return self.choice(makers)()

    def _gl3_principal_series(self):
        a, b = self.unitary_char(), self.unitary_char()
        return reps.GL3PrincipalSeries(a, b, (a * b).inverse())

    def pgl3_rep(self):
        return self.choice(reps.classify_pgl3_extension(self.gl3_rep()))

    # -- PGSp6 -----------------------------------------------------------------

    def gsp4_sk(self):
        return reps.GSp4Supercuspidal(rho=self.gl2_discrete_series())

    def p6_nontempered(self):
        kind = self.choice(("J2", "J13", "J1"))
        if kind == "J1":
            return reps.J1(self.twist(), self.gsp4_sk())
        make = reps.J2 if kind == "J2" else reps.J13
        return make(self.twist(), self.gl2_discrete_series())

    # -- parameters ------------------------------------------------------------

    def lparam(self):
        makers = [
            lambda: langlands.PrincipalSL2(),
            lambda: langlands.SubregularSL2("1"),
            lambda: langlands.ShortRootSL2(self.gl2_sc_trivial_central()),
            lambda: langlands.LongRootSL2(self.gl2_sc_trivial_central()),
            lambda: langlands.levi_factored(self.choice(("M", "L")),
                                            self.gl2_discrete_series()),
            lambda: langlands.LeviFactored("T", self.unitary_torus()),
        ]
        if self._quadratic:
            makers.append(lambda: langlands.SubregularSL2("mu2", self.quadratic_char()))
            makers.append(lambda: langlands.SubregularSL2("S3", self.gl2_s3()))
        if self._cubic:
            makers.append(lambda: langlands.SubregularSL2("mu3", self.cubic_char()))
        return self.choice(makers)()

    # -- C3 vectors ------------------------------------------------------------

    def c3_vector(self):
        from .rootsys import C3Vec
        return C3Vec(*(self.choice(C3_RANGE) for _ in range(3)))

    def family(self, make, size):
        """``size`` draws of ``make``, in draw order."""
        values = [make() for _ in range(size)]
        logger.debug("generated %d values with seed %s", len(values), self.seed)
        return values
