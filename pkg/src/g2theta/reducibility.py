"""Composition series of parabolically induced representations.

Each engine returns a :class:`RepStructure` listing the irreducible
constituents with their position in the induced representation.  Negative
twists are answered through the contragredient: the constituents of
I(-s, tau^v) are those of I(s, tau) with sub and quotient exchanged.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import reps
from .chars import (ExponentChar, Registry, TorusCharG2, borel_char_triple,
                    to_fraction)
from .errors import InvariantViolation, NotCoveredError, PreconditionError
from .rootsys import dominant_exponents, parabolic_data

logger = logging.getLogger(__name__)

SUB = "sub"
QUOTIENT = "quotient"
SUBQUOTIENT = "subquotient"
DIRECT_SUMMAND = "direct_summand"
POSITIONS = (SUB, SUBQUOTIENT, DIRECT_SUMMAND, QUOTIENT)

_SWAP = {SUB: QUOTIENT, QUOTIENT: SUB}

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Constituent:
    rep: object
    position: str

    def __post_init__(self):
        if self.position not in POSITIONS:
            raise PreconditionError("unknown position {!r}".format(self.position))

    def swapped(self):
        return Constituent(self.rep, _SWAP.get(self.position, self.position))


@dataclass(frozen=True)
class RepStructure:
    """Constituents of an induced representation.

    ``length`` is None when the number of constituents is not determined;
    ``resolved`` is False when some constituent is :class:`reps.Unresolved`.
    """

    induced: str
    constituents: tuple
    length: Optional[int]
    resolved: bool = True

    @property
    def irreducible(self):
        return self.length == 1

    def reps(self):
        return [c.rep for c in self.constituents]

    def at(self, position):
        return [c.rep for c in self.constituents if c.position == position]

    def dual(self, induced):
        return _structure(induced, [c.swapped() for c in self.constituents],
                          self.length, self.resolved)


def _order(c):
    return (POSITIONS.index(c.position), str(c.rep))


def _structure(induced, constituents, length=None, resolved=None):
    constituents = tuple(sorted(constituents, key=_order))
    if resolved is None:
        resolved = not any(isinstance(c.rep, reps.Unresolved) for c in constituents)
    if length is None and resolved:
        length = len(constituents)
    return RepStructure(induced, constituents, length, resolved)


def _single(induced, rep, s):
    position = QUOTIENT if s > 0 else (SUB if s < 0 else DIRECT_SUMMAND)
    return _structure(induced, [Constituent(rep, position)], length=1)


def _split(induced, summand, datum):
    return _structure(induced, [Constituent(summand(datum, reps.GEN), DIRECT_SUMMAND),
                                Constituent(summand(datum, reps.DEG), DIRECT_SUMMAND)])


def _pair(induced, sub, quotient):
    return _structure(induced, [Constituent(sub, SUB), Constituent(quotient, QUOTIENT)])


def _check_unitary(tau):
    if not isinstance(tau, reps.GL2Rep):
        raise PreconditionError("expected a GL2 representation, got {}".format(tau))
    if not reps.gl2_unitary(tau):
        raise PreconditionError(
            "{} is not unitary; carry the twist in s".format(tau))


def _label(name, s, tau):
    return "{}({}; {})".format(name, s, tau)


def _is_order(chi, n):
    return chi.is_unitary and chi.unitary_order == n


# -- the Borel engine ----------------------------------------------------------

def _shifted_by_one(chi):
    return not chi.torsion and abs(chi.exponent) == 1


def borel_reducibility_condition(chi):
    """Some chi_i or chi_i/chi_j equals |.|^{+-1}."""
    triple = borel_char_triple(chi)
    if any(_shifted_by_one(c) for c in triple):
        return True
    return any(_shifted_by_one(triple[i] / triple[j])
               for i in range(3) for j in range(3) if i != j)


def _borel_position(chi):
    a1, a2 = chi.exponents()
    if chi.is_unitary:
        return DIRECT_SUMMAND
    if dominant_exponents(a1, a2):
        return QUOTIENT
    if dominant_exponents(-a1, -a2):
        return SUB
    return SUBQUOTIENT


def decompose_IB_G2(chi, induced=None):
    """Constituents of Ind_B(chi).

    On a wall, chi is conjugate to a character that factors through the Levi
    of P or Q as ps(nu|.|^1/2, nu|.|^-1/2), and the constituents are those of
    the Steinberg and one-dimensional rows at that point.
    """
    if induced is None:
        induced = "IB({}, {})".format(chi.c1, chi.c2)
    triple = borel_char_triple(chi)
    if chi.is_unitary and reps.three_distinct_quadratics(triple):
        logger.debug("%s: three distinct quadratic characters", induced)
        return _split(induced, reps.IBSummand, chi)
    quotient = reps.langlands_quotient_of_torus(chi)
    position = _borel_position(chi)
    if not borel_reducibility_condition(chi):
        return _structure(induced, [Constituent(quotient, position)], length=1)
    wall = levi_wall(chi)
    if wall is None:
        logger.warning("%s: reducible but no Levi row covers it", induced)
        rest = reps.Unresolved("G2", "other constituents of IB({}, {})".format(
            *_orbit_pair(chi)))
        return _structure(induced, [Constituent(quotient, position),
                                    Constituent(rest, SUBQUOTIENT)])
    parabolic, s, nu = wall
    engine = decompose_IP if parabolic == "P" else decompose_IQ
    logger.debug("%s: reducible, I_%s(%s) on ps(%s|.|^1/2, %s|.|^-1/2)",
                 induced, parabolic, s, nu, nu)
    others = [c.rep for tau in (reps.GL2Steinberg(nu), reps.GL2OneDim(nu))
              for c in engine(s, tau).constituents]
    try:
        others.remove(quotient)
    except ValueError:
        raise InvariantViolation("{} is missing from the {} rows at s = {}"
                                 .format(quotient, parabolic, s))
    return _structure(induced, [Constituent(quotient, position)]
                      + [Constituent(rep, SUBQUOTIENT) for rep in others])


def _wall_centres(orbit, parabolic, unit):
    # the Levi coroot value is c1 / c2 on P and c2 on Q
    for x in orbit:
        if parabolic == "P" and x.c1 / x.c2 == unit:
            yield x.c2.twist(HALF)
        elif parabolic == "Q" and x.c2 == unit:
            yield x.c1.twist(HALF)


def levi_wall(chi):
    """(parabolic, s, nu) with I_B(chi) = I(s, ps(nu|.|^1/2, nu|.|^-1/2)).

    The point is chosen from the Weyl orbit, P before Q and s >= 0 when
    possible, so the whole orbit factors the same way.  None off the walls.
    """
    unit = chi.registry.absolute(1)
    orbit = sorted(chi.weyl_orbit(), key=str)
    for parabolic in ("P", "Q"):
        centres = list(_wall_centres(orbit, parabolic, unit))
        if centres:
            centre = min(centres, key=lambda c: c.exponent < 0)
            return parabolic, centre.exponent, centre.unitary_part()
    return None


def _orbit_pair(chi):
    rep = reps.orbit_representative(chi)
    return rep.c1, rep.c2


# -- G2 maximal parabolics -----------------------------------------------------

def decompose_IP(s, tau):
    """Constituents of I_P(s, tau) for unitary tau.

    Raises:
        PreconditionError: if tau is not unitary.
    """
    _check_unitary(tau)
    s = to_fraction(s)
    induced = _label("IP", s, tau)
    if s < 0:
        return decompose_IP(-s, tau.contragredient()).dual(induced)
    if isinstance(tau, reps.GL2PrincipalSeries):
        return decompose_IB_G2(reps.ip_torus(s, tau.chi1, tau.chi2), induced)
    if isinstance(tau, reps.GL2Supercuspidal):
        return _ip_supercuspidal(induced, s, tau)
    if isinstance(tau, reps.GL2Steinberg):
        return _ip_steinberg(induced, s, tau)
    return _ip_one_dim(induced, s, tau)


def _ip_supercuspidal(induced, s, tau):
    if s == 0:
        if reps.splits_at_zero_p(tau):
            return _split(induced, reps.IPSummand, tau)
        return _single(induced, reps.IPIrred(tau), s)
    if tau.self_dual and tau.central.is_trivial and s == HALF:
        return _pair(induced, reps.DeltaP(tau), reps.JP(s, tau))
    return _single(induced, reps.JP(s, tau), s)


def _ip_steinberg(induced, s, tau):
    chi = tau.chi
    if s == 0:
        return _single(induced, reps.IPIrred(tau), s)
    if chi.is_trivial:
        if s == HALF:
            return _structure(induced, [Constituent(reps.PiGen(chi), SUB),
                                        Constituent(reps.JQ(s, tau), SUBQUOTIENT),
                                        Constituent(reps.JP(s, tau), QUOTIENT)])
        if s == Fraction(3, 2):
            return _pair(induced, reps.StG2(), reps.JP(s, tau))
    elif (_is_order(chi, 2) or _is_order(chi, 3)) and s == HALF:
        return _pair(induced, reps.PiGen(chi), reps.JP(s, tau))
    return _single(induced, reps.JP(s, tau), s)


def _ip_one_dim(induced, s, tau):
    chi = tau.chi
    mu1, mu2 = tau.support()
    quotient = reps.langlands_quotient_of_torus(reps.ip_torus(s, mu1, mu2))
    st = reps.GL2Steinberg
    if chi.is_trivial:
        if s == HALF:
            return _structure(induced, [Constituent(reps.PiDeg1(), SUB),
                                        Constituent(reps.JQ(s, st(chi)), SUBQUOTIENT),
                                        Constituent(quotient, QUOTIENT)])
        if s == Fraction(3, 2):
            return _pair(induced, reps.JQ(Fraction(5, 2), st(chi)), quotient)
    elif _is_order(chi, 2) and s == HALF:
        return _pair(induced, reps.JQ(s, st(chi)), quotient)
    elif _is_order(chi, 3) and s == HALF:
        return _pair(induced, reps.JP(s, st(chi.inverse())), quotient)
    return _single(induced, quotient, s)


def decompose_IQ(s, tau):
    """Constituents of I_Q(s, tau) for unitary tau.

    Raises:
        PreconditionError: if tau is not unitary, or is a self-dual
            supercuspidal with nontrivial central character and no S3 flag.
    """
    _check_unitary(tau)
    reps.require_s3_flag(tau)
    s = to_fraction(s)
    induced = _label("IQ", s, tau)
    if s < 0:
        return decompose_IQ(-s, tau.contragredient()).dual(induced)
    if isinstance(tau, reps.GL2PrincipalSeries):
        return decompose_IB_G2(reps.iq_torus(s, tau.chi1, tau.chi2), induced)
    if isinstance(tau, reps.GL2Supercuspidal):
        return _iq_supercuspidal(induced, s, tau)
    if isinstance(tau, reps.GL2Steinberg):
        return _iq_steinberg(induced, s, tau)
    return _iq_one_dim(induced, s, tau)


def _iq_supercuspidal(induced, s, tau):
    if s == 0:
        if reps.splits_at_zero_q(tau):
            return _split(induced, reps.IQSummand, tau)
        return _single(induced, reps.IQIrred(tau), s)
    if tau.self_dual and tau.central.is_trivial and s == HALF:
        return _pair(induced, reps.DeltaQ(tau), reps.JQ(s, tau))
    if tau.dihedral_s3 and s == 1:
        return _pair(induced, reps.PiGen(tau), reps.JQ(s, tau))
    return _single(induced, reps.JQ(s, tau), s)


def _iq_steinberg(induced, s, tau):
    chi = tau.chi
    if s == 0:
        return _single(induced, reps.IQIrred(tau), s)
    if chi.is_trivial:
        if s == HALF:
            return _structure(induced, [Constituent(reps.PiGen(chi), SUB),
                                        Constituent(reps.PiDeg1(), SUB),
                                        Constituent(reps.JQ(s, tau), QUOTIENT)])
        if s == Fraction(5, 2):
            return _pair(induced, reps.StG2(), reps.JQ(s, tau))
    elif _is_order(chi, 2) and s == HALF:
        return _pair(induced, reps.PiGen(chi), reps.JQ(s, tau))
    return _single(induced, reps.JQ(s, tau), s)


def _iq_one_dim(induced, s, tau):
    chi = tau.chi
    mu1, mu2 = tau.support()
    quotient = reps.langlands_quotient_of_torus(reps.iq_torus(s, mu1, mu2))
    st = reps.GL2Steinberg
    if chi.is_trivial:
        if s == HALF:
            return _structure(induced, [Constituent(reps.JQ(s, st(chi)), SUB),
                                        Constituent(reps.JP(s, st(chi)), SUBQUOTIENT),
                                        Constituent(quotient, QUOTIENT)])
        if s == Fraction(5, 2):
            return _pair(induced, reps.JP(Fraction(3, 2), st(chi)), quotient)
    elif _is_order(chi, 2) and s == HALF:
        return _pair(induced, reps.JP(s, st(chi)), quotient)
    return _single(induced, quotient, s)


def borel_support(pi, registry=None):
    """The orbit representative of the torus character supporting ``pi``.

    None for representations whose cuspidal support lies on a proper Levi
    with supercuspidal data, and for constituents the tables leave open.
    """
    registry = registry or Registry.default()
    if isinstance(pi, (reps.StG2, reps.TrivG2)):
        rho = TorusCharG2(registry.absolute(2), registry.absolute(1))
        return reps.orbit_representative(rho)
    if isinstance(pi, (reps.JB, reps.IBIrred, reps.IBSummand)):
        return reps.orbit_representative(pi.chi)
    if isinstance(pi, (reps.JP, reps.IPIrred)):
        return _levi_support(pi.tau, getattr(pi, "s", 0), reps.ip_torus)
    if isinstance(pi, (reps.JQ, reps.IQIrred)):
        return _levi_support(pi.tau, getattr(pi, "s", 0), reps.iq_torus)
    if isinstance(pi, reps.PiDeg1):
        return _levi_support(reps.GL2Steinberg(registry.trivial()), HALF,
                             reps.ip_torus)
    if isinstance(pi, reps.PiGen) and isinstance(pi.param, ExponentChar):
        return _levi_support(reps.GL2Steinberg(pi.param), HALF, reps.ip_torus)
    return None


def _levi_support(tau, s, to_torus):
    if isinstance(tau, reps.GL2Supercuspidal):
        return None
    mu1, mu2 = tau.support()
    return reps.orbit_representative(to_torus(s, mu1, mu2))


# -- PGSp6 ---------------------------------------------------------------------

def decompose_I2(s, tau):
    """Constituents of I2(s, tau x tau).

    Raises:
        NotCoveredError: for a principal series or one-dimensional tau.
    """
    _check_unitary(tau)
    reps.require_s3_flag(tau)
    s = to_fraction(s)
    induced = _label("I2", s, tau)
    if s < 0:
        return decompose_I2(-s, tau.contragredient()).dual(induced)
    if isinstance(tau, reps.GL2Supercuspidal):
        if s == 0:
            if reps.splits_at_zero_q(tau):
                return _split(induced, reps.I2Summand, tau)
            return _single(induced, reps.I2Irred(tau), s)
        if tau.self_dual and tau.central.is_trivial and s == HALF:
            return _pair(induced, reps.Delta2(tau), reps.J2(s, tau))
        if tau.dihedral_s3 and s == 1:
            return _pair(induced, reps.SigmaGen(tau), reps.J2(s, tau))
        return _single(induced, reps.J2(s, tau), s)
    if isinstance(tau, reps.GL2Steinberg):
        chi = tau.chi
        if s == 0:
            return _single(induced, reps.I2Irred(tau), s)
        if chi.is_trivial and s == Fraction(5, 2):
            return _pair(induced, reps.StP6(), reps.J2(s, tau))
        if chi.is_trivial and s == HALF:
            return _pair(induced, reps.I3Summand(reps.GL3Steinberg(chi), reps.GEN),
                         reps.J2(s, tau))
        if _is_order(chi, 2) and s == HALF:
            return _pair(induced, reps.SigmaGen(chi), reps.J2(s, tau))
        return _single(induced, reps.J2(s, tau), s)
    raise NotCoveredError("I2 is not tabulated for {}".format(tau))


def decompose_I13(s, tau):
    """Constituents of I13(s, tau x 1).

    Only supercuspidal tau are tabulated.

    Raises:
        NotCoveredError: for any other tau.
    """
    _check_unitary(tau)
    reps.require_s3_flag(tau)
    s = to_fraction(s)
    induced = _label("I13", s, tau)
    if s < 0:
        return decompose_I13(-s, tau.contragredient()).dual(induced)
    if isinstance(tau, reps.GL2Supercuspidal):
        if s == 0:
            if reps.splits_at_zero_q(tau):
                return _split(induced, reps.I13Summand, tau)
            return _single(induced, reps.I13Irred(tau), s)
        if tau.self_dual and tau.central.is_trivial and s == HALF:
            unnamed = [Constituent(reps.Unresolved(
                "PGSp6", "subquotient {} of {}".format(i, induced)), SUBQUOTIENT)
                for i in (1, 2)]
            return _structure(induced, [Constituent(reps.Delta13(tau), SUB),
                                        Constituent(reps.J13(s, tau), QUOTIENT)]
                              + unnamed, length=4, resolved=False)
        return _single(induced, reps.J13(s, tau), s)
    raise NotCoveredError("I13 is not tabulated for {}".format(tau))


def decompose_I3(tau):
    """Constituents of I3(tau) for a GL3 representation tau."""
    induced = "I3({})".format(tau)
    if isinstance(tau, reps.GL3LanglandsQuotient) or not isinstance(tau, reps.GL3Rep):
        raise NotCoveredError("I3 is not tabulated for {}".format(tau))
    if isinstance(tau, reps.GL3PrincipalSeries):
        return _i3_principal_series(induced, tau)
    if tau.self_dual and not tau.has_trivial_summand:
        return _split(induced, reps.I3Summand, tau)
    return _structure(induced, [Constituent(reps.I3Irred(tau), DIRECT_SUMMAND)])


def _i3_principal_series(induced, tau):
    chars = tau.characters()
    shifted = any(_shifted_by_one(c) for c in chars) or any(
        _shifted_by_one(chars[i] / chars[j]) for i in range(3) for j in range(3) if i != j)
    if shifted:
        rest = reps.Unresolved("PGSp6", "constituents of {}".format(induced))
        return _structure(induced, [Constituent(rest, SUBQUOTIENT)], length=None,
                          resolved=False)
    if tau.tempered and reps.three_distinct_quadratics(chars):
        return _split(induced, reps.I3Summand, tau)
    if tau.tempered:
        return _structure(induced, [Constituent(reps.I3Irred(tau), DIRECT_SUMMAND)])
    only = reps.Unresolved("PGSp6", "irreducible {}".format(induced))
    return _structure(induced, [Constituent(only, SUBQUOTIENT)], length=1,
                      resolved=False)


def decompose_I1(s, tau):
    """Constituents of I1(s, tau) for a GSp4 supercuspidal tau.

    Raises:
        PreconditionError: if tau lacks a trivial central character or a
            trivial summand in its standard parameter.
    """
    reps.check_p1_datum(tau)
    s = to_fraction(s)
    induced = _label("I1", s, tau)
    if s < 0:
        return decompose_I1(-s, tau.contragredient()).dual(induced)
    if s == 0:
        return _single(induced, reps.I1Irred(tau), s)
    if s == HALF:
        return _pair(induced, reps.Delta1(tau), reps.J1(s, tau))
    return _single(induced, reps.J1(s, tau), s)


ENGINES = {
    ("G2", "P"): decompose_IP,
    ("G2", "Q"): decompose_IQ,
    ("PGSp6", "P2"): decompose_I2,
    ("PGSp6", "P13"): decompose_I13,
    ("PGSp6", "P1"): decompose_I1,
}


def decompose(group, parabolic, s, datum):
    """Dispatch to the engine for (group, parabolic).

    The Borel of G2 takes a torus character and ignores ``s``; P3 of PGSp6
    takes a GL3 datum and ignores ``s``.

    Raises:
        NotFoundError: if the parabolic is not tabulated.
        NotCoveredError: if no engine decomposes its inductions.
    """
    parabolic_data(group, parabolic)
    if (group, parabolic) == ("G2", "B"):
        return decompose_IB_G2(datum)
    if (group, parabolic) == ("PGSp6", "P3"):
        return decompose_I3(datum)
    try:
        engine = ENGINES[(group, parabolic)]
    except KeyError:
        raise NotCoveredError("no engine for {} {}".format(group, parabolic))
    return engine(s, datum)
