"""The three theta-correspondence oracles for G2 and the checks built on them.

The dual pairs are PD^x x G2 inside E6 (``theta_D``), (PGL3 x| Z/2) x G2
inside E6 x| Z/2 (``theta_B``) and G2 x PGSp6 inside E7.  Every oracle
returns a :class:`LiftResult`, which is ``zero``, a named representation
or ``unknown``; zero and unknown are never interchangeable.

The residue characteristic enters through ``p_context``: the p = 3 branch
of the PD^x table and the p = 2 branch of self-dual GL3 supercuspidals.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import reps
from .chars import (ExponentChar, Registry, TorusCharG2, borel_char_triple,
                    torus_from_triple)
from .config import normalize_p_context
from .errors import (InvariantViolation, NotCoveredError, PContextError,
                     PreconditionError)
from .reducibility import borel_reducibility_condition

logger = logging.getLogger(__name__)

ZERO = "Zero"
REP = "Rep"
UNKNOWN = "Unknown"

FROM_D = "FromD"
FROM_B = "FromB"
FROM_SL2 = "FromSL2tilde"
PLAIN = "Plain"
NAMED = "Named"

PD_SIDE = "PDx"
P6_SIDE = "PGSp6"
PGL3_SIDE = "PGL3"


@dataclass(frozen=True)
class LiftResult:
    """The value of one theta lift.

    ``target`` names the group the lift lands in.  ``provenance`` is the
    provenance tag of the G2 representation involved, on either side of
    the correspondence.
    """

    kind: str
    target: str
    rep: Optional[object] = None
    big_theta_note: Optional[str] = None
    provenance: Optional[str] = None

    @classmethod
    def zero(cls, target, provenance=None):
        return cls(ZERO, target, provenance=provenance)

    @classmethod
    def unknown(cls, target, provenance=None, note=None):
        return cls(UNKNOWN, target, big_theta_note=note, provenance=provenance)

    @classmethod
    def of(cls, rep, note=None, provenance=None):
        return cls(REP, rep.group, rep, note, provenance)

    @property
    def is_zero(self):
        return self.kind == ZERO

    @property
    def is_unknown(self):
        return self.kind == UNKNOWN

    @property
    def is_rep(self):
        return self.kind == REP

    def as_dict(self):
        return {
            "value": self.kind,
            "rep": None if self.rep is None else str(self.rep),
            "target": self.target,
            "big_theta_note": self.big_theta_note,
            "provenance": self.provenance,
        }

    def __str__(self):
        return str(self.rep) if self.is_rep else self.kind


def provenance(pi):
    """The provenance tag the G2 oracles dispatch on."""
    if isinstance(pi, reps.ScFromPD):
        return FROM_D
    if isinstance(pi, reps.ScFromB):
        return FROM_B
    if isinstance(pi, reps.ScAbstract):
        return FROM_SL2 if pi.rho is not None else PLAIN
    if reps.is_g2_rep(pi):
        return NAMED
    return None


def _g2(rep, note=None):
    return LiftResult.of(rep, note, provenance(rep))


def _check_g2(pi):
    if not reps.is_g2_rep(pi):
        raise PreconditionError("expected a G2 representation, got {}".format(pi))


def _require_p(p_context, wanted, what):
    if normalize_p_context(p_context) != wanted:
        raise PContextError("{} only occurs when p = {}".format(what, wanted))


# -- PD^x -> G2 ----------------------------------------------------------------

def theta_D_to_G2(tau, p_context="other"):
    """The lift of a PD^x representation to G2.

    Raises:
        PContextError: for a ``heart=no`` or ``heart=unknown`` datum outside
            the p = 3 context, where every representation is in the heart.
    """
    if not isinstance(tau, reps.PDxRep):
        raise PreconditionError("expected a PD^x representation, got {}".format(tau))
    if isinstance(tau, reps.PDTrivial):
        return _g2(reps.PiDeg1())
    if isinstance(tau, reps.PDUnramifiedCubic):
        return _g2(reps.PiSc("w" if tau.power == 1 else "w2"))
    if tau.heart == "yes":
        return _g2(reps.ScFromPD(tau))
    _require_p(p_context, "3", "a PD^x representation outside the heart")
    if tau.heart == "no":
        return LiftResult.zero("G2")
    return LiftResult.unknown("G2", note="membership in the heart is open")


# -- PGL3 x| Z/2 -> G2 ---------------------------------------------------------

def _plus_minus(ext):
    return reps.GEN if ext == reps.PLUS else reps.DEG


def theta_B_to_G2(tau, p_context="other"):
    """The lift of a representation of PGL3 x| Z/2 to G2.

    Raises:
        PContextError: for a self-dual GL3 supercuspidal when p != 2.
        NotCoveredError: for a reducible principal-series datum, or one
            whose G2 principal series is reducible.
    """
    if not isinstance(tau, reps.PGL3ExtRep):
        raise PreconditionError("expected a PGL3 x| Z/2 representation, got {}"
                                .format(tau))
    if tau.theta_null:
        logger.debug("%s lifts to zero", tau)
        return LiftResult.zero("G2")
    base, ext = tau.base, tau.ext
    if isinstance(base, reps.GL3Supercuspidal):
        if base.self_dual:
            _require_p(p_context, "2", "a self-dual GL3 supercuspidal")
        return _g2(reps.ScFromB(tau))
    if isinstance(base, reps.GL3Steinberg):
        if base.chi.is_trivial:
            return _g2(reps.PiGen(base.chi) if ext == reps.PLUS else reps.PiSc("1"))
        return _g2(reps.PiGen(base.chi))
    if isinstance(base, reps.GL3Induced):
        sigma = base.sigma
        if ext != reps.IND and not base.has_trivial_summand:
            return _g2(reps.IPSummand(sigma, _plus_minus(ext)))
        return _g2(reps.IPIrred(sigma))
    if isinstance(base, reps.GL3PrincipalSeries):
        return _theta_B_principal_series(base, ext)
    if isinstance(base, reps.GL3LanglandsQuotient):
        return _g2(reps.jq(Fraction(1, 2), reps.GL2PrincipalSeries(base.chi, base.chi)))
    raise NotCoveredError("no lift recorded for {}".format(tau))


def _theta_B_principal_series(base, ext):
    if not base.irreducible:
        raise NotCoveredError("{} is reducible".format(base))
    chi = torus_from_triple(base.characters())
    if reps.three_distinct_quadratics(base.characters()):
        return _g2(reps.IBSummand(chi, _plus_minus(ext)))
    if borel_reducibility_condition(chi):
        raise NotCoveredError("I_B({}) is reducible; its lift is not tabulated"
                              .format(chi))
    return _g2(reps.langlands_quotient_of_torus(chi))


# -- G2 -> PGSp6 ---------------------------------------------------------------

def _torus_of(pi, registry):
    if isinstance(pi, reps.TrivG2):
        return TorusCharG2(registry.absolute(2), registry.absolute(1))
    return pi.chi


def factor_through_p(chi):
    """(s, tau) with I_B(chi) = I_P(s, tau) and tau centered at |det|^0.

    tau is the principal series pi(mu1, mu2) with mu_i = c_i |.|^-s, or the
    character it contains when mu1 / mu2 = |.|.
    """
    a1, a2 = chi.exponents()
    s = (a1 + a2) / 2
    mu1, mu2 = chi.c1.twist(-s), chi.c2.twist(-s)
    ratio = mu1 / mu2
    if not ratio.torsion and abs(ratio.exponent) == 1:
        top = mu1 if ratio.exponent == 1 else mu2
        return s, reps.GL2OneDim(top.twist(Fraction(-1, 2)))
    return s, reps.GL2PrincipalSeries(mu1, mu2)


def _nontempered_to_p6(pi, registry):
    if isinstance(pi, reps.JQ):
        note = "quotient of I2({}; {} x {})".format(pi.s, pi.tau, pi.tau)
        return LiftResult.of(reps.J2(pi.s, pi.tau), note, NAMED)
    if isinstance(pi, reps.JP):
        s, tau = pi.s, pi.tau
    elif isinstance(pi, (reps.JB, reps.TrivG2)):
        s, tau = factor_through_p(_torus_of(pi, registry))
    else:
        raise NotCoveredError("no lift recorded for {}".format(pi))
    note = "quotient of I13({}; {} x 1)".format(s, tau)
    return LiftResult.of(reps.J13(s, tau), note, NAMED)


def _from_b_to_p6(pi):
    """Tempered representations lifting from PGL3 x| Z/2 go to I3."""
    if isinstance(pi, reps.PiGen) and isinstance(pi.param, ExponentChar):
        if pi.param.is_trivial:
            return reps.I3Summand(reps.GL3Steinberg(pi.param), reps.GEN)
        if pi.param.is_cubic:
            return reps.I3Irred(reps.GL3Steinberg(pi.param))
        return None
    if isinstance(pi, reps.IPIrred):
        return reps.I3Irred(reps.GL3Induced(pi.tau))
    if isinstance(pi, reps.IPSummand):
        return reps.I3Summand(reps.GL3Induced(pi.tau), pi.kind)
    if isinstance(pi, (reps.IBIrred, reps.IBSummand)):
        base = reps.GL3PrincipalSeries(*borel_char_triple(pi.chi))
        if isinstance(pi, reps.IBIrred):
            return reps.I3Irred(base)
        return reps.I3Summand(base, pi.kind)
    if isinstance(pi, reps.ScFromB):
        base, ext = pi.source.base, pi.source.ext
        if ext == reps.IND:
            return reps.I3Irred(base)
        return reps.I3Summand(base, _plus_minus(ext))
    return None


def _registry_for(registry):
    if registry is None:
        registry = Registry.default()
    return registry


def theta_G2_to_P6(pi, p_context="other", registry=None):
    """The lift of a G2 representation to PGSp6.

    Non-tempered representations go to the Langlands quotient of the
    matching degenerate principal series; tempered ones follow the
    tables by provenance.  Representations lifting from PD^x lift to zero.
    """
    _check_g2(pi)
    tag = provenance(pi)
    if isinstance(pi, reps.Unresolved) or isinstance(pi, reps.AbstractMember):
        return LiftResult.unknown(P6_SIDE, tag, "constituent not identified")
    if not pi.tempered:
        return _nontempered_to_p6(pi, _registry_for(registry))
    if isinstance(pi, reps.ScFromB) and pi.source.base.self_dual:
        _require_p(p_context, "2", "a lift of a self-dual GL3 supercuspidal")
    if isinstance(pi, (reps.PiDeg1, reps.ScFromPD)) or (
            isinstance(pi, reps.PiSc) and pi.label in ("w", "w2")):
        return LiftResult.zero(P6_SIDE, tag)
    if isinstance(pi, reps.PiSc) and pi.label == "-1":
        return LiftResult.unknown(P6_SIDE, tag, "both lifts are open for pi_sc[-1]")
    named = {
        reps.StG2: lambda: reps.StP6(),
        reps.DeltaQ: lambda: reps.Delta2(pi.tau),
        reps.DeltaP: lambda: reps.Delta13(pi.tau),
        reps.IQIrred: lambda: reps.I2Irred(pi.tau),
        reps.IQSummand: lambda: reps.I2Summand(pi.tau, pi.kind),
    }
    if type(pi) in named:
        return LiftResult.of(named[type(pi)](), provenance=tag)
    if isinstance(pi, reps.PiGen) and (
            isinstance(pi.param, reps.GL2Supercuspidal) or pi.param.is_quadratic):
        return LiftResult.of(reps.SigmaGen(pi.param), provenance=tag)
    if isinstance(pi, reps.ScAbstract):
        if pi.rho is not None:
            return LiftResult.of(reps.Delta1(reps.GSp4Supercuspidal(rho=pi.rho)),
                                 provenance=tag)
        return LiftResult.of(
            reps.ScAbstractP6("theta_" + pi.label, pi.generic_flag,
                              source_label=pi.label),
            provenance=tag)
    if isinstance(pi, reps.PiSc) and pi.label == "1":
        sigma = reps.I3Summand(reps.GL3Steinberg(_registry_for(registry).trivial()),
                               reps.DEG)
    else:
        sigma = _from_b_to_p6(pi)
    if sigma is None:
        raise NotCoveredError("no PGSp6 lift recorded for {}".format(pi))
    return LiftResult.of(sigma, provenance=tag)


# -- PGSp6 -> G2 ---------------------------------------------------------------

def theta_P6_to_G2(sigma, p_context="other"):
    """The lift of a PGSp6 representation back to G2.

    Tempered representations are inverted through the forward table;
    those outside its recorded image give ``unknown``.
    """
    if not reps.is_p6_rep(sigma):
        raise PreconditionError("expected a PGSp6 representation, got {}"
                                .format(sigma))
    if isinstance(sigma, reps.J2):
        note = "quotient of IQ({}; {})".format(sigma.s, sigma.tau)
        return _g2(reps.jq(sigma.s, sigma.tau), note)
    if isinstance(sigma, reps.J13):
        note = "quotient of IP({}; {})".format(sigma.s, sigma.tau)
        return _g2(reps.jp(sigma.s, sigma.tau), note)
    if isinstance(sigma, reps.J1):
        return LiftResult.zero("G2")
    inverse = {
        reps.StP6: lambda: reps.StG2(),
        reps.Delta2: lambda: reps.DeltaQ(sigma.tau),
        reps.Delta13: lambda: reps.DeltaP(sigma.tau),
        reps.SigmaGen: lambda: reps.PiGen(sigma.param),
        reps.I2Irred: lambda: reps.IQIrred(sigma.tau),
        reps.I2Summand: lambda: reps.IQSummand(sigma.tau, sigma.kind),
    }
    if type(sigma) in inverse:
        return _g2(inverse[type(sigma)]())
    if isinstance(sigma, reps.Delta1) and sigma.tau.rho is not None:
        return _g2(reps.ScAbstract("pi_rho", False, sigma.tau.rho))
    if isinstance(sigma, reps.ScAbstractP6) and sigma.source_label is not None:
        return _g2(reps.ScAbstract(sigma.source_label, sigma.generic_flag))
    if isinstance(sigma, reps.I3Irred):
        tau = sigma.tau
        ext = reps.PLUS if tau.self_dual else reps.IND
        return theta_B_to_G2(reps.PGL3ExtRep(tau, ext), p_context)
    if isinstance(sigma, reps.I3Summand):
        ext = reps.PLUS if sigma.kind == reps.GEN else reps.MINUS
        return theta_B_to_G2(reps.PGL3ExtRep(sigma.tau, ext), p_context)
    return LiftResult.unknown("G2", note="outside the recorded image")


# -- inverse tables ------------------------------------------------------------

def theta_G2_to_D(pi, registry=None):
    """The PD^x representation lifting to ``pi``, or zero."""
    _check_g2(pi)
    tag = provenance(pi)
    if isinstance(pi, reps.PiDeg1):
        return LiftResult.of(reps.PDTrivial(), provenance=tag)
    if isinstance(pi, reps.ScFromPD):
        return LiftResult.of(pi.source, provenance=tag)
    if isinstance(pi, reps.PiSc) and pi.label in ("w", "w2"):
        registry = _registry_for(registry)
        sym = registry.unramified_symbol(3)
        if sym is None:
            raise NotCoveredError("registry {} declares no unramified cubic "
                                  "character".format(registry.name))
        chi = registry.char(sym.name).power(1 if pi.label == "w" else 2)
        return LiftResult.of(reps.PDUnramifiedCubic(chi), provenance=tag)
    if (isinstance(pi, reps.PiSc) and pi.label == "-1") or isinstance(
            pi, (reps.AbstractMember, reps.Unresolved)):
        return LiftResult.unknown(PD_SIDE, tag)
    return LiftResult.zero(PD_SIDE, tag)


def _gl3_ext(base):
    return reps.PGL3ExtRep(base, reps.PLUS if base.self_dual else reps.IND)


def theta_G2_to_B(pi, registry=None):
    """The representation of PGL3 x| Z/2 lifting to a tempered ``pi``, or zero.

    Raises:
        PreconditionError: if ``pi`` is not tempered.
    """
    _check_g2(pi)
    tag = provenance(pi)
    if isinstance(pi, (reps.AbstractMember, reps.Unresolved)) or (
            isinstance(pi, reps.PiSc) and pi.label == "-1"):
        return LiftResult.unknown(PGL3_SIDE, tag)
    if not pi.tempered:
        raise PreconditionError("the inverse PGL3 table covers tempered "
                                "representations only, got {}".format(pi))
    registry = _registry_for(registry)
    source = None
    if isinstance(pi, reps.ScFromB):
        source = pi.source
    elif isinstance(pi, reps.PiGen) and isinstance(pi.param, ExponentChar):
        if pi.param.is_trivial:
            source = reps.PGL3ExtRep(reps.GL3Steinberg(pi.param), reps.PLUS)
        elif pi.param.is_cubic:
            source = reps.PGL3ExtRep(reps.GL3Steinberg(pi.param), reps.IND)
    elif isinstance(pi, reps.PiSc) and pi.label == "1":
        source = reps.PGL3ExtRep(reps.GL3Steinberg(registry.trivial()), reps.MINUS)
    elif isinstance(pi, reps.IPIrred):
        source = _gl3_ext(reps.GL3Induced(pi.tau))
    elif isinstance(pi, reps.IPSummand):
        source = reps.PGL3ExtRep(reps.GL3Induced(pi.tau),
                                 reps.PLUS if pi.kind == reps.GEN else reps.MINUS)
    elif isinstance(pi, reps.IBIrred):
        source = _gl3_ext(reps.GL3PrincipalSeries(*borel_char_triple(pi.chi)))
    elif isinstance(pi, reps.IBSummand):
        source = reps.PGL3ExtRep(
            reps.GL3PrincipalSeries(*borel_char_triple(pi.chi)),
            reps.PLUS if pi.kind == reps.GEN else reps.MINUS)
    if source is None:
        return LiftResult.zero(PGL3_SIDE, tag)
    return LiftResult.of(source, provenance=tag)


# -- global checks -------------------------------------------------------------

def dichotomy(pi, p_context="other", registry=None):
    """The side of the PD^x / PGSp6 dichotomy where ``pi`` lifts.

    Returns ``"PDx"``, ``"PGSp6"`` or ``"Unknown"``.

    Raises:
        InvariantViolation: if both lifts or neither lift is nonzero.
    """
    d_side = theta_G2_to_D(pi, registry)
    p6_side = theta_G2_to_P6(pi, p_context, registry)
    if d_side.is_unknown or p6_side.is_unknown:
        return UNKNOWN
    if d_side.is_rep == p6_side.is_rep:
        raise InvariantViolation(
            "{}: PD^x lift {} and PGSp6 lift {} violate the dichotomy".format(
                pi, d_side, p6_side))
    return PD_SIDE if d_side.is_rep else P6_SIDE


def discrete_series_target(pi, p_context="other", registry=None):
    """The one group among PD^x, PGL3 and PGSp6 where ``pi`` lifts to a
    discrete series.

    Raises:
        PreconditionError: if ``pi`` is not a discrete series.
        InvariantViolation: if the count of such groups is not one.
    """
    _check_g2(pi)
    if not pi.discrete_series:
        raise PreconditionError("{} is not a discrete series".format(pi))
    lifts = (
        (PD_SIDE, theta_G2_to_D(pi, registry)),
        (PGL3_SIDE, theta_G2_to_B(pi, registry)),
        (P6_SIDE, theta_G2_to_P6(pi, p_context, registry)),
    )
    if any(lift.is_unknown for _, lift in lifts):
        return UNKNOWN
    targets = [side for side, lift in lifts
               if lift.is_rep and lift.rep.discrete_series]
    if len(targets) != 1:
        raise InvariantViolation("{} lifts to a discrete series of {}".format(
            pi, ", ".join(targets) or "no group"))
    logger.debug("%s: discrete series lift on %s", pi, targets[0])
    return targets[0]
