"""Irreducible representations named by the engines.

Every value is an immutable dataclass whose ``__str__`` is its literal (see
:mod:`g2theta.literals`).  Temperedness, discreteness and genericity are
derived from the constructor and never stored as free flags, except for
abstract supercuspidals whose genericity is part of their input.
"""
import logging
import re
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from . import rootsys
from .chars import ExponentChar, TorusCharG2, to_fraction
from .errors import NotCoveredError, PreconditionError

logger = logging.getLogger(__name__)

GEN = "gen"
DEG = "deg"
SUMMAND_KINDS = (GEN, DEG)

_LABEL_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*(\([A-Za-z][A-Za-z0-9_]*\))?$")


def _check_label(label):
    if not isinstance(label, str) or not _LABEL_RE.match(label):
        raise PreconditionError("invalid label {!r}".format(label))


def _check_kind(kind):
    if kind not in SUMMAND_KINDS:
        raise PreconditionError("summand kind must be gen or deg, got {!r}"
                                .format(kind))


def _fmt(s):
    return str(Fraction(s))


def _twist_suffix(s):
    return "" if s == 0 else "*|det|^{}".format(_fmt(s))


def _canonical(value, dual):
    """The literal-least of a value and its dual."""
    return min((value, dual), key=str)


class Rep:
    """Common predicates; subclasses override what differs."""

    group = None

    @property
    def tempered(self):
        return False

    @property
    def discrete_series(self):
        return False

    @property
    def generic(self):
        return False

    def contragredient(self):
        # irreducible representations of G2 and PGSp6 are self-dual
        return self


# -- GL2 -----------------------------------------------------------------------

class GL2Rep(Rep):
    group = "GL2"

    @property
    def registry(self):
        return self.central_character().registry

    @property
    def unitary(self):
        """True when the representation carries no |det|^s twist."""
        return self.tempered

    @property
    def self_dual(self):
        return self.contragredient() == self


@dataclass(frozen=True)
class GL2Supercuspidal(GL2Rep):
    """An abstract supercuspidal, optionally dual and twisted."""

    label: str
    central: ExponentChar
    self_dual_flag: bool = False
    dihedral_s3: Optional[bool] = None
    dual: bool = False
    twist: Fraction = Fraction(0)

    def __post_init__(self):
        _check_label(self.label)
        object.__setattr__(self, "twist", to_fraction(self.twist))
        if not self.central.is_unitary:
            raise PreconditionError("central character of {} must be unitary"
                                    .format(self.label))
        if self.central.is_trivial:
            # sigma^v = sigma (x) w^-1
            object.__setattr__(self, "self_dual_flag", True)
            object.__setattr__(self, "dual", False)
        if self.self_dual_flag:
            if self.central.unitary_order > 2:
                raise PreconditionError(
                    "self-dual {} needs a central character of order <= 2"
                    .format(self.label))
            if self.dual:
                raise PreconditionError("a self-dual supercuspidal has no ^v form")
        if self.dihedral_s3:
            if not self.self_dual_flag or self.central.unitary_order != 2:
                raise PreconditionError(
                    "S3 image requires a self-dual {} with quadratic central "
                    "character".format(self.label))

    @property
    def self_dual(self):
        return self.self_dual_flag

    def central_character(self):
        return self.central.twist(2 * self.twist)

    def contragredient(self):
        if self.self_dual_flag:
            return replace(self, twist=-self.twist)
        return replace(self, dual=not self.dual, central=self.central.inverse(),
                       twist=-self.twist)

    def twisted(self, s):
        return replace(self, twist=self.twist + to_fraction(s))

    def split_twist(self):
        return replace(self, twist=Fraction(0)), self.twist

    @property
    def tempered(self):
        return self.twist == 0

    @property
    def discrete_series(self):
        return self.twist == 0

    @property
    def generic(self):
        return True

    def __str__(self):
        parts = [self.label]
        if self.self_dual_flag:
            parts.append("sd")
        if not self.central.is_trivial:
            parts.append("w={}".format(self.central))
        if self.dihedral_s3 is True:
            parts.append("S3")
        elif self.dihedral_s3 is False:
            parts.append("notS3")
        text = "sc({})".format(", ".join(parts))
        if self.dual:
            text += "^v"
        return text + _twist_suffix(self.twist)


@dataclass(frozen=True)
class GL2Steinberg(GL2Rep):
    """st_chi; any |det|^s twist is carried by chi."""

    chi: ExponentChar

    def central_character(self):
        return self.chi.power(2)

    def contragredient(self):
        return GL2Steinberg(self.chi.inverse())

    def twisted(self, s):
        return GL2Steinberg(self.chi.twist(s))

    def split_twist(self):
        return GL2Steinberg(self.chi.unitary_part()), self.chi.exponent

    def support(self):
        return (self.chi.twist(Fraction(1, 2)), self.chi.twist(Fraction(-1, 2)))

    @property
    def tempered(self):
        return self.chi.is_unitary

    @property
    def discrete_series(self):
        return self.chi.is_unitary

    @property
    def generic(self):
        return True

    def __str__(self):
        return "st({})".format(self.chi)


@dataclass(frozen=True)
class GL2PrincipalSeries(GL2Rep):
    """An irreducible principal series pi(chi1, chi2), characters sorted."""

    chi1: ExponentChar
    chi2: ExponentChar

    def __post_init__(self):
        a, b = sorted((self.chi1, self.chi2), key=str)
        object.__setattr__(self, "chi1", a)
        object.__setattr__(self, "chi2", b)
        ratio = a / b
        if not ratio.torsion and abs(ratio.exponent) == 1:
            raise PreconditionError("pi({}, {}) is reducible".format(a, b))

    def central_character(self):
        return self.chi1 * self.chi2

    def contragredient(self):
        return GL2PrincipalSeries(self.chi1.inverse(), self.chi2.inverse())

    def twisted(self, s):
        return GL2PrincipalSeries(self.chi1.twist(s), self.chi2.twist(s))

    def support(self):
        return (self.chi1, self.chi2)

    @property
    def tempered(self):
        return self.chi1.is_unitary and self.chi2.is_unitary

    @property
    def generic(self):
        return True

    def __str__(self):
        return "ps({}, {})".format(self.chi1, self.chi2)


@dataclass(frozen=True)
class GL2OneDim(GL2Rep):
    """The character chi o det."""

    chi: ExponentChar

    def central_character(self):
        return self.chi.power(2)

    def contragredient(self):
        return GL2OneDim(self.chi.inverse())

    def twisted(self, s):
        return GL2OneDim(self.chi.twist(s))

    def support(self):
        return (self.chi.twist(Fraction(1, 2)), self.chi.twist(Fraction(-1, 2)))

    @property
    def unitary(self):
        return self.chi.is_unitary

    def __str__(self):
        return "one({})".format(self.chi)


def central_character(tau):
    return tau.central_character()


def gl2_unitary(tau):
    """The normalization of I(s, tau): tau carries no real twist."""
    if isinstance(tau, GL2PrincipalSeries):
        return tau.tempered
    return tau.unitary


def gl2_needs_s3_flag(tau):
    """A self-dual supercuspidal with nontrivial central character."""
    return (isinstance(tau, GL2Supercuspidal) and tau.self_dual
            and not tau.central.is_trivial)


def require_s3_flag(tau):
    if gl2_needs_s3_flag(tau) and tau.dihedral_s3 is None:
        raise PreconditionError(
            "{} needs an explicit S3 or notS3 flag".format(tau))


# -- GL3 and its extensions ----------------------------------------------------

class GL3Rep(Rep):
    group = "GL3"

    @property
    def self_dual(self):
        return self.contragredient() == self

    @property
    def has_trivial_summand(self):
        return False


@dataclass(frozen=True)
class GL3Supercuspidal(GL3Rep):
    label: str
    self_dual_flag: bool = False
    dual: bool = False

    def __post_init__(self):
        _check_label(self.label)
        if self.self_dual_flag and self.dual:
            raise PreconditionError("a self-dual supercuspidal has no ^v form")

    @property
    def self_dual(self):
        return self.self_dual_flag

    def contragredient(self):
        if self.self_dual_flag:
            return self
        return replace(self, dual=not self.dual)

    tempered = property(lambda self: True)
    discrete_series = property(lambda self: True)
    generic = property(lambda self: True)

    def __str__(self):
        text = "sc3({}{})".format(self.label, ", sd" if self.self_dual_flag else "")
        return text + ("^v" if self.dual else "")


@dataclass(frozen=True)
class GL3Steinberg(GL3Rep):
    """St_chi with chi^3 = 1."""

    chi: ExponentChar

    def __post_init__(self):
        if not self.chi.is_unitary or 3 % self.chi.unitary_order:
            raise PreconditionError("St3 needs chi^3 = 1, got {}".format(self.chi))

    def contragredient(self):
        return GL3Steinberg(self.chi.inverse())

    tempered = property(lambda self: True)
    discrete_series = property(lambda self: True)
    generic = property(lambda self: True)

    def __str__(self):
        return "St3({})".format(self.chi)


@dataclass(frozen=True)
class GL3Induced(GL3Rep):
    """The tempered ind(sigma x omega_sigma^-1) from a GL2 discrete series."""

    sigma: GL2Rep

    def __post_init__(self):
        if not self.sigma.discrete_series:
            raise PreconditionError("ind3 needs a unitary GL2 discrete series, "
                                    "got {}".format(self.sigma))

    def contragredient(self):
        return GL3Induced(self.sigma.contragredient())

    @property
    def has_trivial_summand(self):
        return self.sigma.central_character().is_trivial

    tempered = property(lambda self: True)
    generic = property(lambda self: True)

    def __str__(self):
        return "ind3({})".format(self.sigma)


@dataclass(frozen=True)
class GL3PrincipalSeries(GL3Rep):
    """tau(chi1, chi2, chi3) with chi1 chi2 chi3 = 1, characters sorted."""

    chi1: ExponentChar
    chi2: ExponentChar
    chi3: ExponentChar

    def __post_init__(self):
        chars = sorted((self.chi1, self.chi2, self.chi3), key=str)
        if not (chars[0] * chars[1] * chars[2]).is_trivial:
            raise PreconditionError("ps3 characters must multiply to 1")
        for name, c in zip(("chi1", "chi2", "chi3"), chars):
            object.__setattr__(self, name, c)

    def characters(self):
        return (self.chi1, self.chi2, self.chi3)

    def contragredient(self):
        return GL3PrincipalSeries(*(c.inverse() for c in self.characters()))

    @property
    def has_trivial_summand(self):
        return any(c.is_trivial for c in self.characters())

    @property
    def irreducible(self):
        cs = self.characters()
        for i in range(3):
            for j in range(3):
                ratio = cs[i] / cs[j]
                if i != j and not ratio.torsion and abs(ratio.exponent) == 1:
                    return False
        return True

    @property
    def tempered(self):
        return all(c.is_unitary for c in self.characters())

    @property
    def generic(self):
        return self.irreducible

    def __str__(self):
        return "ps3({}, {}, {})".format(*self.characters())


@dataclass(frozen=True)
class GL3LanglandsQuotient(GL3Rep):
    """J_B(mu), mu = chi|.|^1/2 x 1 x chi|.|^-1/2 with chi^2 = 1."""

    chi: ExponentChar

    def __post_init__(self):
        if not self.chi.is_unitary or self.chi.unitary_order > 2:
            raise PreconditionError("JB3 needs chi^2 = 1, got {}".format(self.chi))

    def contragredient(self):
        return self

    def __str__(self):
        return "JB3({})".format(self.chi)


IND = "Ind"
PLUS = "+"
MINUS = "-"


@dataclass(frozen=True)
class PGL3ExtRep(Rep):
    """An irreducible representation of PGL3 x| Z/2."""

    base: GL3Rep
    ext: str

    group = "PGL3Ext"

    def __post_init__(self):
        if self.ext not in (IND, PLUS, MINUS):
            raise PreconditionError("unknown extension tag {!r}".format(self.ext))
        if self.ext == IND:
            if self.base.self_dual:
                raise PreconditionError(
                    "{} is self-dual; use its + and - extensions".format(self.base))
            object.__setattr__(self, "base",
                               _canonical(self.base, self.base.contragredient()))
        elif not self.base.self_dual:
            raise PreconditionError(
                "{} is not self-dual and has no {} extension".format(
                    self.base, self.ext))

    @property
    def tempered(self):
        return self.base.tempered

    @property
    def discrete_series(self):
        return self.base.discrete_series

    @property
    def generic(self):
        return self.base.generic and self.ext != MINUS

    @property
    def theta_null(self):
        """The recorded convention that the minus extension lifts to zero."""
        return self.ext == MINUS and (self.base.has_trivial_summand
                                      or isinstance(self.base, GL3LanglandsQuotient))

    def __str__(self):
        if self.ext == IND:
            return "Ind({})".format(self.base)
        return "{}{}".format(self.base, self.ext)


def classify_pgl3_extension(tau):
    """The extensions of a PGL3 representation to PGL3 x| Z/2."""
    if not tau.self_dual:
        return (PGL3ExtRep(tau, IND),)
    return (PGL3ExtRep(tau, PLUS), PGL3ExtRep(tau, MINUS))


# -- PD^x ----------------------------------------------------------------------

HEART_VALUES = ("yes", "no", "unknown")


class PDxRep(Rep):
    group = "PDx"
    tempered = property(lambda self: True)
    discrete_series = property(lambda self: True)


@dataclass(frozen=True)
class PDTrivial(PDxRep):
    def __str__(self):
        return "D(1)"


@dataclass(frozen=True)
class PDUnramifiedCubic(PDxRep):
    """chi o Nrd for the unramified cubic chi or its square."""

    chi: ExponentChar

    def __post_init__(self):
        sym = self.chi.registry.unramified_symbol(3)
        if sym is None:
            raise PreconditionError("registry declares no unramified cubic symbol")
        base = self.chi.registry.char(sym.name)
        if self.chi not in (base, base.power(2)):
            raise PreconditionError("{} is not an unramified cubic character"
                                    .format(self.chi))

    @property
    def power(self):
        sym = self.chi.registry.unramified_symbol(3)
        return 1 if self.chi == self.chi.registry.char(sym.name) else 2

    def __str__(self):
        return "D({})".format(self.chi)


@dataclass(frozen=True)
class PDOther(PDxRep):
    label: str
    heart: str = "yes"

    def __post_init__(self):
        _check_label(self.label)
        if self.heart not in HEART_VALUES:
            raise PreconditionError("heart must be yes, no or unknown")

    def __str__(self):
        return "D({}; heart={})".format(self.label, self.heart)


# -- GSp4 ----------------------------------------------------------------------

@dataclass(frozen=True)
class GSp4Supercuspidal(Rep):
    """A supercuspidal of GSp4 described by the flags the P1 engine needs.

    ``rho`` marks the Saito-Kurokawa representation tau_rho, which has
    trivial central character, a trivial summand in its standard parameter
    and is non-generic.
    """

    label: str = "SK"
    trivial_central: bool = False
    std_contains_trivial: bool = False
    generic_flag: bool = True
    rho: Optional[GL2Rep] = None
    dual: bool = False

    group = "GSp4"

    def __post_init__(self):
        if self.rho is not None:
            if not self.rho.discrete_series:
                raise PreconditionError("sk() needs a discrete series rho")
            object.__setattr__(self, "label", "SK")
            object.__setattr__(self, "trivial_central", True)
            object.__setattr__(self, "std_contains_trivial", True)
            object.__setattr__(self, "generic_flag", False)
        _check_label(self.label)
        if self.trivial_central and self.dual:
            raise PreconditionError("trivial central character forces self-duality")

    tempered = property(lambda self: True)
    discrete_series = property(lambda self: True)

    @property
    def generic(self):
        return self.generic_flag

    def contragredient(self):
        if self.trivial_central:
            return self
        return replace(self, dual=not self.dual)

    def __str__(self):
        if self.rho is not None:
            return "sk({})".format(self.rho)
        parts = [self.label]
        if self.trivial_central:
            parts.append("zc")
        if self.std_contains_trivial:
            parts.append("std1")
        if self.generic_flag:
            parts.append("gen")
        return "sc4({}){}".format(", ".join(parts), "^v" if self.dual else "")


# -- G2 ------------------------------------------------------------------------

class G2Rep(Rep):
    group = "G2"


class _TemperedDS(Rep):
    tempered = property(lambda self: True)
    discrete_series = property(lambda self: True)


def _check_tempered_gl2(tau, what):
    if not isinstance(tau, GL2Rep) or not tau.tempered:
        raise PreconditionError("{} needs a tempered unitary GL2 datum, got {}"
                                .format(what, tau))


def _check_positive(s, what):
    if s <= 0:
        raise PreconditionError("{} needs a positive twist, got {}".format(what, s))


def _check_sc_self_dual_trivial(tau, what):
    if not (isinstance(tau, GL2Supercuspidal) and tau.tempered and tau.self_dual
            and tau.central.is_trivial):
        raise PreconditionError(
            "{} needs a unitary self-dual supercuspidal with trivial central "
            "character, got {}".format(what, tau))


@dataclass(frozen=True)
class StG2(G2Rep, _TemperedDS):
    generic = property(lambda self: True)

    def __str__(self):
        return "St_G2"


@dataclass(frozen=True)
class TrivG2(G2Rep):
    def __str__(self):
        return "1_G2"


@dataclass(frozen=True)
class JP(G2Rep):
    """Langlands quotient of I_P(s, tau), s > 0 and tau tempered."""

    s: Fraction
    tau: GL2Rep

    def __post_init__(self):
        object.__setattr__(self, "s", to_fraction(self.s))
        _check_positive(self.s, "JP")
        _check_tempered_gl2(self.tau, "JP")

    @property
    def generic(self):
        from .reducibility import decompose_IP
        return self.tau.generic and decompose_IP(self.s, self.tau).irreducible

    def __str__(self):
        return "JP({}; {})".format(_fmt(self.s), self.tau)


@dataclass(frozen=True)
class JQ(G2Rep):
    """Langlands quotient of I_Q(s, tau), s > 0 and tau tempered."""

    s: Fraction
    tau: GL2Rep

    def __post_init__(self):
        object.__setattr__(self, "s", to_fraction(self.s))
        _check_positive(self.s, "JQ")
        _check_tempered_gl2(self.tau, "JQ")

    @property
    def generic(self):
        from .reducibility import decompose_IQ
        return self.tau.generic and decompose_IQ(self.s, self.tau).irreducible

    def __str__(self):
        return "JQ({}; {})".format(_fmt(self.s), self.tau)


def _is_rho_point(chi):
    c1, c2 = chi.c1, chi.c2
    return (not c1.torsion and not c2.torsion
            and chi.exponents() == (Fraction(2), Fraction(1)))


@dataclass(frozen=True)
class JB(G2Rep):
    """Langlands quotient of I_B(chi) for regular dominant chi."""

    chi: TorusCharG2

    def __post_init__(self):
        a1, a2 = self.chi.exponents()
        if not a1 > a2 > 0:
            raise PreconditionError("JB needs a1 > a2 > 0, got {}".format(self.chi))
        if _is_rho_point(self.chi):
            raise PreconditionError("JB at delta_B^1/2 is the trivial representation")

    @property
    def generic(self):
        from .reducibility import decompose_IB_G2
        return decompose_IB_G2(self.chi).irreducible

    def __str__(self):
        return "JB({}, {})".format(self.chi.c1, self.chi.c2)


@dataclass(frozen=True)
class DeltaP(G2Rep, _TemperedDS):
    tau: GL2Rep

    def __post_init__(self):
        _check_sc_self_dual_trivial(self.tau, "deltaP")

    generic = property(lambda self: True)

    def __str__(self):
        return "deltaP({})".format(self.tau)


@dataclass(frozen=True)
class DeltaQ(G2Rep, _TemperedDS):
    tau: GL2Rep

    def __post_init__(self):
        _check_sc_self_dual_trivial(self.tau, "deltaQ")

    generic = property(lambda self: True)

    def __str__(self):
        return "deltaQ({})".format(self.tau)


def _check_bracket_param(param, allow_cubic, what):
    if isinstance(param, ExponentChar):
        if not param.is_unitary or param.unitary_order not in (
                (1, 2, 3) if allow_cubic else (2,)):
            raise PreconditionError("{}[{}] is not defined".format(what, param))
        if param.is_cubic:
            return _canonical(param, param.inverse())
        return param
    if isinstance(param, GL2Supercuspidal) and param.dihedral_s3 and param.tempered:
        return param
    raise PreconditionError("{}[{}] is not defined".format(what, param))


@dataclass(frozen=True)
class PiGen(G2Rep, _TemperedDS):
    """pi_gen[1], pi_gen[chi] (chi quadratic or cubic) or pi_gen[tau] (S3)."""

    param: object

    def __post_init__(self):
        object.__setattr__(self, "param",
                           _check_bracket_param(self.param, True, "pi_gen"))

    generic = property(lambda self: True)

    @property
    def is_trivial_bracket(self):
        return isinstance(self.param, ExponentChar) and self.param.is_trivial

    def __str__(self):
        return "pi_gen[{}]".format(self.param)


@dataclass(frozen=True)
class PiDeg1(G2Rep, _TemperedDS):
    def __str__(self):
        return "pi_deg[1]"


PI_SC_LABELS = ("1", "-1", "w", "w2")


@dataclass(frozen=True)
class PiSc(G2Rep, _TemperedDS):
    """The depth-zero supercuspidals pi_sc[1], pi_sc[-1], pi_sc[w], pi_sc[w2]."""

    label: str

    def __post_init__(self):
        if self.label not in PI_SC_LABELS:
            raise PreconditionError("pi_sc[{}] is not defined".format(self.label))

    def __str__(self):
        return "pi_sc[{}]".format(self.label)


def _check_ds_unitary(tau, what):
    if not isinstance(tau, GL2Rep) or not tau.discrete_series:
        raise PreconditionError("{} needs a unitary GL2 discrete series, got {}"
                                .format(what, tau))


def splits_at_zero_p(tau):
    """I_P(0, tau) is a sum of two for self-dual sc with omega != 1."""
    return gl2_needs_s3_flag(tau)


def splits_at_zero_q(tau):
    """I_Q(0, tau) splits for self-dual sc with omega != 1 and image not S3."""
    if not gl2_needs_s3_flag(tau):
        return False
    require_s3_flag(tau)
    return not tau.dihedral_s3


class _TemperedInduced(Rep):
    tempered = property(lambda self: True)


@dataclass(frozen=True)
class IPIrred(G2Rep, _TemperedInduced):
    """The irreducible I_P(0, tau) for a unitary discrete series tau."""

    tau: GL2Rep

    def __post_init__(self):
        _check_ds_unitary(self.tau, "IP")
        if splits_at_zero_p(self.tau):
            raise PreconditionError("I_P({}) is reducible".format(self.tau))
        object.__setattr__(self, "tau",
                           _canonical(self.tau, self.tau.contragredient()))

    generic = property(lambda self: True)

    def __str__(self):
        return "IP({})".format(self.tau)


@dataclass(frozen=True)
class IQIrred(G2Rep, _TemperedInduced):
    tau: GL2Rep

    def __post_init__(self):
        _check_ds_unitary(self.tau, "IQ")
        if splits_at_zero_q(self.tau):
            raise PreconditionError("I_Q({}) is reducible".format(self.tau))
        object.__setattr__(self, "tau",
                           _canonical(self.tau, self.tau.contragredient()))

    generic = property(lambda self: True)

    def __str__(self):
        return "IQ({})".format(self.tau)


@dataclass(frozen=True)
class IPSummand(G2Rep, _TemperedInduced):
    tau: GL2Rep
    kind: str

    def __post_init__(self):
        _check_kind(self.kind)
        _check_ds_unitary(self.tau, "IP")
        if not splits_at_zero_p(self.tau):
            raise PreconditionError("I_P({}) does not split".format(self.tau))

    @property
    def generic(self):
        return self.kind == GEN

    def __str__(self):
        return "IP({}; {})".format(self.tau, self.kind)


@dataclass(frozen=True)
class IQSummand(G2Rep, _TemperedInduced):
    tau: GL2Rep
    kind: str

    def __post_init__(self):
        _check_kind(self.kind)
        _check_ds_unitary(self.tau, "IQ")
        if not splits_at_zero_q(self.tau):
            raise PreconditionError("I_Q({}) does not split".format(self.tau))

    @property
    def generic(self):
        return self.kind == GEN

    def __str__(self):
        return "IQ({}; {})".format(self.tau, self.kind)


def three_distinct_quadratics(chars):
    """Nontrivial, quadratic and pairwise different."""
    chars = list(chars)
    return (all(c.is_quadratic for c in chars)
            and len({str(c) for c in chars}) == len(chars))


def orbit_representative(chi):
    return min(chi.weyl_orbit(), key=str)


@dataclass(frozen=True)
class IBIrred(G2Rep, _TemperedInduced):
    """The irreducible unitary principal series, stored by orbit representative."""

    chi: TorusCharG2

    def __post_init__(self):
        from .chars import borel_char_triple
        if not self.chi.is_unitary:
            raise PreconditionError("IB needs a unitary character")
        if three_distinct_quadratics(borel_char_triple(self.chi)):
            raise PreconditionError("I_B({}) is reducible".format(self.chi))
        object.__setattr__(self, "chi", orbit_representative(self.chi))

    generic = property(lambda self: True)

    def __str__(self):
        return "IB({}, {})".format(self.chi.c1, self.chi.c2)


@dataclass(frozen=True)
class IBSummand(G2Rep, _TemperedInduced):
    chi: TorusCharG2
    kind: str

    def __post_init__(self):
        from .chars import borel_char_triple
        _check_kind(self.kind)
        if not self.chi.is_unitary or not three_distinct_quadratics(
                borel_char_triple(self.chi)):
            raise PreconditionError("I_B({}) does not split".format(self.chi))
        object.__setattr__(self, "chi", orbit_representative(self.chi))

    @property
    def generic(self):
        return self.kind == GEN

    def __str__(self):
        return "IB({}, {}; {})".format(self.chi.c1, self.chi.c2, self.kind)


@dataclass(frozen=True)
class ScFromPD(G2Rep, _TemperedDS):
    """The non-generic supercuspidal theta lift of a PD^x representation."""

    source: PDxRep

    def __post_init__(self):
        if not isinstance(self.source, PDOther) or self.source.heart != "yes":
            raise PreconditionError("thetaD() needs a D(label; heart=yes) source")

    def __str__(self):
        return "thetaD({})".format(self.source)


@dataclass(frozen=True)
class ScFromB(G2Rep, _TemperedDS):
    """The supercuspidal theta lift of an extension of a GL3 supercuspidal."""

    source: PGL3ExtRep

    def __post_init__(self):
        if not isinstance(self.source.base, GL3Supercuspidal):
            raise PreconditionError("thetaB() needs an extension of a GL3 "
                                    "supercuspidal")

    @property
    def generic(self):
        return self.source.ext != MINUS

    def __str__(self):
        return "thetaB({})".format(self.source)


@dataclass(frozen=True)
class ScAbstract(G2Rep, _TemperedDS):
    """A supercuspidal known only by label.

    With ``rho`` set it is the representation pi_rho that lifts from the
    metaplectic SL2; such a representation is not generic.
    """

    label: str
    generic_flag: bool = True
    rho: Optional[GL2Rep] = None

    def __post_init__(self):
        if self.rho is not None:
            object.__setattr__(self, "label", "pi_rho")
        _check_label(self.label)
        if self.rho is not None:
            if self.generic_flag:
                raise PreconditionError("pi_rho is not generic")
            if not self.rho.discrete_series:
                raise PreconditionError("rho must be a unitary discrete series")

    @property
    def generic(self):
        return self.generic_flag

    def __str__(self):
        if self.rho is not None:
            return "sc_G2({}; rho={})".format(self.label, self.rho)
        return "sc_G2({}; {})".format(self.label, GEN if self.generic_flag else DEG)


@dataclass(frozen=True)
class AbstractMember(G2Rep, _TemperedDS):
    """A packet member the tables do not name, known by (param, character)."""

    param: object
    character: str

    def __str__(self):
        return "member({}; {})".format(self.param, self.character)


@dataclass(frozen=True)
class Unresolved(Rep):
    """A constituent whose identity the tables leave open."""

    target_group: str
    note: str

    @property
    def group(self):
        return self.target_group

    def __str__(self):
        suffix = "G2" if self.group == "G2" else "P6"
        return 'unresolved_{}("{}")'.format(suffix, self.note)


# -- PGSp6 ---------------------------------------------------------------------

class PGSp6Rep(Rep):
    group = "PGSp6"


@dataclass(frozen=True)
class StP6(PGSp6Rep, _TemperedDS):
    generic = property(lambda self: True)

    def __str__(self):
        return "St_P6"


@dataclass(frozen=True)
class J2(PGSp6Rep):
    """Langlands quotient of I2(s, tau x tau)."""

    s: Fraction
    tau: GL2Rep

    def __post_init__(self):
        object.__setattr__(self, "s", to_fraction(self.s))
        _check_positive(self.s, "J2")
        _check_tempered_gl2(self.tau, "J2")

    @property
    def generic(self):
        from .reducibility import decompose_I2
        return self.tau.generic and decompose_I2(self.s, self.tau).irreducible

    def __str__(self):
        return "J2({}; {})".format(_fmt(self.s), self.tau)


@dataclass(frozen=True)
class Delta2(PGSp6Rep, _TemperedDS):
    tau: GL2Rep

    def __post_init__(self):
        _check_sc_self_dual_trivial(self.tau, "delta2")

    generic = property(lambda self: True)

    def __str__(self):
        return "delta2({})".format(self.tau)


@dataclass(frozen=True)
class SigmaGen(PGSp6Rep, _TemperedDS):
    """sigma_gen[chi] for quadratic chi, or sigma_gen[tau] for S3 tau."""

    param: object

    def __post_init__(self):
        object.__setattr__(self, "param",
                           _check_bracket_param(self.param, False, "sigma_gen"))

    generic = property(lambda self: True)

    def __str__(self):
        return "sigma_gen[{}]".format(self.param)


@dataclass(frozen=True)
class I2Irred(PGSp6Rep, _TemperedInduced):
    tau: GL2Rep

    def __post_init__(self):
        _check_tempered_gl2(self.tau, "I2")
        if splits_at_zero_q(self.tau):
            raise PreconditionError("I2({}) is reducible".format(self.tau))
        object.__setattr__(self, "tau",
                           _canonical(self.tau, self.tau.contragredient()))

    generic = property(lambda self: True)

    def __str__(self):
        return "I2({})".format(self.tau)


@dataclass(frozen=True)
class I2Summand(PGSp6Rep, _TemperedInduced):
    tau: GL2Rep
    kind: str

    def __post_init__(self):
        _check_kind(self.kind)
        if not splits_at_zero_q(self.tau) or not self.tau.tempered:
            raise PreconditionError("I2({}) does not split".format(self.tau))

    @property
    def generic(self):
        return self.kind == GEN

    def __str__(self):
        return "I2({}; {})".format(self.tau, self.kind)


@dataclass(frozen=True)
class J13(PGSp6Rep):
    """Langlands quotient of I13(s, tau x 1)."""

    s: Fraction
    tau: GL2Rep

    def __post_init__(self):
        object.__setattr__(self, "s", to_fraction(self.s))
        _check_positive(self.s, "J13")
        if not isinstance(self.tau, GL2Rep):
            raise PreconditionError("J13 needs a GL2 datum")

    @property
    def generic(self):
        """Raises NotCoveredError where I13(s, tau x 1) is not tabulated."""
        from .reducibility import decompose_I13
        if not self.tau.tempered:
            return False
        return self.tau.generic and decompose_I13(self.s, self.tau).irreducible

    def __str__(self):
        return "J13({}; {})".format(_fmt(self.s), self.tau)


@dataclass(frozen=True)
class Delta13(PGSp6Rep, _TemperedDS):
    tau: GL2Rep

    def __post_init__(self):
        _check_sc_self_dual_trivial(self.tau, "delta13")

    generic = property(lambda self: True)

    def __str__(self):
        return "delta13({})".format(self.tau)


@dataclass(frozen=True)
class I13Irred(PGSp6Rep, _TemperedInduced):
    tau: GL2Rep

    def __post_init__(self):
        _check_tempered_gl2(self.tau, "I13")
        if splits_at_zero_q(self.tau):
            raise PreconditionError("I13({}) is reducible".format(self.tau))
        object.__setattr__(self, "tau",
                           _canonical(self.tau, self.tau.contragredient()))

    generic = property(lambda self: True)

    def __str__(self):
        return "I13({})".format(self.tau)


@dataclass(frozen=True)
class I13Summand(PGSp6Rep, _TemperedInduced):
    tau: GL2Rep
    kind: str

    def __post_init__(self):
        _check_kind(self.kind)
        if not splits_at_zero_q(self.tau) or not self.tau.tempered:
            raise PreconditionError("I13({}) does not split".format(self.tau))

    @property
    def generic(self):
        return self.kind == GEN

    def __str__(self):
        return "I13({}; {})".format(self.tau, self.kind)


def _check_i3_datum(tau):
    if not isinstance(tau, GL3Rep) or not tau.tempered \
            or isinstance(tau, GL3LanglandsQuotient):
        raise PreconditionError("I3 needs a tempered GL3 datum, got {}".format(tau))


@dataclass(frozen=True)
class I3Irred(PGSp6Rep, _TemperedInduced):
    """I3(tau) = I3(tau^v), irreducible."""

    tau: GL3Rep

    def __post_init__(self):
        _check_i3_datum(self.tau)
        if self.tau.self_dual and not self.tau.has_trivial_summand:
            raise PreconditionError("I3({}) splits; use I3(...; gen|deg)"
                                    .format(self.tau))
        object.__setattr__(self, "tau",
                           _canonical(self.tau, self.tau.contragredient()))

    generic = property(lambda self: True)

    def __str__(self):
        return "I3({})".format(self.tau)


@dataclass(frozen=True)
class I3Summand(PGSp6Rep, _TemperedInduced):
    tau: GL3Rep
    kind: str

    def __post_init__(self):
        _check_kind(self.kind)
        _check_i3_datum(self.tau)
        if not self.tau.self_dual or self.tau.has_trivial_summand:
            raise PreconditionError("I3({}) does not split".format(self.tau))

    @property
    def generic(self):
        return self.kind == GEN

    def __str__(self):
        return "I3({}; {})".format(self.tau, self.kind)


def check_p1_datum(tau):
    if not isinstance(tau, GSp4Supercuspidal):
        raise PreconditionError("expected a GSp4 supercuspidal, got {}".format(tau))
    if not tau.trivial_central or not tau.std_contains_trivial:
        raise PreconditionError(
            "{} must have trivial central character and a trivial summand in "
            "its standard parameter".format(tau))


@dataclass(frozen=True)
class Delta1(PGSp6Rep, _TemperedDS):
    tau: GSp4Supercuspidal

    def __post_init__(self):
        check_p1_datum(self.tau)

    @property
    def generic(self):
        return self.tau.generic

    def __str__(self):
        return "delta1({})".format(self.tau)


@dataclass(frozen=True)
class J1(PGSp6Rep):
    s: Fraction
    tau: GSp4Supercuspidal

    def __post_init__(self):
        object.__setattr__(self, "s", to_fraction(self.s))
        _check_positive(self.s, "J1")
        check_p1_datum(self.tau)

    @property
    def generic(self):
        return self.tau.generic and self.s != Fraction(1, 2)

    def __str__(self):
        return "J1({}; {})".format(_fmt(self.s), self.tau)


@dataclass(frozen=True)
class I1Irred(PGSp6Rep, _TemperedInduced):
    tau: GSp4Supercuspidal

    def __post_init__(self):
        check_p1_datum(self.tau)

    @property
    def generic(self):
        return self.tau.generic

    def __str__(self):
        return "I1({})".format(self.tau)


@dataclass(frozen=True)
class ScAbstractP6(PGSp6Rep, _TemperedDS):
    label: str
    generic_flag: bool = True
    source_label: Optional[str] = None

    def __post_init__(self):
        _check_label(self.label)
        if self.source_label is not None:
            _check_label(self.source_label)

    @property
    def generic(self):
        return self.generic_flag

    def __str__(self):
        text = "sc_P6({}; {}".format(self.label, GEN if self.generic_flag else DEG)
        if self.source_label is not None:
            text += "; from={}".format(self.source_label)
        return text + ")"


# -- predicates and smart constructors -----------------------------------------

def is_tempered(rep):
    return rep.tempered


def is_discrete_series(rep):
    return rep.discrete_series


def is_generic(rep):
    return rep.generic


def contragredient(rep):
    return rep.contragredient()


def ip_torus(s, mu1, mu2):
    """The torus character with I_P(s, pi(mu1, mu2)) = I_B(chi)."""
    return TorusCharG2(mu1.twist(s), mu2.twist(s))


def iq_torus(s, mu1, mu2):
    """The torus character with I_Q(s, pi(mu1, mu2)) = I_B(chi)."""
    return TorusCharG2(mu2.twist(s), mu1 / mu2)


def langlands_quotient_of_torus(chi):
    """The Langlands quotient attached to the Weyl orbit of chi.

    Raises:
        PreconditionError: if chi is unitary and I_B(chi) splits.
    """
    dominant = [x for x in chi.weyl_orbit()
                if rootsys.dominant_exponents(*x.exponents())]
    rep = min(dominant, key=str)
    a1, a2 = rep.exponents()
    logger.debug("orbit of %s has dominant representative %s", chi, rep)
    if a1 > a2 > 0:
        if _is_rho_point(rep):
            return TrivG2()
        return JB(rep)
    if a1 == a2 > 0:
        return JP(a1, GL2PrincipalSeries(rep.c1.twist(-a1), rep.c2.twist(-a1)))
    if a1 > a2 == 0:
        return JQ(a1, GL2PrincipalSeries((rep.c1 * rep.c2).twist(-a1),
                                         rep.c1.twist(-a1)))
    return IBIrred(rep)


def _torus_for(parabolic, s, tau):
    mu1, mu2 = tau.support()
    return ip_torus(s, mu1, mu2) if parabolic == "P" else iq_torus(s, mu1, mu2)


def _j_for(parabolic, s, tau):
    if isinstance(tau, (GL2Supercuspidal, GL2Steinberg)):
        base, shift = tau.split_twist()
        total = to_fraction(s) + shift
        if total <= 0:
            raise PreconditionError("J{}({}; {}) is not a Langlands quotient"
                                    .format(parabolic, s, tau))
        return (JP if parabolic == "P" else JQ)(total, base)
    if isinstance(tau, (GL2PrincipalSeries, GL2OneDim)):
        if to_fraction(s) <= 0:
            raise PreconditionError("J{} needs a positive twist".format(parabolic))
        return langlands_quotient_of_torus(_torus_for(parabolic, s, tau))
    raise NotCoveredError("no Langlands quotient for {}".format(tau))


def jp(s, tau):
    """J_P(s, tau) in canonical form; non-tempered tau moves to the torus."""
    return _j_for("P", s, tau)


def jq(s, tau):
    return _j_for("Q", s, tau)


def is_g2_rep(value):
    return isinstance(value, G2Rep) or (isinstance(value, Unresolved)
                                        and value.group == "G2")


def is_p6_rep(value):
    return isinstance(value, PGSp6Rep) or (isinstance(value, Unresolved)
                                           and value.group == "PGSp6")
