"""L-parameters of G2, their component groups and L-packets.

Parameters are classified by the image of the Deligne SL2: principal,
subregular, short root, long root or trivial (cuspidal), plus the
parameters that factor through a proper Levi subgroup.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from . import reps
from .chars import ExponentChar, TorusCharG2
from .errors import NotCoveredError, PreconditionError

logger = logging.getLogger(__name__)

TRIVIAL = "Trivial"
MU2 = "Mu2"
MU3 = "Mu3"
S3 = "S3"

_CHARACTERS = {
    TRIVIAL: ("1",),
    MU2: ("1", "-1"),
    MU3: ("1", "w", "w2"),
    S3: ("1", "r", "eps"),
}


@dataclass(frozen=True)
class ComponentGroup:
    tag: str

    def __post_init__(self):
        if self.tag not in _CHARACTERS:
            raise PreconditionError("unknown component group {!r}".format(self.tag))

    def characters(self):
        """Labels of the irreducible characters, trivial first."""
        return _CHARACTERS[self.tag]

    @property
    def character_count(self):
        return len(_CHARACTERS[self.tag])

    def __str__(self):
        return self.tag


class LParam:
    """Base class of G2 L-parameters."""

    discrete = True

    @property
    def bounded(self):
        return True


@dataclass(frozen=True)
class PrincipalSL2(LParam):
    def __str__(self):
        return "principal"


SUBREGULAR_IMAGES = ("1", "mu2", "mu3", "S3")


@dataclass(frozen=True)
class SubregularSL2(LParam):
    """phi(SL2) subregular; ``image`` is the image of the Weil group.

    ``datum`` is None for the trivial image, the quadratic or cubic
    character for mu2 and mu3, and the dihedral supercuspidal for S3.
    A cubic character is stored up to inversion.
    """

    image: str
    datum: object = None

    def __post_init__(self):
        if self.image not in SUBREGULAR_IMAGES:
            raise PreconditionError("unknown subregular image {!r}".format(self.image))
        if self.image == "1":
            if self.datum is not None:
                raise PreconditionError("subregular(1) carries no datum")
        elif self.image == "mu2":
            if not isinstance(self.datum, ExponentChar) or not self.datum.is_quadratic:
                raise PreconditionError("mu2 needs a quadratic character")
        elif self.image == "mu3":
            if not isinstance(self.datum, ExponentChar) or not self.datum.is_cubic:
                raise PreconditionError("mu3 needs a cubic character")
            object.__setattr__(self, "datum", min((self.datum, self.datum.inverse()),
                                                  key=str))
        elif not (isinstance(self.datum, reps.GL2Supercuspidal)
                  and self.datum.dihedral_s3 and self.datum.tempered):
            raise PreconditionError("S3 image needs a supercuspidal with S3 flag")

    def __str__(self):
        if self.image == "1":
            return "subregular(1)"
        return "subregular({}: {})".format(self.image, self.datum)


def _check_root_datum(tau, what):
    if not (isinstance(tau, reps.GL2Supercuspidal) and tau.tempered
            and tau.self_dual and tau.central.is_trivial):
        raise PreconditionError(
            "{} needs a self-dual supercuspidal with trivial central character"
            .format(what))


@dataclass(frozen=True)
class ShortRootSL2(LParam):
    tau: reps.GL2Rep

    def __post_init__(self):
        _check_root_datum(self.tau, "short")

    def __str__(self):
        return "short({})".format(self.tau)


@dataclass(frozen=True)
class LongRootSL2(LParam):
    tau: reps.GL2Rep

    def __post_init__(self):
        _check_root_datum(self.tau, "long")

    def __str__(self):
        return "long({})".format(self.tau)


@dataclass(frozen=True)
class TrivialSL2Cuspidal(LParam):
    """phi(SL2) = 1; the packet is supercuspidal and not enumerated."""

    label: str

    def __post_init__(self):
        reps._check_label(self.label)

    def __str__(self):
        return "cuspidal({})".format(self.label)


LEVIS = ("M", "L", "T")


def _gl2_exponent(tau):
    if isinstance(tau, reps.GL2Supercuspidal):
        return tau.twist
    return tau.chi.exponent


@dataclass(frozen=True)
class LeviFactored(LParam):
    """A parameter factoring through the dual of M, L or T.

    M and L data are supercuspidal or Steinberg GL2 representations with
    their |det|^s twist included; T data are torus characters.  Values are
    stored in a canonical form so that conjugate parameters compare equal.
    """

    levi: str
    datum: object

    discrete = False

    def __post_init__(self):
        if self.levi not in LEVIS:
            raise PreconditionError("unknown Levi {!r}".format(self.levi))
        if self.levi == "T":
            if not isinstance(self.datum, TorusCharG2):
                raise PreconditionError("levi(T) needs a torus character")
            object.__setattr__(self, "datum",
                               reps.orbit_representative(self.datum))
            return
        if not isinstance(self.datum, (reps.GL2Supercuspidal, reps.GL2Steinberg)):
            raise PreconditionError(
                "levi({}) needs a supercuspidal or Steinberg datum; use "
                "levi_factored for principal series".format(self.levi))
        dual = self.datum.contragredient()
        exponent = _gl2_exponent(self.datum)
        if exponent < 0 or exponent == 0 and str(dual) < str(self.datum):
            object.__setattr__(self, "datum", dual)

    @property
    def bounded(self):
        if self.levi == "T":
            return self.datum.is_unitary
        return _gl2_exponent(self.datum) == 0

    def __str__(self):
        if self.levi == "T":
            return "levi(T; {}, {})".format(self.datum.c1, self.datum.c2)
        return "levi({}; {})".format(self.levi, self.datum)


def levi_factored(levi, datum):
    """LeviFactored with principal-series data on M or L moved to T."""
    if levi in ("M", "L") and isinstance(datum, (reps.GL2PrincipalSeries,
                                                 reps.GL2OneDim)):
        mu1, mu2 = datum.support()
        torus = reps.ip_torus(0, mu1, mu2) if levi == "M" else reps.iq_torus(0, mu1, mu2)
        return LeviFactored("T", torus)
    return LeviFactored(levi, datum)


def _splits(param):
    if param.levi == "M":
        return reps.splits_at_zero_p(param.datum)
    if param.levi == "L":
        return reps.splits_at_zero_q(param.datum)
    from .chars import borel_char_triple
    return reps.three_distinct_quadratics(borel_char_triple(param.datum))


def component_group(param):
    """A_phi for the parameter.

    Raises:
        NotCoveredError: for a cuspidal parameter, whose group is not
            determined by the tables.
    """
    if isinstance(param, PrincipalSL2):
        return ComponentGroup(TRIVIAL)
    if isinstance(param, SubregularSL2):
        return ComponentGroup({"1": S3, "mu2": MU2, "mu3": MU3, "S3": TRIVIAL}[param.image])
    if isinstance(param, (ShortRootSL2, LongRootSL2)):
        return ComponentGroup(MU2)
    if isinstance(param, LeviFactored):
        if param.bounded and _splits(param):
            return ComponentGroup(MU2)
        return ComponentGroup(TRIVIAL)
    raise NotCoveredError("no component group recorded for {}".format(param))


@dataclass(frozen=True)
class Packet:
    param: LParam
    component_group: Optional[ComponentGroup]
    members: tuple
    enumerated: bool = True

    def member(self, character):
        for label, rep in self.members:
            if label == character:
                return rep
        raise KeyError(character)

    def __len__(self):
        return len(self.members)


def _levi_members(param):
    datum = param.datum
    if param.levi == "T":
        if param.bounded:
            if _splits(param):
                return (("1", reps.IBSummand(datum, reps.GEN)),
                        ("-1", reps.IBSummand(datum, reps.DEG)))
            return (("1", reps.IBIrred(datum)),)
        return (("1", reps.langlands_quotient_of_torus(datum)),)
    summand, irred, quotient = {
        "M": (reps.IPSummand, reps.IPIrred, reps.jp),
        "L": (reps.IQSummand, reps.IQIrred, reps.jq),
    }[param.levi]
    if param.bounded:
        if _splits(param):
            return (("1", summand(datum, reps.GEN)), ("-1", summand(datum, reps.DEG)))
        return (("1", irred(datum)),)
    unitary, s = datum.split_twist()
    return (("1", quotient(s, unitary)),)


def _subregular_members(param, registry):
    if param.image == "1":
        return (("1", reps.PiGen(registry.trivial())),
                ("r", reps.PiDeg1()),
                ("eps", reps.PiSc("1")))
    if param.image == "S3":
        return (("1", reps.PiGen(param.datum)),)
    chi = param.datum
    if param.image == "mu2":
        other = reps.PiSc("-1") if chi.is_unramified else reps.AbstractMember(param, "-1")
        return (("1", reps.PiGen(chi)), ("-1", other))
    if chi.is_unramified:
        return (("1", reps.PiGen(chi)), ("w", reps.PiSc("w")), ("w2", reps.PiSc("w2")))
    return (("1", reps.PiGen(chi)),
            ("w", reps.AbstractMember(param, "w")),
            ("w2", reps.AbstractMember(param, "w2")))


def packet_of(param, registry=None):
    """The L-packet of ``param`` as (character label, representation) pairs.

    ``registry`` supplies the trivial character for subregular(1) and
    defaults to the packaged registry.
    """
    if isinstance(param, TrivialSL2Cuspidal):
        return Packet(param, None, (), enumerated=False)
    group = component_group(param)
    if isinstance(param, PrincipalSL2):
        members = (("1", reps.StG2()),)
    elif isinstance(param, SubregularSL2):
        if registry is None:
            from .chars import Registry
            registry = Registry.default()
        members = _subregular_members(param, registry)
    elif isinstance(param, ShortRootSL2):
        members = (("1", reps.DeltaP(param.tau)),
                   ("-1", reps.AbstractMember(param, "-1")))
    elif isinstance(param, LongRootSL2):
        members = (("1", reps.DeltaQ(param.tau)),
                   ("-1", reps.AbstractMember(param, "-1")))
    else:
        members = _levi_members(param)
    logger.debug("packet of %s has %d members", param, len(members))
    return Packet(param, group, members)


def param_of_nontempered(pi):
    """The Levi-factored parameter of a non-tempered Langlands quotient.

    Raises:
        PreconditionError: if ``pi`` is tempered.
        NotCoveredError: if ``pi`` is not a Langlands quotient of G2.
    """
    if pi.tempered:
        raise PreconditionError("{} is tempered".format(pi))
    if isinstance(pi, reps.JP):
        return levi_factored("M", pi.tau.twisted(pi.s))
    if isinstance(pi, reps.JQ):
        return levi_factored("L", pi.tau.twisted(pi.s))
    if isinstance(pi, reps.JB):
        return LeviFactored("T", pi.chi)
    if isinstance(pi, reps.TrivG2):
        registry = _default_registry()
        return LeviFactored("T", TorusCharG2(registry.absolute(2), registry.absolute(1)))
    raise NotCoveredError("no parameter recorded for {}".format(pi))


def _default_registry():
    from .chars import Registry
    return Registry.default()


def param_of_tempered(pi, registry=None):
    """The parameter of a tempered representation named by the tables.

    Raises:
        PreconditionError: if ``pi`` is not tempered.
        NotCoveredError: for supercuspidals known only by label.
    """
    if not pi.tempered:
        raise PreconditionError("{} is not tempered".format(pi))
    if registry is None:
        registry = _default_registry()
    if isinstance(pi, reps.StG2):
        return PrincipalSL2()
    if isinstance(pi, reps.PiGen):
        if isinstance(pi.param, reps.GL2Supercuspidal):
            return SubregularSL2("S3", pi.param)
        if pi.param.is_trivial:
            return SubregularSL2("1")
        return SubregularSL2("mu2" if pi.param.is_quadratic else "mu3", pi.param)
    if isinstance(pi, reps.PiDeg1):
        return SubregularSL2("1")
    if isinstance(pi, reps.PiSc):
        return _pi_sc_param(pi, registry)
    if isinstance(pi, reps.DeltaP):
        return ShortRootSL2(pi.tau)
    if isinstance(pi, reps.DeltaQ):
        return LongRootSL2(pi.tau)
    if isinstance(pi, (reps.IPIrred, reps.IPSummand)):
        return LeviFactored("M", pi.tau)
    if isinstance(pi, (reps.IQIrred, reps.IQSummand)):
        return LeviFactored("L", pi.tau)
    if isinstance(pi, (reps.IBIrred, reps.IBSummand)):
        return LeviFactored("T", pi.chi)
    if isinstance(pi, reps.AbstractMember):
        return pi.param
    raise NotCoveredError("no parameter recorded for {}".format(pi))


def _pi_sc_param(pi, registry):
    if pi.label == "1":
        return SubregularSL2("1")
    order = 2 if pi.label == "-1" else 3
    sym = registry.unramified_symbol(order)
    if sym is None:
        raise NotCoveredError("registry {} declares no unramified character of "
                              "order {}".format(registry.name, order))
    return SubregularSL2("mu2" if order == 2 else "mu3", registry.char(sym.name))


def param_of(pi, registry=None):
    if pi.tempered:
        return param_of_tempered(pi, registry)
    return param_of_nontempered(pi)


def member_character(pi, registry=None):
    """The character of A_phi attached to ``pi`` inside its packet."""
    packet = packet_of(param_of(pi, registry), registry)
    for label, rep in packet.members:
        if rep == pi:
            return label
    raise NotCoveredError("{} is not a member of its own packet".format(pi))
