"""Static filtration tables: Jacquet modules of the minimal representations,
the Mackey filtration of the degenerate principal series I_E(s) and the
dual-pair data attached to the Jordan algebras.

Pieces are symbolic descriptors; nothing here evaluates Hom spaces.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .chars import to_fraction
from .errors import NotFoundError, PreconditionError
from .rootsys import parabolic_data

logger = logging.getLogger(__name__)

MINIMAL = "minimal"
INDUCED = "induced"
COMPACT = "compact"

# unipotent radicals used as inducing subgroups, with the parabolic they sit in
UNIPOTENT_RADICALS = {("G2", "N"): ("G2", "P")}


def subgroup_parabolic(group, name):
    """The parabolic behind an inducing subgroup key.

    Raises:
        NotFoundError: if the key is neither a parabolic nor a listed radical.
    """
    return parabolic_data(*UNIPOTENT_RADICALS.get((group, name), (group, name)))


@dataclass(frozen=True)
class MinimalSummand:
    """A minimal (or trivial) representation of a Levi, twisted."""

    symbol: str
    character: str
    twist: Fraction

    def __str__(self):
        if self.twist == 0:
            return self.symbol
        return "{}*|{}|^{}".format(self.symbol, self.character, self.twist)


@dataclass(frozen=True)
class FiltrationPiece:
    """One successive quotient of a filtration; layer 0 is the bottom.

    ``subgroups`` are (group, name) keys of the inducing subgroups: a
    parabolic of :func:`g2theta.rootsys.parabolic_data`, or a unipotent
    radical listed in ``UNIPOTENT_RADICALS``.
    """

    layer: int
    name: str
    kind: str
    subgroups: Tuple[Tuple[str, str], ...] = ()
    datum: str = ""
    delta: Tuple[Fraction, ...] = ()
    twist: Optional[Fraction] = None
    summands: Tuple[MinimalSummand, ...] = ()
    multiplicity: int = 1

    def __str__(self):
        if self.kind == MINIMAL:
            text = " + ".join(str(m) for m in self.summands)
        else:
            over = " x ".join(p for _, p in self.subgroups)
            datum = self.datum
            if self.delta:
                datum = "delta({}) * {}".format(
                    ", ".join(str(d) for d in self.delta), datum)
            if self.twist is not None:
                datum = "|det|^{} * {}".format(self.twist, datum)
            prefix = "ind" if self.kind == COMPACT else "Ind"
            text = "{}_{{{}}}({})".format(prefix, over, datum)
        if self.multiplicity != 1:
            text = "{} * {}".format(self.multiplicity, text)
        return text

    def as_dict(self):
        return {
            "layer": self.layer,
            "name": self.name,
            "kind": self.kind,
            "subgroups": [list(s) for s in self.subgroups],
            "datum": self.datum,
            "delta": [str(d) for d in self.delta],
            "twist": None if self.twist is None else str(self.twist),
            "summands": [str(m) for m in self.summands],
            "multiplicity": self.multiplicity,
            "descriptor": str(self),
        }


def _fractions(*values):
    return tuple(Fraction(v) for v in values)


def _stack(pieces):
    """Number pieces listed top to bottom so that layer 0 is the bottom."""
    n = len(pieces)
    out = []
    for i, (name, kwargs) in enumerate(pieces):
        out.append(FiltrationPiece(layer=n - 1 - i, name=name, **kwargs))
    return sorted(out, key=lambda p: p.layer)


def _top(character, *summands):
    return dict(kind=MINIMAL, summands=tuple(
        MinimalSummand(symbol, character, Fraction(t)) for symbol, t in summands))


_MINREP = {
    ("G2", "P"): [
        ("top", _top("det", ("Pi_D6", Fraction(1, 2)), ("Pi_0", Fraction(3, 2)))),
        ("middle", dict(kind=INDUCED, subgroups=(("GL2", "Bbar"), ("PGSp6", "P2")),
                        datum="C_c(GL1)", delta=_fractions(Fraction(-1, 2), 1))),
        ("bottom", dict(kind=INDUCED, subgroups=(("PGSp6", "P13"),),
                        datum="C_c(GL2)")),
    ],
    ("G2", "Q"): [
        ("top", _top("det", ("Pi_A5", Fraction(3, 2)), ("Pi_A1", 2))),
        ("middle", dict(kind=INDUCED, subgroups=(("GL2", "Bbar"), ("PGSp6", "P2")),
                        datum="C_c(GL1)", delta=_fractions(Fraction(1, 2), 1))),
        ("bottom", dict(kind=INDUCED, subgroups=(("PGSp6", "P2"),), datum="W")),
    ],
    ("PGSp6", "P3"): [
        ("top", _top("det", ("Pi_E6", 0), ("Pi_0", 1))),
        ("middle", dict(kind=INDUCED, subgroups=(("G2", "Q"), ("GL3", "Q1")),
                        datum="C_c(GL1)",
                        delta=_fractions(Fraction(-1, 2), Fraction(1, 2)))),
        ("bottom", dict(kind=INDUCED, subgroups=(("G2", "P"), ("GL3", "Q2")),
                        datum="C_c(GL2)")),
    ],
    ("PGSp6", "P1"): [
        ("top", _top("nu", ("Pi_D6", Fraction(1, 2)), ("Pi_0", Fraction(3, 2)))),
        ("middle", dict(kind=INDUCED, subgroups=(("G2", "Q"), ("GSp4", "Q1")),
                        datum="C_c(GL1)",
                        delta=_fractions(Fraction(-1, 2), Fraction(1, 2)))),
        ("bottom", dict(kind=INDUCED, subgroups=(("G2", "P"), ("GSp4", "Q2")),
                        datum="C_c(GL2)")),
    ],
    ("PGSp6", "P2"): [
        ("top", _top("det", ("Pi_D5", Fraction(1, 2)), ("Pi_A1", Fraction(3, 2)))),
        ("upper", dict(kind=INDUCED,
                       subgroups=(("G2", "Q"), ("GL2", "Bbar"), ("GL2", "Bbar")),
                       datum="C_c(GL1)", delta=_fractions(Fraction(1, 2), 1))),
        ("lower", dict(kind=INDUCED, subgroups=(("G2", "P"), ("GL2", "Bbar")),
                       datum="C_c(GL2)")),
        ("bottom", dict(kind=INDUCED, subgroups=(("G2", "Q"),), datum="W")),
    ],
}


def _minrep(group, parabolic):
    try:
        rows = _MINREP[(group, parabolic)]
    except KeyError:
        raise NotFoundError("no Jacquet table for {} {}".format(group, parabolic))
    logger.debug("Jacquet table of the minimal representation along %s %s",
                 group, parabolic)
    return _stack(rows)


def minrep_jacquet(group, parabolic):
    """Filtration of the normalized Jacquet module along a G2 parabolic.

    Raises:
        NotFoundError: unless group is G2 and parabolic is P or Q.
    """
    if group != "G2":
        raise NotFoundError("minrep_jacquet covers G2 only, got {}".format(group))
    return _minrep(group, parabolic)


def minrep_jacquet_p6(parabolic):
    """Filtration of the normalized Jacquet module along P1, P2 or P3."""
    return _minrep("PGSp6", parabolic)


# -- I_E(s) --------------------------------------------------------------------

SPLIT = "Split"
PARTIAL_SPLIT = "PartialSplit"
FIELD = "Field"

_M_E = {SPLIT: 3, PARTIAL_SPLIT: 1, FIELD: 0}


@dataclass(frozen=True)
class EtaleCubic:
    """F^3, F x K or a cubic field."""

    tag: str
    label: Optional[str] = None

    def __post_init__(self):
        if self.tag not in _M_E:
            raise PreconditionError("unknown etale cubic algebra {!r}".format(self.tag))
        if self.tag == SPLIT and self.label is not None:
            raise PreconditionError("F^3 takes no label")

    @classmethod
    def parse(cls, text):
        """``split``, ``partial[:K]`` or ``field[:label]``."""
        head, _, label = text.partition(":")
        tags = {"split": SPLIT, "partial": PARTIAL_SPLIT, "field": FIELD}
        if head not in tags:
            raise PreconditionError(
                "etale cubic algebra must be split, partial or field, got {!r}"
                .format(text))
        return cls(tags[head], label or None)

    @property
    def m_E(self):
        return _M_E[self.tag]

    @property
    def is_field(self):
        return self.tag == FIELD

    def __str__(self):
        if self.tag == SPLIT:
            return "F^3"
        if self.tag == PARTIAL_SPLIT:
            return "F x {}".format(self.label or "K")
        return self.label or "E"


def ie_filtration(s, E):
    """The G2 filtration 0 = I_-1 in I_0 in ... in I_4 = I_E(s).

    Layers whose multiplicity m_E vanishes are omitted; the remaining layers
    are renumbered contiguously and keep their names.
    """
    s = to_fraction(s)
    half = s / 2 + Fraction(1, 4)
    m = E.m_E
    rows = [
        ("I0", dict(kind=COMPACT, subgroups=(("G2", "N"),), datum="psibar_E")),
        ("J1", dict(kind=INDUCED, subgroups=(("G2", "P"),), datum="C_c^inf(PGL2)",
                    twist=half)),
        ("J2", dict(kind=INDUCED, subgroups=(("G2", "P"),), datum="ind_N(psi)",
                    twist=half, multiplicity=m)),
        ("J3", dict(kind=INDUCED, subgroups=(("G2", "Q"),), datum="1",
                    twist=s + 1, multiplicity=m)),
        ("J4", dict(kind=INDUCED, subgroups=(("G2", "P"),), datum="1", twist=s + 1)),
    ]
    rows = [(name, kw) for name, kw in rows if kw.get("multiplicity", 1) != 0]
    logger.debug("I_E(%s) for E = %s: %d layers", s, E, len(rows))
    return _stack(list(reversed(rows)))


# -- Jordan algebras and dual pairs --------------------------------------------

@dataclass(frozen=True)
class DualPair:
    h_j: str
    h_je: str
    ambient: str


@dataclass(frozen=True)
class JordanAlgebraCase:
    tag: str
    dim: int
    pair: DualPair
    s_J: Fraction

    @property
    def h_j(self):
        return self.pair.h_j

    @property
    def h_je(self):
        return self.pair.h_je

    def __str__(self):
        return self.tag


DPLUS = "Dplus"
M3F = "M3F"
H3M2 = "H3M2"

JORDAN_CASES = {
    DPLUS: JordanAlgebraCase(DPLUS, 9, DualPair("PDx", "PEx", "E6^D"),
                             Fraction(-1, 2)),
    M3F: JordanAlgebraCase(M3F, 9, DualPair("PGL3 x| Z/2", "PEx x| Z/2", "E6 x| Z/2"),
                           Fraction(-1, 2)),
    H3M2: JordanAlgebraCase(H3M2, 15, DualPair("PGSp6", "SL2(E)/mu2", "E7"),
                            Fraction(1, 2)),
}


def jordan_case(tag):
    try:
        return JORDAN_CASES[tag]
    except KeyError:
        raise NotFoundError("unknown Jordan algebra {!r}".format(tag))


def dualpair_table(J):
    if isinstance(J, str):
        J = jordan_case(J)
    return J.pair


def jordan_algebra_table():
    """dim J -> the exceptional Lie algebra g_J."""
    return {1: "G2", 3: "D4", 9: "E6", 15: "E7"}


@dataclass(frozen=True)
class ExactSequence:
    sub: str
    middle: str
    quotient: str

    def __str__(self):
        return "0 -> {} -> {} -> {} -> 0".format(self.sub, self.middle, self.quotient)


@dataclass(frozen=True)
class RJEStructure:
    """How R_J(E), the big theta lift of 1 from H_{J,E}, sits in I_E(s_J)."""

    jordan: JordanAlgebraCase
    etale: EtaleCubic
    s_J: Fraction
    zero: bool
    ie_half_length: int
    sequences: Tuple[ExactSequence, ...] = ()

    @property
    def embedding(self):
        if self.zero:
            return None
        return "R_{}(E) -> I_E({})".format(self.jordan.tag, self.s_J)


def rje_structure(J, E):
    """R_J(E) inside I_E(s_J), with the two sequences describing I_E(1/2).

    R_D(E) is zero when E is not a field.
    """
    if isinstance(J, str):
        J = jordan_case(J)
    length = 3 if E.is_field else 2
    if J.tag == DPLUS and not E.is_field:
        return RJEStructure(J, E, J.s_J, zero=True, ie_half_length=length)
    r_d = "R_Dplus(E)" if E.is_field else "0"
    sequences = (
        ExactSequence("R_H3M2(E)", "I_E(1/2)", r_d),
        ExactSequence("V", "R_H3M2(E)", "R_M3F(E)"),
    )
    return RJEStructure(J, E, J.s_J, zero=False, ie_half_length=length,
                        sequences=sequences)


def twisted_jacquet(J, E):
    """The (N, psi_E)-coinvariants of the minimal representation of G_J.

    Raises:
        PreconditionError: for D+ with E not a field.
    """
    if isinstance(J, str):
        J = jordan_case(J)
    if J.tag == DPLUS and not E.is_field:
        raise PreconditionError("D+ only contains cubic fields")
    return "ind_{{{}}}^{{{}}}(1)".format(J.h_je, J.h_j)


# -- consistency with the parabolic tables -------------------------------------

_TRIVIAL_TOPS = (("G2", "P"), ("PGSp6", "P1"), ("PGSp6", "P3"))


def modulus_consistency():
    """(table, twist of Pi_0, half the modulus exponent) for each table with
    a trivial top summand."""
    out = []
    for key in _TRIVIAL_TOPS:
        top = next(p for p in _minrep(*key) if p.kind == MINIMAL)
        twist = next(m.twist for m in top.summands if m.symbol == "Pi_0")
        half = parabolic_data(*key).modulus_exponent[0] / 2
        out.append((key, twist, half))
    return out
