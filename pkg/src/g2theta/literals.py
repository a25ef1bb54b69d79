"""Text literals for characters, representations and L-parameters.

Printing is ``str(value)``; parsing goes through a pyparsing grammar built
once per registry.  Canonical literals round-trip: ``parse_literal(str(v))``
equals ``v``.
"""
import functools
import logging
import operator

import pyparsing as pp

from . import langlands, reps
from .chars import RESERVED_NAMES, Registry, TorusCharG2, to_fraction
from .errors import LiteralSyntaxError, NotFoundError

logger = logging.getLogger(__name__)

KINDS = ("g2", "p6", "param", "pgl3", "gl3", "gsp4", "pd", "torus", "gl2", "char")
REP_KINDS = tuple(k for k in KINDS if k not in ("torus", "char"))


def _head(word):
    return pp.Keyword(word).suppress() + pp.Suppress("(")


def _close():
    return pp.Suppress(")")


def _semi():
    return pp.Suppress(";")


def _comma():
    return pp.Suppress(",")


def make_grammar(registry):
    """Build the grammar elements for one registry, keyed by kind."""
    number = pp.Regex(r"[+-]?\d+(/\d+)?")
    number.set_parse_action(lambda t: to_fraction(t[0]))
    integer = pp.Regex(r"[+-]?\d+").set_parse_action(lambda t: int(t[0]))
    label = pp.Regex(r"[A-Za-z][A-Za-z0-9_]*(\([A-Za-z][A-Za-z0-9_]*\))?")
    kind = pp.Keyword(reps.GEN) | pp.Keyword(reps.DEG)
    dual_mark = pp.Literal("^v")

    # characters
    trivial_term = pp.Regex(r"1(?![0-9A-Za-z_/])")
    trivial_term.set_parse_action(lambda t: registry.trivial())
    abs_term = pp.Suppress("|.|^") + number
    abs_term.set_parse_action(lambda t: registry.absolute(t[0]))
    symbol = pp.Regex(r"[A-Za-z][A-Za-z0-9_]*")
    symbol.add_condition(lambda t: t[0] not in RESERVED_NAMES,
                         message="reserved word", call_during_try=True)
    sym_term = symbol + pp.Opt(pp.Suppress("^") + integer)
    sym_term.set_parse_action(
        lambda t: registry.char(t[0], t[1] if len(t) > 1 else 1))
    term = trivial_term | abs_term | sym_term
    char = term + pp.ZeroOrMore(pp.Suppress("*") + term)
    char.set_parse_action(lambda t: functools.reduce(operator.mul, t))

    # GL2
    gl2 = pp.Forward()
    sc_option = (pp.Keyword("sd")("sd")
                 | pp.Keyword("w").suppress() + pp.Suppress("=") + char("w")
                 | pp.Keyword("S3")("s3")
                 | pp.Keyword("notS3")("nots3"))
    sc = (_head("sc") + label("label") + pp.ZeroOrMore(_comma() + sc_option)
          + _close() + pp.Opt(dual_mark("dual"))
          + pp.Opt(pp.Suppress("*|det|^") + number("twist")))

    def make_sc(t):
        s3 = True if "s3" in t else (False if "nots3" in t else None)
        central = t["w"] if "w" in t else registry.trivial()
        twist = t["twist"] if "twist" in t else 0
        return reps.GL2Supercuspidal(t["label"], central, "sd" in t, s3,
                                     "dual" in t, twist)

    sc.set_parse_action(make_sc)
    st = (_head("st") + char + _close()).set_parse_action(
        lambda t: reps.GL2Steinberg(t[0]))
    ps = (_head("ps") + char + _comma() + char + _close()).set_parse_action(
        lambda t: reps.GL2PrincipalSeries(t[0], t[1]))
    one = (_head("one") + char + _close()).set_parse_action(
        lambda t: reps.GL2OneDim(t[0]))
    gl2 <<= sc | st | ps | one

    # GL3 and PGL3 x| Z/2
    sc3 = (_head("sc3") + label("label") + pp.Opt(_comma() + pp.Keyword("sd")("sd"))
           + _close() + pp.Opt(dual_mark("dual")))
    sc3.set_parse_action(
        lambda t: reps.GL3Supercuspidal(t["label"], "sd" in t, "dual" in t))
    st3 = (_head("St3") + char + _close()).set_parse_action(
        lambda t: reps.GL3Steinberg(t[0]))
    ind3 = (_head("ind3") + gl2 + _close()).set_parse_action(
        lambda t: reps.GL3Induced(t[0]))
    ps3 = (_head("ps3") + char + _comma() + char + _comma() + char + _close())
    ps3.set_parse_action(lambda t: reps.GL3PrincipalSeries(t[0], t[1], t[2]))
    jb3 = (_head("JB3") + char + _close()).set_parse_action(
        lambda t: reps.GL3LanglandsQuotient(t[0]))
    gl3 = sc3 | st3 | ind3 | ps3 | jb3
    induced_ext = (_head("Ind") + gl3 + _close()).set_parse_action(
        lambda t: reps.PGL3ExtRep(t[0], reps.IND))
    signed_ext = (gl3 + pp.one_of("+ -")).set_parse_action(
        lambda t: reps.PGL3ExtRep(t[0], t[1]))
    pgl3 = induced_ext | signed_ext

    # PD^x
    pd_other = (label("label") + _semi() + pp.Keyword("heart").suppress()
                + pp.Suppress("=") + pp.one_of("yes no unknown")("heart"))
    pd = _head("D") + (pd_other | char("chi")) + _close()

    def make_pd(t):
        if "label" in t:
            return reps.PDOther(t["label"], t["heart"])
        if t["chi"].is_trivial:
            return reps.PDTrivial()
        return reps.PDUnramifiedCubic(t["chi"])

    pd.set_parse_action(make_pd)

    # GSp4
    sk = (_head("sk") + gl2 + _close()).set_parse_action(
        lambda t: reps.GSp4Supercuspidal(rho=t[0]))
    sc4_option = (pp.Keyword("zc")("zc") | pp.Keyword("std1")("std1")
                  | pp.Keyword("gen")("gen"))
    sc4 = (_head("sc4") + label("label") + pp.ZeroOrMore(_comma() + sc4_option)
           + _close() + pp.Opt(dual_mark("dual")))
    sc4.set_parse_action(lambda t: reps.GSp4Supercuspidal(
        t["label"], "zc" in t, "std1" in t, "gen" in t, dual="dual" in t))
    gsp4 = sk | sc4

    # torus characters
    torus_pair = char + _comma() + char
    torus = (_head("T") + torus_pair + _close()).set_parse_action(
        lambda t: TorusCharG2(t[0], t[1]))

    # L-parameters
    principal = pp.Keyword("principal").set_parse_action(
        lambda t: langlands.PrincipalSL2())
    sub_image = (pp.Literal("1")("image")
                 | pp.Keyword("mu2")("image") + pp.Suppress(":") + char("datum")
                 | pp.Keyword("mu3")("image") + pp.Suppress(":") + char("datum")
                 | pp.Keyword("S3")("image") + pp.Suppress(":") + gl2("datum"))
    subregular = (_head("subregular") + sub_image + _close()).set_parse_action(
        lambda t: langlands.SubregularSL2(t["image"], t["datum"] if "datum" in t else None))
    short = (_head("short") + gl2 + _close()).set_parse_action(
        lambda t: langlands.ShortRootSL2(t[0]))
    long_ = (_head("long") + gl2 + _close()).set_parse_action(
        lambda t: langlands.LongRootSL2(t[0]))
    cuspidal = (_head("cuspidal") + label + _close()).set_parse_action(
        lambda t: langlands.TrivialSL2Cuspidal(t[0]))
    levi_gl2 = ((pp.Keyword("M") | pp.Keyword("L"))("levi") + _semi() + gl2("datum"))
    levi_gl2.set_parse_action(lambda t: langlands.levi_factored(t["levi"], t["datum"]))
    levi_torus = pp.Keyword("T").suppress() + _semi() + torus_pair
    levi_torus.set_parse_action(
        lambda t: langlands.LeviFactored("T", TorusCharG2(t[0], t[1])))
    levi = _head("levi") + (levi_gl2 | levi_torus) + _close()
    param = principal | subregular | short | long_ | cuspidal | levi

    # G2
    def summand_or_irred(summand, irred):
        def build(t):
            if "kind" in t:
                return summand(t[0], t["kind"])
            return irred(t[0])
        return build

    def torus_summand_or_irred(t):
        chi = TorusCharG2(t[0], t[1])
        if "kind" in t:
            return reps.IBSummand(chi, t["kind"])
        return reps.IBIrred(chi)

    bracket = pp.Suppress("[") + (gl2 | char) + pp.Suppress("]")
    opt_kind = pp.Opt(_semi() + kind("kind"))
    note = pp.QuotedString('"', esc_char="\\")

    g2_items = [
        pp.Keyword("St_G2").set_parse_action(lambda t: reps.StG2()),
        pp.Literal("1_G2").set_parse_action(lambda t: reps.TrivG2()),
        (_head("JP") + number + _semi() + gl2 + _close()).set_parse_action(
            lambda t: reps.JP(t[0], t[1])),
        (_head("JQ") + number + _semi() + gl2 + _close()).set_parse_action(
            lambda t: reps.JQ(t[0], t[1])),
        (_head("JB") + torus_pair + _close()).set_parse_action(
            lambda t: reps.JB(TorusCharG2(t[0], t[1]))),
        (_head("deltaP") + gl2 + _close()).set_parse_action(
            lambda t: reps.DeltaP(t[0])),
        (_head("deltaQ") + gl2 + _close()).set_parse_action(
            lambda t: reps.DeltaQ(t[0])),
        (pp.Keyword("pi_gen").suppress() + bracket).set_parse_action(
            lambda t: reps.PiGen(t[0])),
        (pp.Keyword("pi_deg").suppress() + pp.Suppress("[1]")).set_parse_action(
            lambda t: reps.PiDeg1()),
        (pp.Keyword("pi_sc").suppress() + pp.Suppress("[")
         + pp.one_of(" ".join(reps.PI_SC_LABELS)) + pp.Suppress("]")).set_parse_action(
            lambda t: reps.PiSc(t[0])),
        (_head("IP") + gl2 + opt_kind + _close()).set_parse_action(
            summand_or_irred(reps.IPSummand, reps.IPIrred)),
        (_head("IQ") + gl2 + opt_kind + _close()).set_parse_action(
            summand_or_irred(reps.IQSummand, reps.IQIrred)),
        (_head("IB") + torus_pair + opt_kind + _close()).set_parse_action(
            torus_summand_or_irred),
        (_head("thetaD") + pd + _close()).set_parse_action(
            lambda t: reps.ScFromPD(t[0])),
        (_head("thetaB") + pgl3 + _close()).set_parse_action(
            lambda t: reps.ScFromB(t[0])),
        (_head("sc_G2") + label("label") + _semi()
         + (kind("kind") | pp.Keyword("rho").suppress() + pp.Suppress("=") + gl2("rho"))
         + _close()).set_parse_action(
            lambda t: reps.ScAbstract(t["label"], t.get("kind") == reps.GEN,
                                      t["rho"] if "rho" in t else None)),
        (_head("unresolved_G2") + note + _close()).set_parse_action(
            lambda t: reps.Unresolved("G2", t[0])),
        (_head("member") + param + _semi()
         + pp.Regex(r"-1|1|w2|w|r|eps") + _close()).set_parse_action(
            lambda t: reps.AbstractMember(t[0], t[1])),
    ]
    g2 = pp.MatchFirst(g2_items)

    # PGSp6
    p6_items = [
        pp.Keyword("St_P6").set_parse_action(lambda t: reps.StP6()),
        (_head("J2") + number + _semi() + gl2 + _close()).set_parse_action(
            lambda t: reps.J2(t[0], t[1])),
        (_head("delta2") + gl2 + _close()).set_parse_action(
            lambda t: reps.Delta2(t[0])),
        (pp.Keyword("sigma_gen").suppress() + bracket).set_parse_action(
            lambda t: reps.SigmaGen(t[0])),
        (_head("I2") + gl2 + opt_kind + _close()).set_parse_action(
            summand_or_irred(reps.I2Summand, reps.I2Irred)),
        (_head("J13") + number + _semi() + gl2 + _close()).set_parse_action(
            lambda t: reps.J13(t[0], t[1])),
        (_head("delta13") + gl2 + _close()).set_parse_action(
            lambda t: reps.Delta13(t[0])),
        (_head("I13") + gl2 + opt_kind + _close()).set_parse_action(
            summand_or_irred(reps.I13Summand, reps.I13Irred)),
        (_head("I3") + gl3 + opt_kind + _close()).set_parse_action(
            summand_or_irred(reps.I3Summand, reps.I3Irred)),
        (_head("delta1") + gsp4 + _close()).set_parse_action(
            lambda t: reps.Delta1(t[0])),
        (_head("J1") + number + _semi() + gsp4 + _close()).set_parse_action(
            lambda t: reps.J1(t[0], t[1])),
        (_head("I1") + gsp4 + _close()).set_parse_action(
            lambda t: reps.I1Irred(t[0])),
        (_head("sc_P6") + label("label") + _semi() + kind("kind")
         + pp.Opt(_semi() + pp.Keyword("from").suppress() + pp.Suppress("=")
                  + label("source")) + _close()).set_parse_action(
            lambda t: reps.ScAbstractP6(t["label"], t["kind"] == reps.GEN,
                                        t["source"] if "source" in t else None)),
        (_head("unresolved_P6") + note + _close()).set_parse_action(
            lambda t: reps.Unresolved("PGSp6", t[0])),
    ]
    p6 = pp.MatchFirst(p6_items)

    return {
        "g2": g2, "p6": p6, "param": param, "pgl3": pgl3, "gl3": gl3,
        "gsp4": gsp4, "pd": pd, "torus": torus, "gl2": gl2, "char": char,
    }


@functools.lru_cache(maxsize=None)
def _grammar(registry):
    logger.debug("building literal grammar for registry %s", registry.name)
    return make_grammar(registry)


def parse_literal(text, registry=None, kind=None):
    """Parse a literal of the given kind (or kinds), or of any kind.

    Kinds are tried in the order of :data:`KINDS`; the first complete parse
    wins.

    Raises:
        LiteralSyntaxError: if no kind parses the whole text.
        UnknownSymbolError: for a character symbol missing from the registry.
        PreconditionError: for well-formed text naming an invalid value.
    """
    if registry is None:
        registry = Registry.default()
    grammar = _grammar(registry)
    if kind is None:
        kinds = KINDS
    elif isinstance(kind, str):
        kinds = (kind,)
    else:
        kinds = tuple(kind)
    best = None
    for name in kinds:
        try:
            element = grammar[name]
        except KeyError:
            raise NotFoundError("unknown literal kind {!r}".format(name))
        try:
            return element.parse_string(text.strip(), parse_all=True)[0]
        except pp.ParseBaseException as exc:
            if best is None or exc.loc > best.loc:
                best = exc
    raise LiteralSyntaxError(text, best.loc, best.msg)


def parse_rep_literal(text, registry=None):
    """Parse a GL2, GL3, G2, PGSp6, PD^x or L-parameter literal.

    Bare characters and torus characters are rejected with
    :class:`LiteralSyntaxError`.
    """
    return parse_literal(text, registry, REP_KINDS)


def format_literal(value):
    return str(value)


def roundtrips(value, registry=None):
    """True if the printed literal parses back to ``value``."""
    return parse_literal(str(value), registry) == value
