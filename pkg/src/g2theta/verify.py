"""Verification suites run over seeded generated families.

Each suite evaluates a few named properties and returns one
:class:`PropertyResult` per property.  Counterexamples are shrunk before
they are reported, so the literals in a failing report are as simple as
the constructors allow.
"""
import dataclasses
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

from . import jacquet, langlands, reps, rootsys, theta
from .chars import ExponentChar, borel_char_triple
from .config import Settings
from .errors import G2ThetaError, InvariantViolation, NotCoveredError
from .generators import LABELS, Generator
from .reducibility import (DIRECT_SUMMAND, QUOTIENT, SUB, decompose_IB_G2,
                           decompose_IP, decompose_IQ)

logger = logging.getLogger(__name__)

MAX_FAILURES = 5
SHRINK_STEPS = 50


@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def check(self, holds, message):
        self.cases += 1
        if not holds and len(self.failures) < MAX_FAILURES:
            self.failures.append(message)

    def as_dict(self):
        return {"name": self.name, "cases": self.cases,
                "failures": list(self.failures)}


@dataclass
class Report:
    suite: str
    seed: int
    size: int
    results: List[PropertyResult] = field(default_factory=list)

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    @property
    def failure_count(self):
        return sum(len(r.failures) for r in self.results)

    def as_dict(self):
        return {"suite": self.suite, "seed": self.seed, "size": self.size,
                "ok": self.ok, "properties": [r.as_dict() for r in self.results]}

    def summary(self):
        lines = []
        for r in self.results:
            status = "ok" if r.ok else "FAIL"
            lines.append("{:<40} {:>6} cases  {}".format(r.name, r.cases, status))
            for f in r.failures:
                lines.append("    " + f)
        return "\n".join(lines)


# -- shrinking -----------------------------------------------------------------

def _candidates(value):
    """Simpler variants of ``value``: twists first, then characters, then labels."""
    if isinstance(value, Fraction):
        return [x for x in (Fraction(1, 2), Fraction(1)) if x < value]
    if isinstance(value, ExponentChar):
        out = []
        if not value.is_unitary:
            out.append(value.unitary_part())
        if not value.is_trivial:
            out.append(value.registry.trivial())
        return out
    if isinstance(value, str):
        return [LABELS[0]] if value in LABELS and value != LABELS[0] else []
    if not dataclasses.is_dataclass(value):
        return []
    out = []
    for f in dataclasses.fields(value):
        current = getattr(value, f.name)
        for simpler in _candidates(current):
            try:
                out.append(dataclasses.replace(value, **{f.name: simpler}))
            except (G2ThetaError, TypeError):
                continue
    return out


def shrink(value, fails):
    """Greedily simplify ``value`` while ``fails`` keeps returning True."""
    for _ in range(SHRINK_STEPS):
        for candidate in _candidates(value):
            try:
                still = fails(candidate)
            except G2ThetaError:
                still = False
            if still:
                value = candidate
                break
        else:
            return value
    return value


def _check_each(result, values, holds, describe):
    """Run ``holds`` on every value and report shrunk counterexamples."""
    def fails(v):
        return not holds(v)

    for value in values:
        try:
            good = holds(value)
        except NotCoveredError:
            continue
        except G2ThetaError as exc:
            result.check(False, "{}: {}".format(value, exc))
            continue
        result.check(good, "" if good else describe(shrink(value, fails)))


# -- suites --------------------------------------------------------------------

def suite_dichotomy(gen, size, settings):
    result = PropertyResult("dichotomy partition")

    def holds(pi):
        try:
            side = theta.dichotomy(pi, settings.p_context, settings.registry)
        except InvariantViolation:
            return False
        return side != theta.UNKNOWN

    _check_each(result, gen.family(gen.g2_rep, size), holds,
                lambda pi: "{} violates the dichotomy".format(pi))

    trichotomy = PropertyResult("discrete series trichotomy")
    _check_each(trichotomy, gen.family(gen.g2_discrete_series, size),
                lambda pi: theta.discrete_series_target(
                    pi, settings.p_context, settings.registry) != theta.UNKNOWN,
                lambda pi: "{} has no unique discrete series lift".format(pi))
    return [result, trichotomy]


def _injective(name, values, lift):
    result = PropertyResult(name)
    seen = {}
    for value in values:
        try:
            out = lift(value)
        except NotCoveredError:
            continue
        if not out.is_rep:
            continue
        key = str(out.rep)
        other = seen.setdefault(key, value)
        result.check(other == value, "{} and {} both lift to {}".format(
            other, value, key))
    return result


def suite_howe(gen, size, settings):
    p = settings.p_context
    from_d = _injective("theta_D injective", gen.family(gen.pd_rep, size),
                        lambda tau: theta.theta_D_to_G2(tau, p))
    from_b = _injective("theta_B injective", gen.family(gen.pgl3_rep, size),
                        lambda tau: theta.theta_B_to_G2(tau, p))
    to_p6 = _injective("theta_G2_to_P6 injective", gen.family(gen.g2_rep, size),
                       lambda pi: theta.theta_G2_to_P6(pi, p, settings.registry))

    disjoint = PropertyResult("theta_B and theta_D images disjoint")
    d_images = {}
    for tau in gen.family(gen.pd_rep, size):
        lift = theta.theta_D_to_G2(tau, p)
        if lift.is_rep:
            d_images[str(lift.rep)] = tau
    for tau in gen.family(gen.pgl3_rep, size):
        try:
            lift = theta.theta_B_to_G2(tau, p)
        except NotCoveredError:
            continue
        if lift.is_rep:
            key = str(lift.rep)
            disjoint.check(key not in d_images, "{} lifts from both {} and {}".format(
                key, tau, d_images.get(key)))
    return [from_d, from_b, to_p6, disjoint]


def suite_weyl(gen, size, settings):
    orders = PropertyResult("Weyl group orders")
    orders.check(rootsys.g2_weyl_order() == 12,
                 "G2 Weyl group has order {}".format(rootsys.g2_weyl_order()))
    orders.check(rootsys.c3_weyl_order() == 48,
                 "C3 Weyl group has order {}".format(rootsys.c3_weyl_order()))

    hyperplanes = PropertyResult("reflection hyperplanes")
    found = rootsys.c3_reflection_hyperplanes()
    hyperplanes.check(len(found) == 9, "{} reflections".format(len(found)))
    for normal in rootsys.C3_PRINTED_HYPERPLANES:
        hyperplanes.check(normal in found, "hyperplane {} missing".format(normal))

    invariance = PropertyResult("q invariant under the Weyl group")
    coweyl = rootsys.c3_coweyl_group()
    weyl = rootsys.c3_weyl_group()

    def holds(v):
        q = rootsys.c3_form_q(v, settings.q_reading)
        dual = rootsys.c3_dual_form(v)
        return (all(rootsys.c3_form_q(rootsys.c3_apply(m, v), settings.q_reading) == q
                    for m in coweyl)
                and all(rootsys.c3_dual_form(rootsys.c3_apply(m, v)) == dual
                        for m in weyl))

    _check_each(invariance, gen.family(gen.c3_vector, size), holds,
                lambda v: "q is not invariant at {}".format(v))

    g2_orbits = PropertyResult("G2 Weyl orbits")
    for chi in gen.family(gen.unitary_torus, size):
        orbit = chi.weyl_orbit()
        g2_orbits.check(len(orbit) <= 12 and chi in orbit,
                        "orbit of {} has {} elements".format(chi, len(orbit)))
    return [orders, hyperplanes, invariance, g2_orbits]


def suite_roundtrip(gen, size, settings):
    p, registry = settings.p_context, settings.registry
    nontempered = PropertyResult("non-tempered round trip G2 -> PGSp6 -> G2")
    transport = PropertyResult("Levi data transported by the lift")
    for pi in gen.family(gen.g2_nontempered, size):
        lift = theta.theta_G2_to_P6(pi, p, registry)
        back = theta.theta_P6_to_G2(lift.rep, p)
        nontempered.check(back.is_rep and back.rep == pi,
                          "{} -> {} -> {}".format(pi, lift, back))
        if isinstance(pi, (reps.JP, reps.JQ)):
            transport.check((lift.rep.s, lift.rep.tau) == (pi.s, pi.tau),
                            "{} lifts to {}".format(pi, lift))

    reverse = PropertyResult("non-tempered round trip PGSp6 -> G2 -> PGSp6")
    for sigma in gen.family(gen.p6_nontempered, size):
        down = theta.theta_P6_to_G2(sigma, p)
        if isinstance(sigma, reps.J1):
            reverse.check(down.is_zero, "{} lifts to {}".format(sigma, down))
            continue
        up = theta.theta_G2_to_P6(down.rep, p, registry)
        reverse.check(up.rep == sigma, "{} -> {} -> {}".format(sigma, down, up))

    tempered = PropertyResult("tempered round trip G2 -> PGSp6 -> G2")
    for pi in gen.family(gen.g2_tempered, size):
        lift = theta.theta_G2_to_P6(pi, p, registry)
        if not lift.is_rep:
            continue
        back = theta.theta_P6_to_G2(lift.rep, p)
        tempered.check(back.is_rep and back.rep == pi,
                       "{} -> {} -> {}".format(pi, lift, back))
    return [nontempered, transport, reverse, tempered]


def suite_packets(gen, size, settings):
    sizes = PropertyResult("packet size equals number of characters")
    members = PropertyResult("members recover their parameter and character")
    for param in gen.family(gen.lparam, size):
        packet = langlands.packet_of(param, settings.registry)
        if not packet.enumerated:
            continue
        labels = tuple(label for label, _ in packet.members)
        sizes.check(labels == packet.component_group.characters(),
                    "{}: members {} for characters {}".format(
                        param, labels, packet.component_group.characters()))
        for label, pi in packet.members:
            found = langlands.param_of(pi, settings.registry)
            char = langlands.member_character(pi, settings.registry)
            members.check(found == param and char == label,
                          "{} in the packet of {} gives {} / {}".format(
                              pi, param, found, char))
    return [sizes, members]


def suite_duality(gen, size, settings):
    quotients = PropertyResult("Langlands quotient of a standard module")
    for _ in range(size):
        tau, s = gen.gl2_discrete_series(), gen.twist()
        for decompose, make in ((decompose_IP, reps.jp), (decompose_IQ, reps.jq)):
            j = make(s, tau)
            top = decompose(s, tau)
            bottom = decompose(-s, tau.contragredient())
            quotients.check(j in top.at(QUOTIENT) and j in bottom.at(SUB),
                            "{} is not the quotient of {} nor the sub of {}"
                            .format(j, top.induced, bottom.induced))

    involution = PropertyResult("contragredient is an involution")
    for tau in gen.family(gen.gl2_tempered, size) + gen.family(gen.gl3_rep, size):
        involution.check(tau.contragredient().contragredient() == tau,
                         "{}^v^v = {}".format(tau, tau.contragredient().contragredient()))

    unitary = PropertyResult("unitary principal series of G2")
    for chi in gen.family(gen.unitary_torus, size):
        structure = decompose_IB_G2(chi)
        expected = 2 if reps.three_distinct_quadratics(borel_char_triple(chi)) else 1
        unitary.check(structure.length == expected and all(
            c.position == DIRECT_SUMMAND for c in structure.constituents),
            "I_B({}) has structure {}".format(chi, structure.reps()))
    return [quotients, involution, unitary]


def suite_preservation(gen, size, settings):
    p, registry = settings.p_context, settings.registry
    tempered = PropertyResult("temperedness preserved")
    generic = PropertyResult("genericity preserved on tempered lifts")
    pairs = []
    for pi in gen.family(gen.g2_rep, size):
        pairs.append((pi, theta.theta_G2_to_P6(pi, p, registry)))
    for tau in gen.family(gen.pgl3_rep, size):
        try:
            pairs.append((tau, theta.theta_B_to_G2(tau, p)))
        except NotCoveredError:
            continue
    for tau in gen.family(gen.pd_rep, size):
        pairs.append((tau, theta.theta_D_to_G2(tau, p)))
    for source, lift in pairs:
        if not lift.is_rep:
            continue
        tempered.check(source.tempered == lift.rep.tempered,
                       "{} -> {}".format(source, lift))
        if source.tempered:
            generic.check(source.generic == lift.rep.generic,
                          "{} -> {}".format(source, lift))
    return [tempered, generic]


def suite_jacquet(gen, size, settings):
    modulus = PropertyResult("Pi_0 twist equals half the modulus exponent")
    for key, twist, half in jacquet.modulus_consistency():
        modulus.check(twist == half, "{}: twist {} but half modulus {}".format(
            key, twist, half))

    tables = PropertyResult("filtration pieces induce from tabulated subgroups")
    filtrations = [jacquet.minrep_jacquet("G2", q) for q in ("P", "Q")]
    filtrations += [jacquet.minrep_jacquet_p6(q) for q in ("P1", "P2", "P3")]
    for tag in (jacquet.SPLIT, jacquet.PARTIAL_SPLIT, jacquet.FIELD):
        E = jacquet.EtaleCubic(tag)
        filtrations.append(jacquet.ie_filtration(gen.twist(), E))
        layers = jacquet.ie_filtration(Fraction(1, 2), E)
        expected = 5 if E.m_E else 3
        tables.check(len(layers) == expected,
                     "I_E(1/2) for {} has {} layers".format(E, len(layers)))
        structure = jacquet.rje_structure(jacquet.H3M2, E)
        tables.check(structure.ie_half_length == (3 if E.is_field else 2),
                     "I_E(1/2) for {} has length {}".format(
                         E, structure.ie_half_length))
    for pieces in filtrations:
        tables.check([pc.layer for pc in pieces] == list(range(len(pieces))),
                     "layers {} are not contiguous".format(
                         [pc.layer for pc in pieces]))
        for piece in pieces:
            for group, name in piece.subgroups:
                try:
                    jacquet.subgroup_parabolic(group, name)
                    tables.check(True, "")
                except G2ThetaError:
                    tables.check(False, "{} {} is not tabulated".format(group, name))
    return [modulus, tables]


def suite_erratum(gen, size, settings):
    corrected = PropertyResult("corrected q reading is invariant")
    printed = PropertyResult("printed q reading fails somewhere")
    coweyl = rootsys.c3_coweyl_group()
    failures = 0
    for v in gen.family(gen.c3_vector, size):
        for reading in ("corrected", "printed"):
            q = rootsys.c3_form_q(v, reading)
            ok = all(rootsys.c3_form_q(rootsys.c3_apply(m, v), reading) == q
                     for m in coweyl)
            if reading == "corrected":
                corrected.check(ok, "q is not invariant at {}".format(v))
            elif not ok:
                failures += 1
    printed.check(failures > 0, "printed reading invariant on all {} vectors"
                  .format(size))
    return [corrected, printed]


SUITES = {
    "dichotomy": suite_dichotomy,
    "howe": suite_howe,
    "weyl": suite_weyl,
    "roundtrip": suite_roundtrip,
    "packets": suite_packets,
    "duality": suite_duality,
    "preservation": suite_preservation,
    "jacquet": suite_jacquet,
    "erratum": suite_erratum,
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def _run_one(name, seed, size, settings):
    gen = Generator(settings.registry, seed, settings.p_context)
    logger.info("running suite %s (seed=%s, size=%s)", name, seed, size)
    return SUITES[name](gen, size, settings)


def run_verification(suite, seed=0, size=100, settings=None, jobs=1):
    """Run one suite, or every suite for ``"all"``, and collect a Report.

    Each suite draws from its own generator seeded with ``seed``; results
    are listed in suite order whatever ``jobs`` is.
    """
    if suite not in SUITE_NAMES:
        raise NotCoveredError("unknown suite {!r}; choose from {}".format(
            suite, ", ".join(SUITE_NAMES)))
    settings = settings or Settings()
    names = list(SUITES) if suite == "all" else [suite]
    if jobs > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(
                lambda n: _run_one(n, seed, size, settings), names))
    else:
        batches = [_run_one(n, seed, size, settings) for n in names]
    report = Report(suite, seed, size)
    for batch in batches:
        report.results.extend(batch)
    if not report.ok:
        logger.warning("suite %s: %d failures", suite, report.failure_count)
    return report
