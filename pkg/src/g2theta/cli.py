#! /usr/bin/env python3
"""Command-line front end: ``g2theta <command> ...``.

Every command prints either text or, with ``--format json``, one JSON
document ``{"command": ..., "result": ...}`` that validates against
``g2theta/data/output.schema.json``.  Exit status is 0 on success, 1 when
a verification suite reports failures and 2 on bad input.
"""
import argparse
import json
import logging
import sys
from functools import lru_cache
from importlib import resources

import jsonschema

from . import __version__, jacquet, langlands, reps, rootsys, theta
from .config import P_CONTEXTS, Q_READINGS, Settings
from .errors import G2ThetaError, InvariantViolation
from .literals import parse_literal
from .reducibility import decompose
from .verify import SUITE_NAMES, run_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2

# literal kind of the datum taken by each (group, parabolic) engine
DATUM_KINDS = {
    ("G2", "B"): "torus",
    ("PGSp6", "P3"): "gl3",
    ("PGSp6", "P1"): "gsp4",
}

THETA_DIRECTIONS = {
    "d2g": ("pd", theta.theta_D_to_G2),
    "b2g": ("pgl3", theta.theta_B_to_G2),
    "g2p": ("g2", None),
    "p2g": ("p6", theta.theta_P6_to_G2),
}


def kind_of(value):
    """The literal kind a parsed value belongs to."""
    if reps.is_g2_rep(value):
        return "g2"
    if reps.is_p6_rep(value):
        return "p6"
    if isinstance(value, langlands.LParam):
        return "param"
    for cls, kind in ((reps.PGL3ExtRep, "pgl3"), (reps.GL3Rep, "gl3"),
                      (reps.GSp4Supercuspidal, "gsp4"), (reps.PDxRep, "pd"),
                      (reps.GL2Rep, "gl2")):
        if isinstance(value, cls):
            return kind
    if hasattr(value, "weyl_orbit"):
        return "torus"
    return "char"


# -- commands ------------------------------------------------------------------

def cmd_rootsys(args, settings):
    parabolics = []
    for group, name in rootsys.parabolic_names():
        data = rootsys.parabolic_data(group, name)
        parabolics.append({
            "group": group, "name": name, "levi": data.levi,
            "modulus": data.modulus,
            "modulus_exponent": [str(x) for x in data.modulus_exponent],
            "nilradical_dimension": data.nilradical_dimension,
        })
    return {
        "g2_roots": [str(r) for r in rootsys.g2_roots()],
        "g2_weyl_order": rootsys.g2_weyl_order(),
        "c3_weyl_order": rootsys.c3_weyl_order(),
        "c3_hyperplanes": [list(n) for n in rootsys.c3_reflection_hyperplanes()],
        "parabolics": parabolics,
    }


def cmd_decompose(args, settings):
    kind = DATUM_KINDS.get((args.group, args.parabolic), "gl2")
    datum = parse_literal(args.datum, settings.registry, kind)
    structure = decompose(args.group, args.parabolic, args.s, datum)
    return {
        "induced": structure.induced,
        "length": structure.length,
        "resolved": structure.resolved,
        "irreducible": structure.irreducible,
        "constituents": [{"rep": str(c.rep), "position": c.position}
                         for c in structure.constituents],
    }


def cmd_packet(args, settings):
    param = parse_literal(args.param, settings.registry, "param")
    packet = langlands.packet_of(param, settings.registry)
    group = packet.component_group
    return {
        "param": str(param),
        "component_group": None if group is None else str(group),
        "enumerated": packet.enumerated,
        "members": [{"character": label, "rep": str(rep)}
                    for label, rep in packet.members],
    }


def cmd_jacquet(args, settings):
    if args.group == "G2":
        pieces = jacquet.minrep_jacquet(args.group, args.parabolic)
    else:
        pieces = jacquet.minrep_jacquet_p6(args.parabolic)
    return {"group": args.group, "parabolic": args.parabolic,
            "pieces": [p.as_dict() for p in pieces]}


def cmd_ie_filtration(args, settings):
    E = jacquet.EtaleCubic.parse(args.etale)
    pieces = jacquet.ie_filtration(args.s, E)
    return {"s": args.s, "etale": str(E), "m_E": E.m_E,
            "pieces": [p.as_dict() for p in pieces]}


def cmd_theta(args, settings):
    kind, oracle = THETA_DIRECTIONS[args.direction]
    source = parse_literal(args.rep, settings.registry, kind)
    if args.direction == "g2p":
        lift = theta.theta_G2_to_P6(source, settings.p_context, settings.registry)
    else:
        lift = oracle(source, settings.p_context)
    result = lift.as_dict()
    result["source"] = str(source)
    return result


def cmd_dichotomy(args, settings):
    pi = parse_literal(args.rep, settings.registry, "g2")
    return {"rep": str(pi),
            "side": theta.dichotomy(pi, settings.p_context, settings.registry)}


def cmd_ds_target(args, settings):
    pi = parse_literal(args.rep, settings.registry, "g2")
    return {"rep": str(pi),
            "target": theta.discrete_series_target(pi, settings.p_context,
                                                   settings.registry)}


def cmd_verify(args, settings):
    report = run_verification(args.suite, args.seed, args.size, settings, args.jobs)
    return report


def cmd_parse(args, settings):
    value = parse_literal(args.literal, settings.registry)
    return {"kind": kind_of(value), "literal": str(value)}


# -- output --------------------------------------------------------------------

def _text(command, result):
    if command == "verify":
        return result.summary()
    if command == "decompose":
        lines = ["{} (length {})".format(result["induced"], result["length"])]
        lines += ["  {:<15} {}".format(c["position"], c["rep"])
                  for c in result["constituents"]]
        return "\n".join(lines)
    if command == "packet":
        lines = ["{}  A = {}".format(result["param"], result["component_group"])]
        if not result["enumerated"]:
            lines.append("  (not enumerated)")
        lines += ["  {:<4} {}".format(m["character"], m["rep"])
                  for m in result["members"]]
        return "\n".join(lines)
    if command in ("jacquet", "ie-filtration"):
        return "\n".join("  {} {:<7} {}".format(p["layer"], p["name"], p["descriptor"])
                         for p in reversed(result["pieces"]))
    if command == "theta":
        text = result["rep"] or result["value"]
        if result["big_theta_note"]:
            text += "  [{}]".format(result["big_theta_note"])
        return text
    if command in ("dichotomy", "ds-target"):
        return result["side"] if command == "dichotomy" else result["target"]
    if command == "parse":
        return "{}: {}".format(result["kind"], result["literal"])
    return json.dumps(result, sort_keys=True, indent=2)


@lru_cache(maxsize=None)
def load_schema():
    text = resources.files("g2theta").joinpath(
        "data/output.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate_output(doc):
    """Check a JSON document against the shipped output schema.

    Raises:
        InvariantViolation: if the document does not validate.
    """
    try:
        jsonschema.validate(doc, load_schema())
    except jsonschema.ValidationError as exc:
        raise InvariantViolation("{} output does not match the schema: {}".format(
            doc.get("command"), exc.message))


def render(command, result, fmt):
    if fmt == "json":
        payload = result.as_dict() if hasattr(result, "as_dict") else result
        doc = {"command": command, "result": payload}
        validate_output(doc)
        return json.dumps(doc, sort_keys=True, indent=2)
    return _text(command, result)


# -- argument parsing ------------------------------------------------------------

COMMANDS = {
    "rootsys": cmd_rootsys,
    "decompose": cmd_decompose,
    "packet": cmd_packet,
    "jacquet": cmd_jacquet,
    "ie-filtration": cmd_ie_filtration,
    "theta": cmd_theta,
    "dichotomy": cmd_dichotomy,
    "ds-target": cmd_ds_target,
    "verify": cmd_verify,
    "parse": cmd_parse,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="g2theta",
        description="Symbolic tables for the exceptional theta correspondences of G2.")
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + __version__)
    parser.add_argument("--registry", metavar="FILE",
                        help="YAML registry of character symbols")
    parser.add_argument("--p", dest="p_context", choices=P_CONTEXTS,
                        help="residue characteristic context (default: other)")
    parser.add_argument("--q-reading", choices=Q_READINGS, default="corrected",
                        help="reading of the C3 quadratic form")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed of the verify families (default: 0)")
    parser.add_argument("--size", type=int, default=100,
                        help="cases per verify property (default: 100)")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress (-vv for debug output)")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    sub.add_parser("rootsys", help="root systems, Weyl groups and parabolics")

    p = sub.add_parser("decompose", help="constituents of an induced representation")
    p.add_argument("group", choices=("G2", "PGSp6"))
    p.add_argument("parabolic", help="P, Q, B (G2) or P1, P2, P3, P13 (PGSp6)")
    p.add_argument("s", help="twist, e.g. 1/2")
    p.add_argument("datum", help="inducing datum literal")

    p = sub.add_parser("packet", help="L-packet of a G2 parameter")
    p.add_argument("param", help="parameter literal, e.g. 'subregular(1)'")

    p = sub.add_parser("jacquet", help="Jacquet module of a minimal representation")
    p.add_argument("group", choices=("G2", "PGSp6"))
    p.add_argument("parabolic")

    p = sub.add_parser("ie-filtration", help="filtration of I_E(s) over G2")
    p.add_argument("s")
    p.add_argument("etale", help="split, partial[:K] or field[:label]")

    p = sub.add_parser("theta", help="evaluate one theta lift")
    p.add_argument("direction", choices=tuple(THETA_DIRECTIONS))
    p.add_argument("rep")

    p = sub.add_parser("dichotomy", help="PD^x or PGSp6 side of a G2 representation")
    p.add_argument("rep")

    p = sub.add_parser("ds-target", help="group of the discrete series lift")
    p.add_argument("rep")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    # also accepted after the suite name; the global value stands otherwise
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--size", type=int, default=argparse.SUPPRESS)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("parse", help="parse and print a literal")
    p.add_argument("literal")
    return parser


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level,
                        format="%(asctime)s %(name)s %(levelname)s: %(message)s")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        settings = Settings.from_env(args.registry, args.p_context, args.q_reading)
        result = COMMANDS[args.command](args, settings)
        output = render(args.command, result, args.format)
    except (G2ThetaError, OSError) as exc:
        print("error: {}".format(exc), file=sys.stderr)
        return EXIT_USAGE
    print(output)
    if args.command == "verify" and not result.ok:
        return EXIT_FAILURES
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
