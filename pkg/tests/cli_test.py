import contextlib
import io
import json
import os
import tempfile
import unittest

import jsonschema

from g2theta import cli
from g2theta.errors import InvariantViolation


class TestCliMethods(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.schema = cli.load_schema()

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = cli.main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def run_json(self, *argv, expected_code=0):
        code, out, err = self.run_cli("--format", "json", *argv)
        self.assertEqual(code, expected_code, err)
        doc = json.loads(out)
        jsonschema.validate(doc, self.schema)
        return doc["result"]

    def test_rootsys(self):
        result = self.run_json("rootsys")
        self.assertEqual(result["g2_weyl_order"], 12)
        self.assertEqual(result["c3_weyl_order"], 48)
        self.assertEqual(len(result["g2_roots"]), 12)
        self.assertEqual(len(result["c3_hyperplanes"]), 9)

    def test_decompose(self):
        result = self.run_json("decompose", "G2", "P", "1/2", "sc(a, sd)")
        self.assertEqual(result["induced"], "IP(1/2; sc(a, sd))")
        self.assertEqual(result["length"], 2)
        self.assertEqual(
            sorted((c["position"], c["rep"]) for c in result["constituents"]),
            [("quotient", "JP(1/2; sc(a, sd))"), ("sub", "deltaP(sc(a, sd))")])

    def test_decompose_borel(self):
        result = self.run_json("decompose", "G2", "B", "0", "T(|.|^3, |.|^1)")
        self.assertEqual(result["length"], 2)
        self.assertTrue(result["resolved"])
        self.assertIn({"rep": "JQ(7/2; st(1))", "position": "subquotient"},
                      result["constituents"])

    def test_decompose_text(self):
        code, out, _ = self.run_cli("decompose", "G2", "Q", "5/2", "st(1)")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn("St_G2", out)
        self.assertIn("sub", out)

    def test_packet(self):
        result = self.run_json("packet", "subregular(1)")
        self.assertEqual(result["component_group"], "S3")
        self.assertEqual([m["character"] for m in result["members"]],
                         ["1", "r", "eps"])
        result = self.run_json("packet", "cuspidal(c)")
        self.assertIsNone(result["component_group"])
        self.assertFalse(result["enumerated"])
        self.assertEqual(result["members"], [])

    def test_jacquet(self):
        result = self.run_json("jacquet", "PGSp6", "P2")
        self.assertEqual(len(result["pieces"]), 4)
        result = self.run_json("jacquet", "G2", "P")
        self.assertEqual([p["layer"] for p in result["pieces"]], [0, 1, 2])

    def test_ie_filtration(self):
        result = self.run_json("ie-filtration", "1/2", "field")
        self.assertEqual(result["m_E"], 0)
        self.assertEqual(len(result["pieces"]), 3)
        result = self.run_json("ie-filtration", "1/2", "split")
        self.assertEqual(result["m_E"], 3)
        self.assertEqual(len(result["pieces"]), 5)

    def test_theta(self):
        result = self.run_json("theta", "g2p", "pi_gen[1]")
        self.assertEqual(result["value"], "Rep")
        self.assertEqual(result["rep"], "I3(St3(1); gen)")
        self.assertEqual(result["source"], "pi_gen[1]")
        result = self.run_json("theta", "g2p", "pi_sc[-1]")
        self.assertEqual(result["value"], "Unknown")
        self.assertIsNone(result["rep"])
        result = self.run_json("theta", "b2g", "St3(1)-")
        self.assertEqual(result["rep"], "pi_sc[1]")

    def test_theta_p_context(self):
        code, out, err = self.run_cli("theta", "d2g", "D(a; heart=no)")
        self.assertEqual(code, cli.EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertIn("error:", err)
        result = self.run_json("--p", "3", "theta", "d2g", "D(a; heart=no)")
        self.assertEqual(result["value"], "Zero")

    def test_dichotomy_and_target(self):
        self.assertEqual(self.run_json("dichotomy", "pi_deg[1]")["side"], "PDx")
        self.assertEqual(self.run_json("dichotomy", "St_G2")["side"], "PGSp6")
        self.assertEqual(self.run_json("ds-target", "pi_gen[1]")["target"], "PGL3")
        code, out, _ = self.run_cli("ds-target", "St_G2")
        self.assertEqual((code, out.strip()), (0, "PGSp6"))

    def test_verify(self):
        result = self.run_json("verify", "weyl", "--size", "10")
        self.assertTrue(result["ok"])
        self.assertEqual(result["suite"], "weyl")
        result = self.run_json("--q-reading", "printed", "verify", "weyl",
                               "--size", "20", expected_code=cli.EXIT_FAILURES)
        self.assertFalse(result["ok"])

    def test_verify_global_options(self):
        result = self.run_json("--seed", "3", "--size", "12", "verify", "weyl")
        self.assertEqual((result["seed"], result["size"]), (3, 12))
        result = self.run_json("--size", "12", "verify", "weyl", "--size", "8")
        self.assertEqual((result["seed"], result["size"]), (0, 8))
        args = cli.build_parser().parse_args(["verify", "howe"])
        self.assertEqual((args.seed, args.size, args.jobs), (0, 100, 1))

    def test_parse(self):
        result = self.run_json("parse", "JP(1/2; sc(a, sd))")
        self.assertEqual(result, {"kind": "g2", "literal": "JP(1/2; sc(a, sd))"})
        self.assertEqual(self.run_json("parse", "St3(1)+")["kind"], "pgl3")
        code, _, err = self.run_cli("parse", "JP(1/2; sc(a")
        self.assertEqual(code, cli.EXIT_USAGE)
        self.assertIn("error:", err)

    def test_registry_file(self):
        with tempfile.TemporaryDirectory() as tempdir:
            path = os.path.join(tempdir, "small.yml")
            with open(path, "w") as f:
                f.write("symbols:\n  - {name: nu, order: 2}\n")
            result = self.run_json("--registry", path, "parse", "pi_gen[nu]")
            self.assertEqual(result["literal"], "pi_gen[nu]")
            code, _, _ = self.run_cli("--registry", path, "parse", "pi_gen[chi2]")
            self.assertEqual(code, cli.EXIT_USAGE)

    def test_bad_arguments(self):
        for argv in ([], ["bogus"], ["verify", "bogus"], ["--p", "5", "rootsys"],
                     ["decompose", "GL4", "P", "0", "st(1)"]):
            with self.subTest(argv=argv):
                with contextlib.redirect_stderr(io.StringIO()):
                    with self.assertRaises(SystemExit) as cm:
                        cli.main(argv)
                self.assertEqual(cm.exception.code, cli.EXIT_USAGE)

    def test_schema_rejects_bad_output(self):
        with self.assertRaises(InvariantViolation):
            cli.validate_output({"command": "dichotomy",
                                 "result": {"rep": "St_G2", "side": "PGL3"}})
        with self.assertRaises(InvariantViolation):
            cli.validate_output({"command": "parse", "result": {"kind": "g2"}})

    def test_unknown_parabolic(self):
        code, _, err = self.run_cli("decompose", "G2", "R", "0", "st(1)")
        self.assertEqual(code, cli.EXIT_USAGE)
        self.assertIn("error:", err)


if __name__ == '__main__':
    unittest.main()
