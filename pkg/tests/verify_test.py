import unittest
from fractions import Fraction

from g2theta import reps, verify
from g2theta.config import Settings
from g2theta.errors import NotCoveredError

from .strategies import REGISTRY

SIZE = 30
ONE = REGISTRY.trivial()


class TestSuiteMethods(unittest.TestCase):

    def assertReportOk(self, report):
        self.assertTrue(report.ok, report.summary())

    def test_each_suite(self):
        for name in verify.SUITES:
            with self.subTest(suite=name):
                report = verify.run_verification(name, seed=1, size=SIZE)
                self.assertReportOk(report)
                self.assertEqual(report.suite, name)

    def test_all_in_parallel(self):
        serial = verify.run_verification("all", seed=3, size=10)
        parallel = verify.run_verification("all", seed=3, size=10, jobs=4)
        self.assertEqual(serial.as_dict(), parallel.as_dict())
        self.assertReportOk(parallel)
        names = [r.name for r in parallel.results]
        self.assertEqual(names[0], "dichotomy partition")
        self.assertEqual(names[-1], "printed q reading fails somewhere")

    def test_seeded(self):
        first = verify.run_verification("howe", seed=11, size=SIZE)
        second = verify.run_verification("howe", seed=11, size=SIZE)
        self.assertEqual(first.as_dict(), second.as_dict())

    def test_printed_reading_fails(self):
        report = verify.run_verification("weyl", seed=0, size=SIZE,
                                         settings=Settings(q_reading="printed"))
        self.assertFalse(report.ok)
        self.assertGreater(report.failure_count, 0)
        self.assertIn("FAIL", report.summary())
        self.assertLessEqual(report.failure_count, 4 * verify.MAX_FAILURES)

    def test_unknown_suite(self):
        with self.assertRaises(NotCoveredError):
            verify.run_verification("bogus")

    def test_report_dict(self):
        report = verify.run_verification("jacquet", size=5)
        d = report.as_dict()
        self.assertEqual(set(d), {"suite", "seed", "size", "ok", "properties"})
        self.assertEqual(d["size"], 5)
        self.assertTrue(d["ok"])
        for prop in d["properties"]:
            self.assertEqual(set(prop), {"name", "cases", "failures"})
            self.assertEqual(prop["failures"], [])


class TestAcceptanceMethods(unittest.TestCase):

    # the sizes the command-line examples promise
    SIZES = (("dichotomy", 500), ("roundtrip", 200), ("howe", 500),
             ("preservation", 500), ("duality", 500), ("weyl", 200))

    def test_acceptance_sizes(self):
        for name, size in self.SIZES:
            with self.subTest(suite=name):
                report = verify.run_verification(name, seed=0, size=size)
                self.assertTrue(report.ok, report.summary())
                self.assertEqual(report.size, size)


class TestShrinkMethods(unittest.TestCase):

    def test_fractions(self):
        self.assertEqual(verify.shrink(Fraction(5, 2), lambda x: x > 0),
                         Fraction(1, 2))
        self.assertEqual(verify.shrink(Fraction(5, 2), lambda x: x > 1),
                         Fraction(5, 2))

    def test_representation(self):
        pi = reps.JP(Fraction(5, 2), reps.GL2Supercuspidal("c", ONE))
        self.assertEqual(verify.shrink(pi, lambda _: True),
                         reps.JP(Fraction(1, 2), reps.GL2Supercuspidal("a", ONE)))

    def test_keeps_passing_value(self):
        pi = reps.JP(Fraction(5, 2), reps.GL2Supercuspidal("c", ONE))
        self.assertEqual(verify.shrink(pi, lambda _: False), pi)

    def test_property_result(self):
        result = verify.PropertyResult("p")
        for i in range(verify.MAX_FAILURES + 3):
            result.check(False, str(i))
        result.check(True, "")
        self.assertEqual(result.cases, verify.MAX_FAILURES + 4)
        self.assertEqual(len(result.failures), verify.MAX_FAILURES)
        self.assertFalse(result.ok)


if __name__ == '__main__':
    unittest.main()
