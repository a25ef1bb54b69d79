import os
import tempfile
import unittest

from g2theta import config
from g2theta.config import Settings
from g2theta.errors import PreconditionError, RegistryError


class TestSettingsMethods(unittest.TestCase):

    def setUp(self):
        self.tempdir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tempdir.cleanup()

    def write(self, name, text):
        path = os.path.join(self.tempdir.name, name)
        with open(path, "w") as f:
            f.write(text)
        return path

    def test_defaults(self):
        settings = Settings()
        self.assertEqual(settings.p_context, "other")
        self.assertEqual(settings.q_reading, "corrected")
        self.assertEqual(settings.registry.name, "default")
        self.assertEqual(list(settings.registry),
                         ["chi2", "chi3", "eta2", "eta3"])

    def test_p_context(self):
        self.assertEqual(Settings(p_context=3).p_context, "3")
        self.assertEqual(config.normalize_p_context("2"), "2")
        with self.assertRaises(PreconditionError):
            Settings(p_context="5")
        with self.assertRaises(PreconditionError):
            Settings(q_reading="misprinted")

    def test_from_env(self):
        path = self.write("small.yml", "symbols:\n  - name: nu\n    order: 2\n")
        settings = Settings.from_env(environ={"REGISTRY": path, "PCONTEXT": "2"})
        self.assertEqual(settings.p_context, "2")
        self.assertEqual(settings.registry.name, "small.yml")
        self.assertEqual(list(settings.registry), ["nu"])

    def test_arguments_override_env(self):
        settings = Settings.from_env(p_context="3", environ={"PCONTEXT": "2"})
        self.assertEqual(settings.p_context, "3")
        self.assertEqual(Settings.from_env(environ={}).p_context, "other")

    def test_malformed_registry(self):
        cases = {
            "list.yml": "- chi2\n",
            "entry.yml": "symbols:\n  - chi2\n",
            "keys.yml": "symbols:\n  - {name: nu, order: 2, colour: red}\n",
            "order.yml": "symbols:\n  - {name: nu, order: two}\n",
            "twice.yml": "symbols:\n  - {name: nu, order: 2}\n"
                         "  - {name: mu, order: 2}\n",
            "syntax.yml": "symbols: [\n",
        }
        for name, text in cases.items():
            with self.subTest(file=name):
                with self.assertRaises(RegistryError):
                    config.load_registry(self.write(name, text))

    def test_ramified_pair(self):
        path = self.write("pair.yml", "symbols:\n  - {name: nu, order: 2}\n"
                          "  - {name: mu, order: 2, ramified: true}\n")
        registry = config.load_registry(path, name="pair")
        self.assertEqual(registry.name, "pair")
        self.assertEqual(len(registry), 2)


if __name__ == '__main__':
    unittest.main()
