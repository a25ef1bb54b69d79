"""Run settings: the character registry and the residue-characteristic
context.
"""
import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache

from importlib import resources

import yaml

from .chars import Registry
from .errors import PreconditionError, RegistryError
from .rootsys import Q_READINGS

logger = logging.getLogger(__name__)

P_CONTEXTS = ("2", "3", "other")

REGISTRY_ENV = "REGISTRY"
PCONTEXT_ENV = "PCONTEXT"


def load_registry(path, name=None):
    """Load a registry from a YAML file of the form ``symbols: [...]``.

    Raises:
        RegistryError: if the file is malformed.
    """
    with open(path) as f:
        try:
            doc = yaml.safe_load(f)
        except yaml.YAMLError as exc:
            raise RegistryError("cannot parse registry file {}: {}"
                                .format(path, exc))
    return registry_from_document(doc, name or os.path.basename(path))


def registry_from_document(doc, name):
    if not isinstance(doc, dict) or not isinstance(doc.get("symbols"), list):
        raise RegistryError("registry {} must have a 'symbols' list".format(name))
    return Registry.from_records(doc["symbols"], name=name)


@lru_cache(maxsize=None)
def default_registry():
    text = resources.files("g2theta").joinpath(
        "data/default_registry.yml").read_text(encoding="utf-8")
    return registry_from_document(yaml.safe_load(text), "default")


def normalize_p_context(value):
    value = str(value)
    if value not in P_CONTEXTS:
        raise PreconditionError("p-context must be one of {}, got {!r}"
                                .format(", ".join(P_CONTEXTS), value))
    return value


@dataclass(frozen=True)
class Settings:
    registry: Registry = field(default_factory=default_registry)
    p_context: str = "other"
    q_reading: str = "corrected"

    def __post_init__(self):
        object.__setattr__(self, "p_context",
                           normalize_p_context(self.p_context))
        if self.q_reading not in Q_READINGS:
            raise PreconditionError("unknown q reading {!r}"
                                    .format(self.q_reading))

    @classmethod
    def from_env(cls, registry_path=None, p_context=None, q_reading="corrected",
                 environ=None):
        """Resolve explicit arguments, then the environment, then defaults."""
        environ = os.environ if environ is None else environ
        registry_path = registry_path or environ.get(REGISTRY_ENV)
        p_context = p_context or environ.get(PCONTEXT_ENV) or "other"
        if registry_path:
            registry = load_registry(registry_path)
        else:
            registry = default_registry()
        logger.debug("settings: registry=%s p=%s", registry.name, p_context)
        return cls(registry=registry, p_context=p_context, q_reading=q_reading)
