"""Exception hierarchy for g2theta.

Bad input raises a ``ValueError`` subclass and broken internal state a
``RuntimeError`` subclass, so callers that only know the builtins can still
catch them.
"""


class G2ThetaError(Exception):
    """Base class of every error raised by this package."""


class RegistryError(G2ThetaError, ValueError):
    """Malformed registry, or characters drawn from two different registries."""


class UnknownSymbolError(RegistryError):
    """A character symbol that the registry does not declare."""

    def __init__(self, name, registry_name="default"):
        self.name = name
        self.registry_name = registry_name
        super().__init__(
            "unknown character symbol '{}' (registry '{}')".format(
                name, registry_name))


class PreconditionError(G2ThetaError, ValueError):
    """An input rejected by an operation's precondition."""


class NotCoveredError(PreconditionError):
    """An input that lies outside the tables encoded by an engine."""


class PContextError(PreconditionError):
    """Data inconsistent with the residue characteristic context."""


class NotFoundError(G2ThetaError, KeyError):
    """A table lookup with no entry."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class LiteralSyntaxError(G2ThetaError, ValueError):
    """A literal that does not conform to the grammar."""

    def __init__(self, text, location, message):
        self.text = text
        self.location = location
        self.line = text.count("\n", 0, location) + 1
        self.column = location - (text.rfind("\n", 0, location) + 1) + 1
        super().__init__("{} at column {}: {!r}".format(
            message, self.column, text))


class InvariantViolation(G2ThetaError, RuntimeError):
    """Two engines disagree about a fact that must hold."""
