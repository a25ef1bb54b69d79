"""Characters of F^x and of the maximal tori, with exact exponents.

A character is a product of finite-order symbols declared in a
:class:`Registry` and an unramified twist ``|.|^s`` with rational ``s``.
"""
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd

from . import rootsys
from .errors import PreconditionError, RegistryError, UnknownSymbolError

logger = logging.getLogger(__name__)

TRIVIAL_NAME = "1"

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")

# symbol names that would clash with literal keywords
RESERVED_NAMES = frozenset([
    "D", "T", "JB", "JP", "JQ", "J1", "J2", "J13", "IB", "IP", "IQ", "I1",
    "I2", "I3", "I13", "Ind", "St3", "sc", "sc3", "sc4", "sk", "st", "ps",
    "ps3", "one", "ind3", "JB3", "gen", "deg", "sd", "S3", "notS3", "w",
    "w2", "r", "eps", "heart", "yes", "no", "unknown", "zc", "std1", "det",
    "principal", "subregular", "short", "long", "cuspidal", "levi",
    "mu2", "mu3", "from", "rho", "member", "pi_gen", "pi_deg", "pi_sc",
    "thetaD", "thetaB", "deltaP", "deltaQ", "delta1", "delta2", "delta13",
    "sigma_gen", "St_G2", "St_P6", "sc_G2", "sc_P6", "unresolved_G2",
    "unresolved_P6", "M", "L",
])


def to_fraction(value):
    """Convert an int, Fraction or rational string to a Fraction.

    Floats are refused so that every exponent stays exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise PreconditionError("exponents must be exact rationals, got {!r}"
                                .format(value))
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise PreconditionError("not a rational number: {!r}".format(value))


@dataclass(frozen=True, order=True)
class CharSymbol:
    """A declared finite-order character of F^x."""

    name: str
    order: int
    ramified: bool = False

    def __post_init__(self):
        if not isinstance(self.order, int) or isinstance(self.order, bool) \
                or self.order < 1:
            raise RegistryError("symbol {!r} must have an integer order >= 1"
                                .format(self.name))
        if self.name == TRIVIAL_NAME:
            if self.order != 1:
                raise RegistryError("'1' is reserved for the trivial symbol")
            return
        if not isinstance(self.name, str) or not _NAME_RE.match(self.name):
            raise RegistryError("invalid character symbol name {!r}"
                                .format(self.name))
        if self.name in RESERVED_NAMES:
            raise RegistryError("character symbol name {!r} is reserved"
                                .format(self.name))

    @property
    def unramified(self):
        return not self.ramified


class Registry:
    """The set of finite-order characters a computation may name."""

    def __init__(self, symbols, name="default"):
        self.name = name
        self._symbols = {}
        for sym in symbols:
            if sym.name == TRIVIAL_NAME:
                continue
            if sym.name in self._symbols:
                raise RegistryError("duplicate character symbol {!r}"
                                    .format(sym.name))
            self._symbols[sym.name] = sym
        unramified = {}
        for sym in self._symbols.values():
            if sym.unramified and sym.order > 1:
                if sym.order in unramified:
                    raise RegistryError(
                        "two unramified symbols of order {}: {} and {}".format(
                            sym.order, unramified[sym.order], sym.name))
                unramified[sym.order] = sym.name
        logger.debug("registry %s with %d symbols", name, len(self._symbols))

    @classmethod
    def default(cls):
        """The packaged registry: chi2, eta2, chi3 and eta3."""
        from .config import default_registry
        return default_registry()

    @classmethod
    def from_records(cls, records, name="default"):
        """Build from dicts with keys name, order and ramified."""
        symbols = []
        for rec in records:
            if not isinstance(rec, dict) or "name" not in rec or "order" not in rec:
                raise RegistryError("malformed registry entry {!r}".format(rec))
            extra = set(rec) - {"name", "order", "ramified"}
            if extra:
                raise RegistryError("unexpected keys {} in registry entry {!r}"
                                    .format(sorted(extra), rec.get("name")))
            symbols.append(CharSymbol(str(rec["name"]), rec["order"],
                                      bool(rec.get("ramified", False))))
        return cls(symbols, name=name)

    def __getitem__(self, name):
        try:
            return self._symbols[name]
        except KeyError:
            raise UnknownSymbolError(name, self.name)

    def __contains__(self, name):
        return name in self._symbols

    def __iter__(self):
        return iter(sorted(self._symbols))

    def __len__(self):
        return len(self._symbols)

    @property
    def symbols(self):
        return tuple(sorted(self._symbols.values()))

    def __eq__(self, other):
        return isinstance(other, Registry) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return "Registry({!r}, {})".format(self.name, list(self))

    def unramified_symbol(self, order):
        """The unramified symbol of the given order, or None."""
        for sym in self._symbols.values():
            if sym.unramified and sym.order == order:
                return sym
        return None

    def trivial(self):
        return ExponentChar(self)

    def char(self, name=None, residue=1, exponent=0):
        torsion = () if name is None else ((name, residue),)
        return ExponentChar(self, torsion, exponent)

    def absolute(self, s):
        """The character |.|^s."""
        return ExponentChar(self, (), s)

    def torsion_characters(self):
        """Every finite-order character expressible in this registry."""
        names = sorted(self._symbols)
        ranges = [range(self._symbols[n].order) for n in names]
        for residues in product(*ranges):
            yield ExponentChar(self, tuple(zip(names, residues)))


@dataclass(frozen=True)
class ExponentChar:
    """``prod(sym^residue) * |.|^exponent``.

    ``torsion`` is kept sorted with residues reduced modulo each order and
    zero residues dropped, so equal characters compare equal.
    """

    registry: Registry = field(compare=False, repr=False, hash=False)
    torsion: tuple = ()
    exponent: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.registry, Registry):
            raise RegistryError("characters need a Registry, got {!r}"
                                .format(self.registry))
        items = self.torsion.items() if hasattr(self.torsion, "items") else self.torsion
        residues = {}
        for name, residue in items:
            sym = self.registry[name]
            residues[name] = (residues.get(name, 0) + int(residue)) % sym.order
        torsion = tuple(sorted((n, r) for n, r in residues.items() if r))
        object.__setattr__(self, "torsion", torsion)
        object.__setattr__(self, "exponent", to_fraction(self.exponent))

    def _check(self, other):
        if not isinstance(other, ExponentChar):
            raise PreconditionError("expected a character, got {!r}".format(other))
        if other.registry is not self.registry and other.registry != self.registry:
            raise RegistryError("characters from registries {!r} and {!r}"
                                .format(self.registry.name, other.registry.name))

    def __mul__(self, other):
        self._check(other)
        return ExponentChar(self.registry, self.torsion + other.torsion,
                            self.exponent + other.exponent)

    def inverse(self):
        return ExponentChar(self.registry,
                            tuple((n, -r) for n, r in self.torsion),
                            -self.exponent)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def power(self, k):
        return ExponentChar(self.registry,
                            tuple((n, k * r) for n, r in self.torsion),
                            k * self.exponent)

    def twist(self, s):
        return ExponentChar(self.registry, self.torsion,
                            self.exponent + to_fraction(s))

    def unitary_part(self):
        return ExponentChar(self.registry, self.torsion)

    @property
    def is_unitary(self):
        return self.exponent == 0

    @property
    def is_trivial(self):
        return not self.torsion and self.exponent == 0

    @property
    def order(self):
        """Multiplicative order, or None when the exponent is nonzero."""
        if self.exponent != 0:
            return None
        return self.unitary_order

    @property
    def unitary_order(self):
        """Order of the unitary part (1 for the trivial character)."""
        result = 1
        for name, residue in self.torsion:
            n = self.registry[name].order
            k = n // gcd(n, residue)
            result = result * k // gcd(result, k)
        return result

    @property
    def is_unramified(self):
        return all(not self.registry[n].ramified for n, _ in self.torsion)

    @property
    def is_quadratic(self):
        """Unitary of order exactly 2."""
        return self.order == 2

    @property
    def is_cubic(self):
        return self.order == 3

    def torsion_literal(self):
        parts = []
        for name, residue in self.torsion:
            parts.append(name if residue == 1 else "{}^{}".format(name, residue))
        return "*".join(parts)

    def __str__(self):
        parts = []
        tors = self.torsion_literal()
        if tors:
            parts.append(tors)
        if self.exponent != 0:
            parts.append("|.|^{}".format(self.exponent))
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return "ExponentChar({})".format(self)


def char_mul(a, b):
    return a * b


def char_inv(a):
    return a.inverse()


def sort_chars(chars):
    return sorted(chars, key=str)


@dataclass(frozen=True)
class TorusCharG2:
    """A character ``c1 x c2`` of the G2 torus in the (e1, e2) basis."""

    c1: ExponentChar
    c2: ExponentChar

    def __post_init__(self):
        self.c1._check(self.c2)

    @property
    def registry(self):
        return self.c1.registry

    def __mul__(self, other):
        return TorusCharG2(self.c1 * other.c1, self.c2 * other.c2)

    def inverse(self):
        return TorusCharG2(self.c1.inverse(), self.c2.inverse())

    def exponents(self):
        return (self.c1.exponent, self.c2.exponent)

    def unitary_part(self):
        return TorusCharG2(self.c1.unitary_part(), self.c2.unitary_part())

    @property
    def is_unitary(self):
        return self.c1.is_unitary and self.c2.is_unitary

    def apply_matrix(self, m):
        """Act by an integer matrix given in the (e1, e2) basis."""
        c = (self.c1, self.c2)
        out = []
        for row in m:
            value = c[0].power(row[0]) * c[1].power(row[1])
            out.append(value)
        return TorusCharG2(out[0], out[1])

    def coroot_value(self, root):
        """The character ``chi o root^vee`` of F^x."""
        k1, k2 = rootsys.g2_weight_pairings(root)
        return self.c1.power(k1) * self.c2.power(k2)

    def weyl_orbit(self):
        return {self.apply_matrix(m) for m in rootsys.g2_weyl_group_torus()}

    def __str__(self):
        return "T({}, {})".format(self.c1, self.c2)


@dataclass(frozen=True)
class TorusCharC3:
    """A character of the PGSp6 torus in the (s1, s2, s3) coordinates."""

    x1: ExponentChar
    x2: ExponentChar
    x3: ExponentChar

    def as_tuple(self):
        return (self.x1, self.x2, self.x3)

    def exponents(self):
        return rootsys.C3Vec.of(x.exponent for x in self.as_tuple())

    def __mul__(self, other):
        return TorusCharC3(*(a * b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def inverse(self):
        return TorusCharC3(*(a.inverse() for a in self.as_tuple()))

    def apply_matrix(self, m):
        xs = self.as_tuple()
        out = []
        for row in m:
            value = xs[0].registry.trivial()
            for k, x in zip(row, xs):
                value = value * x.power(k)
            out.append(value)
        return TorusCharC3(*out)

    def reflect(self, i):
        return self.apply_matrix(rootsys.C3_REFLECTIONS[i])

    def __str__(self):
        return "T3({}, {}, {})".format(*self.as_tuple())


def borel_char_triple(chi):
    """Values of ``chi`` on the coroots of the canonical long-root triple.

    For the canonical triple this is ``((c1 c2)^-1, c2, c1)``.
    """
    return tuple(chi.coroot_value(r) for r in rootsys.long_root_triple())


def torus_from_triple(triple):
    """Recover ``(c1, c2)`` from a triple produced by borel_char_triple.

    Raises:
        PreconditionError: if the product of the triple is not trivial.
    """
    if len(triple) != 3:
        raise PreconditionError("expected three characters")
    total = triple[0] * triple[1] * triple[2]
    if not total.is_trivial:
        raise PreconditionError("triple {} does not multiply to 1"
                                .format(", ".join(str(c) for c in triple)))
    rows = [rootsys.g2_weight_pairings(r) for r in rootsys.long_root_triple()]
    for i in range(3):
        for j in range(i + 1, 3):
            (a, b), (c, d) = rows[i], rows[j]
            det = a * d - b * c
            if det in (1, -1):
                # invert [[a, b], [c, d]] over the integers
                inv = ((d * det, -b * det), (-c * det, a * det))
                x, y = triple[i], triple[j]
                c1 = x.power(inv[0][0]) * y.power(inv[0][1])
                c2 = x.power(inv[1][0]) * y.power(inv[1][1])
                return TorusCharG2(c1, c2)
    raise PreconditionError("long-root triple does not span the torus")
