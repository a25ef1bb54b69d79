"""Root systems, Weyl groups and parabolic tables for G2 and for PGSp6.

G2 roots are stored as integer pairs ``(a, b)`` meaning ``a*alpha + b*beta``
with ``alpha`` short and ``beta`` long.  The maximal torus is identified
with ``GL1 x GL1`` through the characters ``e1 = 2*alpha + beta`` and
``e2 = alpha + beta``.

PGSp6 is handled through its C3 realization in the coordinates
``(s1, s2, s3)`` of the Siegel Levi torus.  Two actions of the same Weyl
group are available: the character action ``c3_reflect`` and its
contragredient ``c3_coreflect``, which acts on the dual coordinates.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple

from .errors import NotFoundError, PreconditionError

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]

G2_GRAM = ((2, -3), (-3, 6))
SHORT_NORM = 2
LONG_NORM = 6


@dataclass(frozen=True, order=True)
class RootVecG2:
    """The vector ``a*alpha + b*beta``."""

    a: int
    b: int

    def __add__(self, other):
        return RootVecG2(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return RootVecG2(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return RootVecG2(-self.a, -self.b)

    def scale(self, k):
        return RootVecG2(k * self.a, k * self.b)

    @property
    def norm(self):
        return g2_inner(self, self)

    @property
    def is_long(self):
        return self.norm == LONG_NORM

    @property
    def is_short(self):
        return self.norm == SHORT_NORM

    def torus_coordinates(self):
        """Coordinates in the basis (e1, e2) of the character lattice."""
        return (self.a - self.b, 2 * self.b - self.a)

    def __str__(self):
        return "({},{})".format(self.a, self.b)


ALPHA = RootVecG2(1, 0)
BETA = RootVecG2(0, 1)
HIGHEST_ROOT = RootVecG2(3, 2)
E1 = RootVecG2(2, 1)
E2 = RootVecG2(1, 1)


def g2_inner(u, v):
    """The invariant form with (alpha, alpha) = 2 and (beta, beta) = 6."""
    return (u.a * v.a * G2_GRAM[0][0] + (u.a * v.b + u.b * v.a) * G2_GRAM[0][1]
            + u.b * v.b * G2_GRAM[1][1])


def g2_coroot_pairing(v, root):
    """Return <v, root^vee> = 2 (v, root) / (root, root)."""
    norm = g2_inner(root, root)
    if norm == 0:
        raise PreconditionError("cannot pair with the zero vector")
    return Fraction(2 * g2_inner(v, root), norm)


def g2_reflect(root, v):
    """Reflect ``v`` in the hyperplane orthogonal to ``root``."""
    k = g2_coroot_pairing(v, root)
    if k.denominator != 1:
        raise PreconditionError("{} is not in the root lattice".format(v))
    return v - root.scale(int(k))


def g2_simple_reflection(name, v):
    """Apply ``s_alpha`` (name 'alpha' or 1) or ``s_beta`` ('beta' or 2)."""
    if name in ("alpha", 1):
        return g2_reflect(ALPHA, v)
    if name in ("beta", 2):
        return g2_reflect(BETA, v)
    raise PreconditionError("unknown simple reflection {!r}".format(name))


def g2_weyl_closure(seed):
    """Orbit of ``seed`` under the group generated by the simple reflections."""
    orbit = {seed}
    frontier = [seed]
    while frontier:
        v = frontier.pop()
        for name in ("alpha", "beta"):
            w = g2_simple_reflection(name, v)
            if w not in orbit:
                orbit.add(w)
                frontier.append(w)
    return orbit


def g2_roots():
    """All twelve roots, sorted."""
    roots = g2_weyl_closure(ALPHA) | g2_weyl_closure(BETA)
    roots = sorted(roots)
    assert len(roots) == 12
    return roots


def g2_positive_roots():
    return [r for r in g2_roots() if r.a >= 0 and r.b >= 0]


def mat_mul(m, n):
    size = len(m)
    return tuple(tuple(sum(m[i][k] * n[k][j] for k in range(size))
                       for j in range(size)) for i in range(size))


def mat_apply(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v)))
                 for i in range(len(m)))


def identity_matrix(size):
    return tuple(tuple(1 if i == j else 0 for j in range(size))
                 for i in range(size))


def transpose(m):
    return tuple(zip(*m))


def group_closure(generators):
    """Close a set of invertible integer matrices under multiplication."""
    size = len(generators[0])
    group = {identity_matrix(size)}
    frontier = [identity_matrix(size)]
    while frontier:
        g = frontier.pop()
        for s in generators:
            h = mat_mul(s, g)
            if h not in group:
                group.add(h)
                frontier.append(h)
    return sorted(group)


def _g2_reflection_matrix(root):
    cols = [g2_reflect(root, ALPHA), g2_reflect(root, BETA)]
    return ((cols[0].a, cols[1].a), (cols[0].b, cols[1].b))


def g2_weyl_group():
    """The Weyl group as 2x2 integer matrices on (alpha, beta) coordinates."""
    return group_closure([_g2_reflection_matrix(ALPHA),
                          _g2_reflection_matrix(BETA)])


# columns are e1, e2 in root coordinates, and its inverse
_E_BASIS = ((2, 1), (1, 1))
_E_BASIS_INV = ((1, -1), (-1, 2))


def g2_weyl_group_torus():
    """The Weyl group acting on torus characters in the (e1, e2) basis."""
    return [mat_mul(_E_BASIS_INV, mat_mul(m, _E_BASIS))
            for m in g2_weyl_group()]


def g2_simple_reflections_torus():
    return {name: mat_mul(_E_BASIS_INV,
                          mat_mul(_g2_reflection_matrix(root), _E_BASIS))
            for name, root in (("alpha", ALPHA), ("beta", BETA))}


def g2_weyl_order():
    return len(g2_weyl_group())


def g2_weight_pairings(root):
    """Return (<e1, root^vee>, <e2, root^vee>) as integers."""
    pairs = (g2_coroot_pairing(E1, root), g2_coroot_pairing(E2, root))
    return tuple(int(p) for p in pairs)


def all_long_root_triples():
    """Every unordered triple of long roots summing to zero, sorted."""
    longs = [r for r in g2_roots() if r.is_long]
    triples = set()
    for i, x in enumerate(longs):
        for j in range(i + 1, len(longs)):
            for k in range(j + 1, len(longs)):
                y, z = longs[j], longs[k]
                if x + y + z == RootVecG2(0, 0):
                    triples.add(tuple(sorted((x, y, z))))
    return sorted(triples)


def long_root_triple():
    """The lexicographically least zero-sum triple of long roots."""
    return all_long_root_triples()[0]


def long_root_triples_in_one_orbit():
    triples = all_long_root_triples()
    orbit = set()
    for m in g2_weyl_group():
        image = []
        for r in triples[0]:
            a, b = mat_apply(m, (r.a, r.b))
            image.append(RootVecG2(a, b))
        orbit.add(tuple(sorted(image)))
    return set(triples) <= orbit


def dominant_exponents(a1, a2):
    """True on the closed positive chamber a1 >= a2 >= 0."""
    return a1 >= a2 >= 0


# -- C3 ---------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class C3Vec:
    s1: Fraction
    s2: Fraction
    s3: Fraction

    def __post_init__(self):
        for name in ("s1", "s2", "s3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def of(cls, values):
        return cls(*values)

    def as_tuple(self):
        return (self.s1, self.s2, self.s3)

    def __add__(self, other):
        return C3Vec.of(x + y for x, y in zip(self.as_tuple(), other.as_tuple()))

    def __neg__(self):
        return C3Vec.of(-x for x in self.as_tuple())

    def dot(self, other):
        return sum(x * y for x, y in zip(self.as_tuple(), other.as_tuple()))

    def __str__(self):
        return "({})".format(",".join(str(x) for x in self.as_tuple()))


C3_REFLECTIONS = {
    1: ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
    2: ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
    3: ((1, 1, 1), (0, 0, -1), (0, -1, 0)),
}

# contragredient of an involution is its transpose
C3_COREFLECTIONS = {i: transpose(m) for i, m in C3_REFLECTIONS.items()}


def c3_simple_roots():
    """The simple roots in the dual coordinates, alpha3 long."""
    return (C3Vec(0, 1, -1), C3Vec(1, -1, 0), C3Vec(0, 2, 2))


def c3_character_simple_roots():
    """The same simple roots expressed in the character coordinates."""
    return (C3Vec(0, 1, -1), C3Vec(1, -1, 0), C3Vec(-1, 1, 1))


def _check_index(i):
    if i not in C3_REFLECTIONS:
        raise PreconditionError("reflection index must be 1, 2 or 3, got {!r}"
                                .format(i))


def c3_reflect(i, v):
    """Character action of the i-th generator."""
    _check_index(i)
    return C3Vec.of(mat_apply(C3_REFLECTIONS[i], v.as_tuple()))


def c3_coreflect(i, v):
    """Contragredient action of the i-th generator."""
    _check_index(i)
    return C3Vec.of(mat_apply(C3_COREFLECTIONS[i], v.as_tuple()))


Q_READINGS = ("corrected", "printed")


def c3_form_q(v, reading="corrected"):
    """q(s) = s1^2 + s2^2 + s3^2 - (s1 + s2 + s3)^2 / 4.

    The form lives on the dual coordinates: it is invariant under
    :func:`c3_coreflect` (the group :func:`c3_coweyl_group`), not under the
    character action :func:`c3_reflect`, whose invariant is
    :func:`c3_dual_form`. For instance q(0, 1, 0) = 3/4 while
    q(c3_reflect(3, (0, 1, 0))) = q(1, 0, -1) = 2.

    ``reading='printed'`` evaluates the cubic last term instead, which is not
    Weyl invariant and is kept for comparison only.
    """
    s1, s2, s3 = v.as_tuple()
    if reading == "corrected":
        last = s3 ** 2
    elif reading == "printed":
        last = s3 ** 3
    else:
        raise PreconditionError("unknown q reading {!r}".format(reading))
    return s1 ** 2 + s2 ** 2 + last - Fraction(1, 4) * (s1 + s2 + s3) ** 2


def c3_dual_form(v):
    """The form invariant under the character action."""
    s = v.as_tuple()
    return sum(x * x for x in s) + sum(s) ** 2


def c3_positive_chamber(v):
    return v.s1 > v.s2 > abs(v.s3)


def c3_weyl_group():
    return group_closure(list(C3_REFLECTIONS.values()))


def c3_coweyl_group():
    return group_closure(list(C3_COREFLECTIONS.values()))


def c3_weyl_order():
    return len(c3_weyl_group())


def c3_subgroup_order(indices):
    return len(group_closure([C3_REFLECTIONS[i] for i in indices]))


def c3_apply(m, v):
    return C3Vec.of(mat_apply(m, v.as_tuple()))


def _primitive(vec):
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    vec = tuple(x // g for x in vec)
    first = next(x for x in vec if x != 0)
    return vec if first > 0 else tuple(-x for x in vec)


def c3_reflection_hyperplanes():
    """Primitive normals of the fixed hyperplanes of all reflections.

    A hyperplane with normal ``n`` is ``{s : n . s = 0}`` in the character
    coordinates.
    """
    normals = set()
    ident = identity_matrix(3)
    for m in c3_weyl_group():
        if m == ident or mat_mul(m, m) != ident:
            continue
        diff = tuple(tuple(m[i][j] - ident[i][j] for j in range(3))
                     for i in range(3))
        rows = [r for r in diff if any(r)]
        # a reflection moves vectors along a single line
        if all(_primitive(r) == _primitive(rows[0]) for r in rows):
            normals.add(_primitive(_kernel_normal(diff)))
    return sorted(normals)


def _kernel_normal(diff):
    # ker(M - I) for a rank one M - I is orthogonal to its row space
    row = next(r for r in diff if any(r))
    return row


C3_PRINTED_HYPERPLANES = ((1, -1, 0), (1, 0, -1), (0, 1, -1),
                          (1, 1, 0), (1, 0, 1), (0, 1, 1))


def c3_is_regular(v):
    """True when no non-identity Weyl element fixes ``v``."""
    ident = identity_matrix(3)
    return all(c3_apply(m, v) != v for m in c3_weyl_group() if m != ident)


def c3_positive_roots():
    """Positive roots in the character coordinates with their coefficients."""
    simple = c3_character_simple_roots()
    roots = set()
    frontier = list(simple)
    roots.update(simple)
    while frontier:
        v = frontier.pop()
        for i in (1, 2, 3):
            w = c3_reflect(i, v)
            if w not in roots:
                roots.add(w)
                frontier.append(w)
    positive = []
    for r in roots:
        coeffs = _c3_coefficients(r)
        if all(c >= 0 for c in coeffs):
            positive.append((r, coeffs))
    return sorted(positive)


def _c3_coefficients(v):
    # v = x1*a1 + x2*a2 + x3*a3 with a1=(0,1,-1), a2=(1,-1,0), a3=(-1,1,1)
    s1, s2, s3 = v.as_tuple()
    x3 = s1 + s2 + s3
    x2 = s1 + x3
    x1 = x3 - s3
    return (x1, x2, x3)


C3_LEVI_SIMPLE = {
    "B": (),
    "P3": (1, 2),
    "P2": (1, 3),
    "P1": (2, 3),
    "P13": (2,),
}


def c3_nilradical(name):
    """Positive roots outside the Levi spanned by the given simple roots."""
    if name not in C3_LEVI_SIMPLE:
        raise NotFoundError("no PGSp6 parabolic named {!r}".format(name))
    levi = set(C3_LEVI_SIMPLE[name])
    out = []
    for root, coeffs in c3_positive_roots():
        if any(coeffs[i - 1] != 0 for i in (1, 2, 3) if i not in levi):
            out.append(root)
    return tuple(out)


def c3_modulus_vector(name):
    """Sum of the nilradical roots in the character coordinates."""
    total = C3Vec(0, 0, 0)
    for root in c3_nilradical(name):
        total = total + root
    return total


# -- parabolic tables ---------------------------------------------------------

@dataclass(frozen=True)
class ParabolicData:
    group: str
    name: str
    levi: str
    modulus: str
    modulus_exponent: Tuple[Fraction, ...]
    nilradical_roots: Tuple[object, ...] = ()
    grading: Tuple[Tuple[int, Tuple[object, ...], str], ...] = ()

    @property
    def nilradical_dimension(self):
        return len(self.nilradical_roots)


def _g2_parabolic(name, levi, modulus, exponent, key, layer_names):
    roots = tuple(r for r in g2_positive_roots() if key(r) > 0)
    layers = []
    for k in sorted({key(r) for r in roots}):
        members = tuple(r for r in roots if key(r) == k)
        layers.append((k, members, layer_names.get(k, "")))
    return ParabolicData("G2", name, levi, modulus,
                         tuple(Fraction(x) for x in exponent), roots,
                         tuple(layers))


def _c3_parabolic(name, levi, modulus, exponent):
    return ParabolicData("PGSp6", name, levi, modulus,
                         tuple(Fraction(x) for x in exponent),
                         c3_nilradical(name))


def _build_parabolic_table():
    table = {}
    table[("G2", "P")] = _g2_parabolic(
        "P", "GL2 (short simple root)", "|det|^3", (3,), lambda r: r.b,
        {1: "Sym^3(F^2) x det^-1", 2: "det"})
    table[("G2", "Q")] = _g2_parabolic(
        "Q", "GL2 (long simple root)", "|det|^5", (5,), lambda r: r.a,
        {1: "F^2", 2: "det", 3: "F^2 x det"})
    table[("G2", "B")] = _g2_parabolic(
        "B", "GL1 x GL1", "|e1|^4 |e2|^2", (4, 2), lambda r: r.a + r.b, {})
    table[("PGSp6", "B")] = _c3_parabolic(
        "B", "GL1^3", "2rho = (4,2,0)", (4, 2, 0))
    table[("PGSp6", "P3")] = _c3_parabolic(
        "P3", "GL3 x GL1 / GL1", "|det|^2", (2,))
    table[("PGSp6", "P2")] = _c3_parabolic(
        "P2", "GL2 x GL2 / GL1", "|det(alpha,beta)|^5", (5,))
    table[("PGSp6", "P1")] = _c3_parabolic(
        "P1", "GSp4", "|nu|^3", (3,))
    table[("PGSp6", "P13")] = _c3_parabolic(
        "P13", "GL2 x GL1 x GL1 / GL1", "|det g1|^3", (3, 3, 0))
    table[("GL2", "Bbar")] = ParabolicData(
        "GL2", "Bbar", "GL1 x GL1 (lower triangular)", "|a|^-1 |d|",
        (Fraction(-1), Fraction(1)))
    table[("GL3", "Q1")] = ParabolicData(
        "GL3", "Q1", "GL1 x GL2", "|g1|^-2 |det g2|",
        (Fraction(-2), Fraction(1)))
    table[("GL3", "Q2")] = ParabolicData(
        "GL3", "Q2", "GL2 x GL1", "|det g2|^-1 |g1|^2",
        (Fraction(2), Fraction(-1)))
    table[("GSp4", "Q1")] = ParabolicData(
        "GSp4", "Q1", "GL1 x GL2", "|g1|^-4 |det g2|^2",
        (Fraction(-4), Fraction(2)))
    table[("GSp4", "Q2")] = ParabolicData(
        "GSp4", "Q2", "GL2 x GL1", "|det g2|^-3 |g1|^3",
        (Fraction(3), Fraction(-3)))
    return table


_PARABOLICS = None


def parabolic_data(group, name):
    """Look up a parabolic by group and name.

    Raises:
        NotFoundError: if the pair is not tabulated.
    """
    global _PARABOLICS
    if _PARABOLICS is None:
        _PARABOLICS = _build_parabolic_table()
    try:
        return _PARABOLICS[(group, name)]
    except KeyError:
        raise NotFoundError("no parabolic {} of {}".format(name, group))


def parabolic_names(group=None):
    parabolic_data("G2", "P")
    return sorted(k for k in _PARABOLICS if group is None or k[0] == group)
