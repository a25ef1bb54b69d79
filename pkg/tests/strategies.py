"""Hypothesis strategies over the packaged registry."""
from fractions import Fraction

from hypothesis import strategies as st

from g2theta.chars import Registry, TorusCharG2
from g2theta.rootsys import C3Vec

REGISTRY = Registry.default()

UNITARY = list(REGISTRY.torsion_characters())

fractions = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 4))
unitary_chars = st.sampled_from(UNITARY)
chars = st.builds(lambda c, s: c.twist(s), unitary_chars, fractions)
tori = st.builds(TorusCharG2, chars, chars)
unitary_tori = st.builds(TorusCharG2, unitary_chars, unitary_chars)
c3_vectors = st.builds(C3Vec, fractions, fractions, fractions)
seeds = st.integers(0, 2 ** 16)
