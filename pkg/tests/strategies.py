from fractions import Fraction

from hypothesis import strategies as st

from ratsign.algebra import GElement

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
bidegrees = st.tuples(st.integers(0, 3), st.integers(0, 3))


@st.composite
def gelements(draw, max_terms=4):
    f = draw(st.dictionaries(bidegrees, small_fractions, max_size=max_terms))
    g = draw(st.dictionaries(bidegrees, small_fractions, max_size=max_terms))
    return GElement(f, g)
