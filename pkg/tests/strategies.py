"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from quadcodes.deck import CardSequence


@st.composite
def card_sequences(draw, max_n=8, max_len=12, min_len=1):
    n = draw(st.integers(1, max_n))
    size = min(max_len, 1 << n)
    length = draw(st.integers(min(min_len, size), size))
    cards = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=length, max_size=length, unique=True))
    return CardSequence(n, tuple(cards))


@st.composite
def generator_sets(draw, max_len=12, max_rows=8):
    length = draw(st.integers(1, max_len))
    rows = draw(st.lists(st.integers(0, (1 << length) - 1), max_size=max_rows))
    return rows, length
