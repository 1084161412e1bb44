"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from coserial.quiver import ValuedQuiver

NAMES = ["1", "2", "3", "4", "5", "6", "a", "b", "x_1", "-1"]


@st.composite
def quivers(draw, max_vertices=6, max_label=3, pointed=False, loops=True):
    n = draw(st.integers(1, max_vertices))
    names = draw(st.lists(st.sampled_from(NAMES), min_size=n, max_size=n, unique=True))
    pairs = [(a, b) for a in names for b in names if loops or a != b]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(len(pairs), 10))) if pairs else []
    arrows = []
    for a, b in chosen:
        d1 = draw(st.integers(1, max_label))
        d2 = d1 if pointed else draw(st.integers(1, max_label))
        arrows.append((a, b, d1, d2))
    return ValuedQuiver.build(names, arrows)
