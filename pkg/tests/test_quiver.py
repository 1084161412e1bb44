from collections import Counter

import pytest
from hypothesis import given, settings

from coserial.errors import BadLabel, DuplicateArrow, QuiverSyntaxError, UnknownVertex
from coserial.fixtures import crown, line, window_biinfinite, window_left
from coserial.quiver import (
    ValuedQuiver,
    connected_components,
    cycle_census,
    emit_dot,
    emit_dsl,
    opposite,
    parse_quiver,
    reachability,
)

from strategies import quivers


def test_parse_basic_labels():
    q = parse_quiver("vertex a\nvertex b\narrow a b 1 2")
    assert q.vertices == ("a", "b")
    a = q.arrow("a", "b")
    assert a.label == (1, 2)


def test_parse_default_loop_label():
    q = parse_quiver("vertex a\narrow a a")
    assert q.arrow("a", "a").label == (1, 1)


def test_parse_unknown_vertex_reports_line():
    with pytest.raises(UnknownVertex) as err:
        parse_quiver("vertex a\narrow a b 1 1")
    assert err.value.name == "b" and err.value.line == 2


def test_parse_duplicate_arrow():
    with pytest.raises(DuplicateArrow) as err:
        parse_quiver("vertex a\nvertex b\narrow a b\narrow a b 2 2\n")
    assert err.value.line == 4


@pytest.mark.parametrize("text", ["vertex a\narrow a a 0 1", "vertex a\narrow a a 1 -2"])
def test_parse_bad_label(text):
    with pytest.raises(BadLabel):
        parse_quiver(text)


@pytest.mark.parametrize(
    "text, line",
    [("vertex a\nedge a a", 2), ("vertex\n", 1), ("vertex a\narrow a a x 1", 2), ("family Circle", 1)],
)
def test_parse_syntax_errors_carry_lines(text, line):
    with pytest.raises(QuiverSyntaxError) as err:
        parse_quiver(text)
    assert err.value.line == line
    assert str(err.value).startswith(f"line {line}:")


def test_comments_and_blank_lines():
    q = parse_quiver("# a comment\n\nvertex a   # trailing\nvertex b\narrow a b # default label\n")
    assert q.vertices == ("a", "b") and q.arrow("a", "b").label == (1, 1)


def test_family_window_follows_the_path():
    q = parse_quiver("family LineBiInfinite\nvertex 0\nvertex -1\nvertex 1\narrow -1 0\narrow 0 1\n")
    assert q.family.kind == "LineBiInfinite"
    assert q.family.window == ("-1", "0", "1")


def test_opposite_examples():
    q = ValuedQuiver.build(["a", "b"], [("a", "b", 1, 2)])
    op = opposite(q)
    assert op.arrow("b", "a").label == (2, 1)
    loop = ValuedQuiver.build(["a"], [("a", "a")])
    assert opposite(loop) == loop


def test_opposite_flips_one_sided_families():
    q = window_left(3)
    op = opposite(q)
    assert op.family.kind == "LineRightInfinite"
    assert op.family.window == tuple(reversed(q.family.window))


@given(quivers())
@settings(max_examples=80, deadline=None)
def test_opposite_is_an_involution(q):
    assert opposite(opposite(q)) == q


@given(quivers())
@settings(max_examples=80, deadline=None)
def test_opposite_preserves_cycle_lengths(q):
    before = Counter(len(c) for c in cycle_census(q))
    after = Counter(len(c) for c in cycle_census(opposite(q)))
    assert before == after


@given(quivers())
@settings(max_examples=80, deadline=None)
def test_dsl_round_trip(q):
    text = emit_dsl(q)
    again = parse_quiver(text)
    assert again == q
    assert emit_dsl(again) == text


@pytest.mark.parametrize("q", [window_biinfinite(2), window_left(2)])
def test_dsl_round_trip_keeps_families(q):
    assert parse_quiver(emit_dsl(q)) == q


def test_components():
    q = ValuedQuiver.build(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    assert connected_components(q) == [("a", "b"), ("c", "d")]
    assert connected_components(crown(3)) == [("1", "2", "3")]
    assert connected_components(ValuedQuiver(())) == []


def test_reachability():
    q = line(3)
    assert reachability(q, "1", "3")
    assert not reachability(q, "3", "1")
    assert not reachability(q, "1", "1")
    assert all(reachability(crown(3), v, v) for v in "123")
    with pytest.raises(UnknownVertex):
        reachability(q, "1", "9")


def test_cycle_census():
    assert cycle_census(line(3)) == []
    cycles = cycle_census(crown(4))
    assert len(cycles) == 1 and len(cycles[0]) == 4
    assert cycle_census(crown(1)) == [("1",)]


def test_cycle_census_counts_each_cycle_once():
    # complete digraph on 3 vertices without loops: three 2-cycles and two 3-cycles
    names = ["1", "2", "3"]
    q = ValuedQuiver.build(names, [(a, b) for a in names for b in names if a != b])
    lengths = Counter(len(c) for c in cycle_census(q))
    assert lengths == Counter({2: 3, 3: 2})


def test_emit_dot():
    q = ValuedQuiver.build(["a", "b"], [("a", "b", 1, 2)])
    dot = emit_dot(q)
    assert 'a -> b [label="(1,2)"]' in dot
    assert emit_dot(q) == dot
    assert emit_dot(ValuedQuiver(())) == "digraph Q {\n}\n"
    assert emit_dot(crown(3)).count("->") == 3


def test_dot_quotes_awkward_names():
    q = ValuedQuiver.build(["x y", "-1"], [("x y", "-1")])
    assert '"x y" -> -1' in emit_dot(q)
