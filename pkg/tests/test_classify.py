import pytest
from hypothesis import given, settings

from coserial.classify import (
    classify,
    eg_classify,
    is_hom_computable_serial,
    is_left_serial,
    is_representation_directed_serial,
    is_right_serial,
    is_serial,
    right_serial_shape_report,
    serial_shape,
)
from coserial.errors import DisconnectedInput, FamilyWindowMismatch, NotRightSerialInput, NotSerialInput
from coserial.fixtures import crown, line, triangle, two_loop, vee, window_biinfinite, window_left, window_right
from coserial.quiver import FamilyDecl, ValuedQuiver, connected_components, opposite

from strategies import quivers


def shapes(q):
    return [cs.shape.name for cs in serial_shape(q)]


@pytest.mark.parametrize(
    "q, expected",
    [
        (line(1), ["A_1"]),
        (line(4), ["A_4"]),
        (crown(1), ["ATilde_1"]),
        (crown(3), ["ATilde_3"]),
        (vee(), ["NotSerial"]),
        (triangle(), ["NotSerial"]),
        (two_loop(), ["NotSerial"]),
        (window_biinfinite(2), ["AInfinityBi"]),
        (window_right(3), ["AInfinityRight"]),
        (window_left(3), ["AInfinityLeft"]),
    ],
)
def test_shape_examples(q, expected):
    assert shapes(q) == expected


def test_shapes_per_component():
    q = ValuedQuiver.build(["1", "2", "a"], [("1", "2"), ("a", "a")])
    assert shapes(q) == ["A_2", "ATilde_1"]


def test_witnesses_name_the_offending_data():
    v = is_right_serial(vee())
    assert not v and v.witness.kind == "in_degree" and v.witness.vertex == "3"
    assert is_left_serial(vee())
    w = is_left_serial(ValuedQuiver.build(["1", "2", "3"], [("1", "2"), ("1", "3")]))
    assert w.witness.kind == "out_degree" and w.witness.vertex == "1"
    lab = is_right_serial(two_loop())
    assert lab.witness.kind == "label" and lab.witness.arrow == ("a", "a", 2, 2)


def test_label_sides():
    q = ValuedQuiver.build(["1", "2"], [("1", "2", 1, 2)])
    assert is_right_serial(q)
    assert not is_left_serial(q)
    assert not is_serial(q)


@given(quivers())
@settings(max_examples=150, deadline=None)
def test_right_and_left_are_dual(q):
    assert is_right_serial(q).value == is_left_serial(opposite(q)).value
    assert is_left_serial(q).value == is_right_serial(opposite(q)).value


@given(quivers(pointed=True, max_label=1))
@settings(max_examples=150, deadline=None)
def test_shape_names_a_path_or_cycle(q):
    for cs in serial_shape(q):
        sub = q.subquiver(cs.vertices)
        n, m = len(sub.vertices), len(sub.arrows)
        if cs.shape.kind == "A":
            assert m == n - 1 and cs.shape.n == n
        elif cs.shape.kind == "ATilde":
            assert m == n and cs.shape.n == n
        else:
            assert any(len(sub.in_arrows(v)) > 1 or len(sub.out_arrows(v)) > 1 for v in sub.vertices) or m > n


def test_family_window_mismatch():
    bad = ValuedQuiver.build(["0", "1", "2"], [("0", "1"), ("1", "2", 2, 1)], family=FamilyDecl("LineRightInfinite", ("0", "1", "2")))
    with pytest.raises(FamilyWindowMismatch):
        serial_shape(bad)
    branched = ValuedQuiver.build(["0", "1", "2"], [("0", "1"), ("0", "2")], family=FamilyDecl("LineBiInfinite", ("0", "1", "2")))
    with pytest.raises(FamilyWindowMismatch):
        serial_shape(branched)


def test_hom_computable_and_directed():
    assert is_hom_computable_serial(line(3))
    assert not is_hom_computable_serial(crown(2))
    assert is_hom_computable_serial(crown(2), coalgebra_finite_dimensional=True)
    assert is_hom_computable_serial(window_biinfinite(2))
    assert is_representation_directed_serial(line(3))
    assert not is_representation_directed_serial(crown(3))
    with pytest.raises(NotSerialInput):
        is_hom_computable_serial(vee())
    with pytest.raises(NotSerialInput):
        is_representation_directed_serial(triangle())


def test_right_serial_shape_report():
    tree = ValuedQuiver.build(["r", "a", "b", "c"], [("r", "a"), ("r", "b"), ("a", "c")])
    assert [f.form for f in right_serial_shape_report(tree)] == ["acyclic"]
    # a cycle with a tail hanging off it
    tail = ValuedQuiver.build(["1", "2", "3"], [("1", "2"), ("2", "1"), ("2", "3")])
    (form,) = right_serial_shape_report(tail)
    assert form.form == "unique_cycle" and len(form.cycles) == 1
    assert right_serial_shape_report(crown(3))[0].form == "unique_cycle"
    with pytest.raises(NotRightSerialInput):
        right_serial_shape_report(vee())


@given(quivers(pointed=True, max_label=1))
@settings(max_examples=150, deadline=None)
def test_right_serial_components_have_at_most_one_cycle(q):
    if is_right_serial(q):
        assert not any(f.alarm for f in right_serial_shape_report(q))


@pytest.mark.parametrize(
    "q, kind",
    [
        (crown(1), "SerialCrown"),
        (crown(4), "SerialCrown"),
        (line(1), "SerialPoint"),
        (line(3), "PrimeObstruction"),
        (vee(), "PrimeObstruction"),
        (two_loop(), "CoNoetherianObstruction"),
    ],
)
def test_eg_examples(q, kind):
    assert eg_classify(q).kind == kind


def test_eg_details():
    assert eg_classify(crown(4)).n == 4
    ob = eg_classify(line(2))
    assert ob.pair == ("1", "2") and ob.evidence == {"x_to_y": True, "y_to_x": False}
    assert eg_classify(two_loop()).label == (2, 2)
    # strongly connected but with two cycles through 1: the colocalization at 1 is infinite
    fig8 = ValuedQuiver.build(["1", "2", "3"], [("1", "2"), ("2", "1"), ("1", "3"), ("3", "1")])
    v = eg_classify(fig8)
    assert v.kind == "CoNoetherianObstruction"
    with pytest.raises(DisconnectedInput):
        eg_classify(ValuedQuiver.build(["1", "2"], []))


def test_report_json_key_order():
    data = classify(crown(2)).to_json()
    assert list(data) == ["components", "right_serial", "left_serial", "hom_computable", "representation_directed", "eg"]
    assert data["eg"] == {"kind": "SerialCrown", "n": 2}
    assert data["right_serial"]["value"] is True


def test_report_on_disconnected_quiver():
    q = ValuedQuiver.build(["1", "2"], [])
    data = classify(q).to_json()
    assert data["eg"]["kind"] == "NotApplicable"
    assert [c["shape"] for c in data["components"]] == ["A_1", "A_1"]


@given(quivers())
@settings(max_examples=60, deadline=None)
def test_components_partition_vertices(q):
    flat = [v for c in connected_components(q) for v in c]
    assert sorted(flat) == sorted(q.vertices)
