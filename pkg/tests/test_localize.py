import random

import pytest
from hypothesis import given, settings, strategies as st

from coserial.comodule import injective_truncation, is_uniserial, simple
from coserial.errors import EmptySubset, InfiniteLocalization, UnknownVertex
from coserial.fixtures import crown, line, random_acyclic_quiver, triangle, two_loop, vee, window_biinfinite
from coserial.localize import (
    VertexSubset,
    check_serial_local_global,
    localize_colocal,
    localize_quiver,
    restrict_comodule,
)
from coserial.quiver import ValuedQuiver


def test_triangle_collapses_to_a_doubled_arrow():
    res = localize_quiver(triangle(), ["1", "3"])
    assert res.is_finite
    assert res.quiver.arrow("1", "3").label == (2, 2)
    assert len(res.evidence[("1", "3")]) == 2


def test_labels_multiply_along_paths():
    q = ValuedQuiver.build(["1", "2", "3"], [("1", "2", 2, 1), ("2", "3", 3, 1)])
    assert localize_quiver(q, ["1", "3"]).label("1", "3") == (6, 1)


def test_keeping_everything_is_the_identity():
    for q in (line(4), crown(3), triangle(), two_loop(), window_biinfinite(2)):
        assert localize_quiver(q, q.vertices).quiver == q


def test_torsion_cycle_gives_an_infinite_label():
    q = ValuedQuiver.build(["x", "t", "z"], [("x", "t"), ("t", "t"), ("t", "z")])
    res = localize_quiver(q, ["x", "z"])
    assert not res.is_finite and res.infinite_label == [("x", "z")]
    assert res.to_json()["finite"] is False


def test_torsion_cycle_off_the_route_is_harmless():
    q = ValuedQuiver.build(["x", "t", "z", "c"], [("x", "t"), ("t", "z"), ("c", "c"), ("c", "t")])
    assert localize_quiver(q, ["x", "z"]).label("x", "z") == (1, 1)


@pytest.mark.parametrize(
    "q, x, loop",
    [(crown(3), "1", (1, 1)), (crown(1), "1", (1, 1)), (line(3), "2", None), (two_loop(), "a", (2, 2))],
)
def test_colocal_examples(q, x, loop):
    res = localize_colocal(q, x)
    a = res.quiver.arrow(x, x)
    assert (a.label if a else None) == loop


def test_subset_validation():
    with pytest.raises(EmptySubset):
        VertexSubset.of(line(2), [])
    with pytest.raises(UnknownVertex):
        localize_quiver(line(2), ["9"])


@given(st.integers(0, 10 ** 6), st.data())
@settings(max_examples=80, deadline=None)
def test_localizing_in_stages(seed, data):
    q = random_acyclic_quiver(random.Random(seed))
    w = data.draw(st.lists(st.sampled_from(q.vertices), min_size=1, unique=True))
    w2 = data.draw(st.lists(st.sampled_from(w), min_size=1, unique=True))
    staged = localize_quiver(localize_quiver(q, w).quiver, w2).quiver
    assert staged == localize_quiver(q, w2).quiver


def test_restrict_truncation_to_ends():
    m = injective_truncation(line(3), "3", 3)
    r = restrict_comodule(m, ["1", "3"])
    assert r.dim_vector == (1, 1)
    assert is_uniserial(r)


def test_restrict_everything_keeps_the_module():
    m = injective_truncation(line(3), "3", 3)
    assert restrict_comodule(m, m.quiver.vertices) == m


def test_restrict_simple_away_from_support():
    m = simple(line(3), "2")
    r = restrict_comodule(m, ["1", "3"])
    assert r.total_dim == 0


def test_restrict_each_multipath_is_an_arrow_copy():
    m = injective_truncation(triangle(), "3", 3)
    r = restrict_comodule(m, ["1", "3"])
    assert r.quiver.arrow("1", "3").label == (2, 2)
    assert len([k for k in r.maps if k.src == "1"]) == 2


def test_restrict_refuses_infinite_labels():
    q = ValuedQuiver.build(["x", "t", "z"], [("x", "t"), ("t", "t"), ("t", "z")])
    with pytest.raises(InfiniteLocalization):
        restrict_comodule(simple(q, "x"), ["x", "z"])


def test_local_global_agrees_on_examples():
    for q, expected in ((line(4), True), (crown(3), True), (vee(), False), (triangle(), False)):
        rep = check_serial_local_global(q)
        assert rep.global_right_serial is expected
        assert rep.matches_global


def test_vee_fools_pairs_but_not_triples():
    rep = check_serial_local_global(vee())
    assert rep.small_false_positive
    assert rep.failures == [("1", "2", "3")]
    assert check_serial_local_global(vee(), max_size=2).matches_global is False
