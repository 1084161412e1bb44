from itertools import combinations
from types import SimpleNamespace

import pytest

from coserial.arquiver import (
    ARNode,
    ar_sequence,
    brute_force_indecomposables,
    build_ar_quiver,
    classify_indecomposables,
    matches_truncation,
    realize,
    tau_orbit_report,
    verify_almost_split,
)
from coserial.comodule import direct_sum_data, is_indecomposable, is_isomorphic, simple
from coserial.errors import InjectiveNode, NotSerialInput
from coserial.fixtures import crown, line, vee, window_biinfinite, window_left, window_right
from coserial.linalg import GF2


@pytest.mark.parametrize("q, bound, count", [(line(3), 3, 6), (crown(2), 4, 8), (line(1), 3, 1), (crown(1), 3, 3)])
def test_indecomposable_counts(q, bound, count):
    found = classify_indecomposables(q, bound)
    assert len(found) == count
    for _, m in found:
        assert is_indecomposable(m)
    for (_, a), (_, b) in combinations(found, 2):
        assert not is_isomorphic(a, b)


def test_windows_have_unbounded_truncations():
    real = realize(window_biinfinite(2), 3)
    assert all(real.loewy[v] is None for v in real.window)
    assert real.window == ("-2", "-1", "0", "1", "2")
    right = realize(window_right(3), 3)
    assert right.loewy["0"] == 1 and right.loewy["3"] == 4


def test_sequence_at_a_simple():
    seq = ar_sequence(line(3), ARNode("3", 1))
    assert seq.middle_nodes == (ARNode("3", 2),)
    assert seq.right_node == ARNode("2", 1)
    assert seq.right.dim_vector == (0, 1, 0)
    assert verify_almost_split(line(3), seq)


def test_sequence_with_two_middle_terms():
    seq = ar_sequence(line(3), ARNode("3", 2))
    assert seq.middle_nodes == (ARNode("3", 3), ARNode("2", 1))
    assert [m.dim_vector for m in seq.summands] == [(1, 1, 1), (0, 1, 0)]
    assert seq.right.dim_vector == (1, 1, 0)
    assert verify_almost_split(line(3), seq)


@pytest.mark.parametrize("node", [ARNode("3", 3), ARNode("1", 1), ARNode("2", 2)])
def test_injective_nodes_have_no_sequence(node):
    with pytest.raises(InjectiveNode):
        ar_sequence(line(3), node)


def test_crown_sequences_verify():
    q = crown(2)
    for k in (1, 2, 3):
        for v in q.vertices:
            seq = ar_sequence(q, ARNode(v, k))
            assert verify_almost_split(q, seq, pool_dim_bound=4)


def test_split_sequence_is_rejected():
    q = line(2)
    L, N = simple(q, "1"), simple(q, "2")
    mid = direct_sum_data(L, N)
    fake = SimpleNamespace(f=mid.injections[0], g=mid.projections[1])
    v = verify_almost_split(q, fake, pool_dim_bound=2)
    assert not v
    assert "split" in [f["kind"] for f in v.extra["failures"]]


def test_corrupted_sequence_is_rejected():
    seq = ar_sequence(line(3), ARNode("3", 2))
    broken = SimpleNamespace(f=seq.f.scale(0), g=seq.g)
    v = verify_almost_split(line(3), broken)
    kinds = {f["kind"] for f in v.extra["failures"]}
    assert not v and "injective" in kinds


def test_middle_maps_compose_to_zero():
    seq = ar_sequence(crown(3), ARNode("1", 2))
    assert (seq.g @ seq.f).is_zero()


def test_build_line():
    arq = build_ar_quiver(line(3), 3)
    assert len(arq.nodes) == 6
    assert set(arq.injective) == {ARNode("1", 1), ARNode("2", 2), ARNode("3", 3)}
    assert arq.tau[ARNode("2", 1)] == ARNode("3", 1)
    assert len(arq.arrows) == 6
    assert arq.tube_rank is None


def test_build_crown_is_a_tube():
    arq = build_ar_quiver(crown(3), 3)
    assert arq.tube_rank == 3
    assert arq.injective == []
    node = ARNode("1", 2)
    assert arq.tau_power(node, 3) == node
    orbits = tau_orbit_report(arq)
    assert all(o.uniform_level for o in orbits)
    assert sorted(len(o.nodes) for o in orbits if o.cyclic and o.level < 3) == [3, 3]


def test_build_left_infinite_window():
    arq = build_ar_quiver(window_left(3), 3)
    assert arq.injective == []
    assert len(arq.nodes) == 12
    # level-k orbits are open chains inside the window
    for o in tau_orbit_report(arq):
        assert not o.cyclic and o.uniform_level


def test_build_refuses_non_serial():
    with pytest.raises(NotSerialInput) as err:
        build_ar_quiver(vee(), 2)
    assert err.value.witness.vertex == "3"


def test_dot_output():
    arq = build_ar_quiver(crown(2), 2)
    dot = arq.to_dot()
    assert dot.startswith("digraph AR {")
    assert dot.count("style=dashed") == len(arq.tau)
    assert dot.count("->") == len(arq.tau) + len(arq.arrows)


def test_brute_force_on_a_line():
    found = brute_force_indecomposables(line(2), 3)
    assert len(found) == 3
    assert all(matches_truncation(m, line(2), 3) is not None for m in found)


def test_brute_force_on_the_vee_finds_non_truncations():
    found = brute_force_indecomposables(vee(), 3)
    odd = sorted(m.dim_vector for m in found if matches_truncation(m, vee(), 3) is None)
    assert odd == [(0, 1, 1), (1, 0, 1)]


def test_brute_force_on_a_crown():
    found = brute_force_indecomposables(crown(2), 3, GF2)
    assert len(found) == 6
    assert all(matches_truncation(m, crown(2), 3) is not None for m in found)
