import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from coserial.comodule import (
    Morphism,
    Representation,
    Subrep,
    direct_sum,
    enumerate_subcomodules,
    ext1_dim,
    gabriel_quiver,
    hom_space,
    injective_truncation,
    is_indecomposable,
    is_isomorphic,
    is_right_serial_comodule_level,
    is_uniserial,
    loewy_series,
    quotient,
    rep_from_json,
    rep_to_json,
    simple,
    socle,
    socle_series,
    sub_from_vectors,
    zero_representation,
)
from coserial.errors import NotInvariant, NotNilpotent
from coserial.fixtures import crown, line, random_nilpotent_rep, random_pointed_quiver, triangle, two_loop, vee
from coserial.linalg import GF2, QQ, PrimeField, Subspace
from coserial.quiver import ArrowKey, ValuedQuiver


def test_truncation_dimensions():
    assert injective_truncation(line(3), "3", 2).dim_vector == (0, 1, 1)
    assert injective_truncation(line(3), "3", 5).dim_vector == (1, 1, 1)
    assert injective_truncation(crown(2), "1", 5).dim_vector == (3, 2)
    assert injective_truncation(two_loop(), "a", 3).total_dim == 1 + 2 + 4


def test_truncation_labels():
    m = injective_truncation(line(3), "3", 3)
    assert m.labels["3"] == ["e_3"]
    assert m.labels["1"] == ["1->2->3"]


def test_socle_is_the_simple_at_the_end():
    m = injective_truncation(crown(3), "2", 4)
    assert socle(m).dims == {"1": 0, "2": 1, "3": 0}


def test_loewy_series_of_a_truncation():
    data = loewy_series(injective_truncation(line(4), "4", 4))
    assert data.length == 4
    assert data.factors() == ["4", "3", "2", "1"]
    assert data.dimensions() == [1, 2, 3, 4]


def test_uniserial_examples():
    assert is_uniserial(injective_truncation(crown(2), "1", 5))
    assert not is_uniserial(injective_truncation(vee(), "3", 2))
    assert not is_uniserial(direct_sum(simple(line(2), "1"), simple(line(2), "2")))


def test_comodule_level_seriality():
    assert is_right_serial_comodule_level(line(3))
    assert is_right_serial_comodule_level(crown(2))
    v = is_right_serial_comodule_level(vee())
    assert not v and v.witness.kind == "second_layer" and v.witness.vertex == "3"


def test_hom_space_small():
    q = line(3)
    assert len(hom_space(simple(q, "3"), injective_truncation(q, "3", 3))) == 1
    assert len(hom_space(simple(q, "1"), injective_truncation(q, "3", 3))) == 0
    assert len(hom_space(injective_truncation(q, "3", 3), injective_truncation(q, "3", 3))) == 1


def test_morphisms_must_commute():
    q = line(2)
    top = injective_truncation(q, "2", 2)
    with pytest.raises(ValueError):
        Morphism(top, top, {"1": [[1]], "2": [[0]]})


def test_ext1():
    assert ext1_dim(two_loop(), "a", "a") == 2
    assert ext1_dim(line(2), "2", "1") == 1
    assert ext1_dim(line(2), "1", "2") == 0


def test_gabriel_quiver_examples():
    assert gabriel_quiver(line(3)) == line(3)
    assert gabriel_quiver(crown(3)) == crown(3)
    doubled = gabriel_quiver((["1", "2"], [("1", "2"), ("1", "2")]))
    assert doubled.arrow("1", "2").label == (2, 2)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_gabriel_quiver_recovers_pointed_quivers(seed):
    q = random_pointed_quiver(random.Random(seed))
    assert gabriel_quiver(q) == q


def test_quotient_by_socle_is_the_predecessor_truncation():
    m = injective_truncation(line(3), "3", 3)
    assert is_isomorphic(quotient(m, socle(m)), injective_truncation(line(3), "2", 2))
    c = injective_truncation(crown(3), "1", 4)
    # in the crown fixture the predecessor of 1 is 2
    assert is_isomorphic(quotient(c, socle(c)), injective_truncation(crown(3), "2", 3))


def test_sub_from_vectors_closes_up():
    m = injective_truncation(line(3), "3", 3)
    sub = sub_from_vectors(m, [{"1": (1,)}])
    assert sub.dims == {"1": 1, "2": 1, "3": 1}
    with pytest.raises(NotInvariant):
        Subrep(m, {"1": Subspace.full(QQ, 1)})


def test_indecomposable_examples():
    q = line(2)
    assert is_indecomposable(injective_truncation(q, "2", 2))
    assert is_indecomposable(simple(q, "1"))
    s = simple(q, "1")
    assert not is_indecomposable(direct_sum(s, s))
    assert not is_indecomposable(direct_sum(s, s).convert(GF2))
    assert is_indecomposable(injective_truncation(two_loop(), "a", 2))
    with pytest.raises(ValueError):
        is_indecomposable(zero_representation(q))


def test_isomorphism_examples():
    q = line(2)
    assert is_isomorphic(direct_sum(simple(q, "1"), simple(q, "2")), direct_sum(simple(q, "2"), simple(q, "1")))
    assert not is_isomorphic(direct_sum(simple(q, "1"), simple(q, "2")), injective_truncation(q, "2", 2))


def test_lattice_examples():
    lat = enumerate_subcomodules(injective_truncation(line(3), "3", 3))
    assert len(lat) == 4 and lat.is_chain()
    s = simple(line(1), "1")
    lat2 = enumerate_subcomodules(direct_sum(s, s))
    assert len(lat2) == 5 and not lat2.is_chain()
    assert len(enumerate_subcomodules(zero_representation(line(2)))) == 1
    assert len(enumerate_subcomodules(direct_sum(s, s), field=PrimeField(3))) == 6


@pytest.mark.parametrize("q, i, k", [(line(4), "4", 4), (crown(2), "1", 5), (crown(3), "3", 4), (two_loop(), "a", 3), (triangle(), "3", 3)])
def test_socle_series_of_truncations(q, i, k):
    chain = socle_series(injective_truncation(q, i, k))
    for t, s in enumerate(chain, start=1):
        assert s.dims == injective_truncation(q, i, t).dims


@given(st.integers(0, 10 ** 6))
@settings(max_examples=60, deadline=None)
def test_loewy_layers_are_semisimple(seed):
    rng = random.Random(seed)
    q = random_pointed_quiver(rng)
    m = random_nilpotent_rep(rng, q, max_total=5, field=GF2)
    chain = socle_series(m)
    prev = Subrep.zero(m)
    for s in chain:
        for key in m.keys:
            assert s.spaces[key.src].image(m.maps[key]) <= prev.spaces[key.dst]
        prev = s
    assert chain == [] or chain[-1].total_dim == m.total_dim


@given(st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_uniseriality_agrees_with_the_lattice(seed):
    rng = random.Random(seed)
    q = random_pointed_quiver(rng)
    m = random_nilpotent_rep(rng, q, max_total=4, field=GF2)
    if m.total_dim == 0:
        return
    assert is_uniserial(m) == enumerate_subcomodules(m).is_chain()


@pytest.mark.parametrize("q", [line(3), crown(2), triangle(), two_loop()])
def test_uniseriality_same_over_qq_and_gf2(q):
    for i in q.vertices:
        m = injective_truncation(q, i, 3)
        assert is_uniserial(m) == is_uniserial(m.convert(GF2))


def test_json_round_trip():
    m = injective_truncation(crown(2), "1", 4)
    data = json.loads(json.dumps(rep_to_json(m)))
    assert rep_from_json(data) == m
    g = m.convert(GF2)
    assert rep_from_json(rep_to_json(g)) == g


def test_non_nilpotent_rejected():
    with pytest.raises(NotNilpotent):
        Representation(crown(1), {"1": 1}, {ArrowKey("1", "1", 0): [[1]]})
    q = ValuedQuiver.build(["1", "2"], [("1", "2"), ("2", "1")])
    with pytest.raises(NotNilpotent):
        Representation(q, {"1": 1, "2": 1}, {ArrowKey("1", "2", 0): [[1]], ArrowKey("2", "1", 0): [[1]]})
