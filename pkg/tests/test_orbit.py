import random

import pytest

from origami_lab.orbit import (
    Sl2zWord,
    apply_letter_raw,
    mat2_mul,
    sl2z_orbit,
    sl2z_word,
    veech_generators,
    veech_index,
)
from origami_lab.origami import canonical_form

from conftest import fixture_origami

T_MAT = ((1, 1), (0, 1))
S_MAT = ((1, 0), (1, 1))
ID = ((1, 0), (0, 1))


def test_word_parse_and_str():
    w = Sl2zWord.parse("T8SSTTSS")
    assert str(w) == "TTTTTTTTSSTTSS"
    assert len(w) == 14
    assert Sl2zWord.parse(str(w)) == w


def test_word_matrix_and_inverse():
    w = Sl2zWord.parse("TS")
    assert mat2_mul(w.matrix, w.inverse().matrix) == ID
    assert Sl2zWord.parse("T").matrix == T_MAT
    assert Sl2zWord.parse("S").matrix == S_MAT


def test_word_rejects_garbage():
    with pytest.raises(ValueError):
        Sl2zWord.parse("TX")


def test_generator_actions_preserve_degree():
    o = fixture_origami("l3")
    for letter in "TSts":
        assert apply_letter_raw(o, letter).degree == o.degree


def test_orbit_sizes():
    assert len(sl2z_orbit(fixture_origami("dema")).nodes) == 3
    assert len(sl2z_orbit(fixture_origami("l3")).nodes) == 3
    assert len(sl2z_orbit(fixture_origami("ew")).nodes) == 1
    assert len(sl2z_orbit(fixture_origami("ltilde")).nodes) == 12


def test_orbit_contains_one_cylinder_representative():
    graph = sl2z_orbit(fixture_origami("mstar"))
    assert len(graph.nodes) == 120
    assert graph.index_of(fixture_origami("mbar_star")) is not None


def test_orbit_edges_consistent():
    graph = sl2z_orbit(fixture_origami("dema"))
    for i, node in enumerate(graph.nodes):
        for letter in "TSts":
            target, relabel = graph.step(i, letter)
            raw = apply_letter_raw(node, letter)
            assert raw.relabel(relabel) == graph.nodes[target]
        # t then T is a round trip
        mid, _ = graph.step(i, "t")
        back, _ = graph.step(mid, "T")
        assert back == i


def test_veech_index_and_generators(dema):
    assert veech_index(dema) == 3
    graph = sl2z_orbit(dema)
    for w in veech_generators(dema):
        assert graph.trace(graph.basepoint, w) == graph.basepoint
        # generators are nontrivial in SL(2,Z)
        assert len(w) > 0


def test_sl2z_word_round_trip():
    rng = random.Random(99)
    for _ in range(100):
        m = ID
        for _ in range(rng.randint(0, 12)):
            m = mat2_mul(m, rng.choice([T_MAT, S_MAT, ((1, -1), (0, 1)), ((1, 0), (-1, 1))]))
        w = sl2z_word(m)
        assert w.matrix == m


def test_sl2z_word_rejects_non_unimodular():
    with pytest.raises(ValueError):
        sl2z_word(((2, 0), (0, 1)))
