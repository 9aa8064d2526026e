from __future__ import annotations

import itertools

import numpy as np
import pytest

from zzlab.basilica import (
    Generator,
    ab_inverse_order,
    act,
    alternating_orbit,
    basilica_spectrum_check,
    basilica_zigzag_check,
    predicted_spectrum,
    schreier_graph,
    spectral_order,
)
from zzlab.core import adjacency_matrix, connected_components
from zzlab.generators import cycle_graph, load_fixture
from zzlab.products import zigzag_product


def _all_words(max_len: int):
    for n in range(max_len + 1):
        for bits in itertools.product("01", repeat=n):
            yield "".join(bits)


def test_b_of_000():
    assert act(Generator.B, "000") == "101"


def test_a_fixes_words_starting_with_one():
    for w in _all_words(6):
        if w.startswith("1"):
            assert act(Generator.A, w) == w


def test_recursive_rules():
    for w in _all_words(6):
        assert act(Generator.A, "0" + w) == "0" + act(Generator.B, w)
        assert act(Generator.B, "0" + w) == "1" + act(Generator.A, w)
        assert act(Generator.B, "1" + w) == "0" + w
    assert act(Generator.A, "") == ""


def test_inverses_up_to_length_ten():
    for w in _all_words(10):
        for s in Generator:
            assert act(s.inverse, act(s, w)) == w


def test_generator_ports():
    assert [int(s) for s in Generator] == [1, 2, 3, 4]
    assert Generator.A.inverse is Generator.A_INV and Generator.B_INV.inverse is Generator.B


def test_level_one_graph():
    g = schreier_graph(1)
    assert g.rot(0, 1) == (0, 2) and g.rot(1, 1) == (1, 2)
    assert adjacency_matrix(g).tolist() == [[2, 2], [2, 2]]


def test_level_three_edge():
    g = schreier_graph(3)
    assert g.rot(g.index("000"), 3) == (g.index("101"), 4)


@pytest.mark.parametrize("n", range(1, 11))
def test_graphs_are_connected(n):
    g = schreier_graph(n)
    assert g.n == 2 ** n and g.degree == 4
    assert len(connected_components(g)) == 1


@pytest.mark.parametrize("n", range(1, 11))
def test_ab_inverse_order(n):
    assert ab_inverse_order(n) == 2 ** n


def test_order_of_identity_composition():
    perm = {w: act(Generator.B, act(Generator.A_INV, act(Generator.A, act(Generator.B_INV, w))))
            for w in _all_words(5) if len(w) == 5}
    assert all(k == v for k, v in perm.items())


@pytest.mark.parametrize("n", range(1, 6))
def test_zigzag_is_double_cycle(n):
    rep = basilica_zigzag_check(n)
    assert rep.ok and rep.double_cycle == 2 ** (n + 1)


def test_alternate_c4_gives_same_unlabelled_product():
    alt = load_fixture("c4_basilica.json")
    for n in (1, 2, 3):
        g = schreier_graph(n)
        a = adjacency_matrix(zigzag_product(g, cycle_graph(4)))
        b = adjacency_matrix(zigzag_product(g, alt))
        assert (a == b).all()
    assert basilica_zigzag_check(2, alt).ok


def test_orbit_and_order():
    orbit = alternating_orbit(2)
    assert orbit[:3] == ["00", act(Generator.B_INV, "00"), act(Generator.A, act(Generator.B_INV, "00"))]
    order = spectral_order(2)
    assert sorted(order) == list(range(16))


@pytest.mark.parametrize("n", range(1, 5))
def test_spectrum(n):
    rep = basilica_spectrum_check(n)
    assert rep.ok and rep.tensor_form


def test_level_one_and_two_spectra():
    assert predicted_spectrum(1) == pytest.approx([4, 0, 0, 0, 0, 0, 0, -4], abs=1e-12)
    rep = basilica_spectrum_check(2)
    expected = sorted([0.0] * 8 + [4 * np.cos(np.pi * j / 4) for j in range(8)], reverse=True)
    assert rep.eigenvalues == pytest.approx(expected, abs=1e-9)
