from __future__ import annotations

import numpy as np
import pytest

from zzlab.core import adjacency_matrix, is_connected, relabel_ports
from zzlab.errors import SizeTooSmall, UnknownVariant
from zzlab.generators import (
    LABELLING_SCHEMES,
    complete_cyclic,
    complete_good,
    complete_graph,
    cycle_graph,
    double_cycle,
    hamming_cube,
    random_regular,
)
from zzlab.products import replacement_product


def test_cycle_graph_rotation():
    c = cycle_graph(3)
    assert c.names == ("1", "2", "3")
    assert c.rot(0, 1) == (1, 2)
    assert c.rot(0, 2) == (2, 1)


def test_two_cycle_is_double_edge():
    assert adjacency_matrix(cycle_graph(2)).tolist() == [[0, 2], [2, 0]]


def test_cycle_too_small():
    with pytest.raises(SizeTooSmall):
        cycle_graph(1)


@pytest.mark.parametrize("d", range(1, 7))
def test_complete_good_involution(d):
    g = complete_good(d)
    m = 2 * d + 1
    for i in range(m):
        for j in range(1, 2 * d + 1):
            assert g.rot(i, j) == ((i + j) % m, 2 * d - j + 1)
            assert g.rot((i + j) % m, 2 * d - j + 1) == (i, j)


def test_complete_good_labels_increase_around_each_vertex():
    g = complete_good(2)
    # ports 1..4 at vertex i reach i+1..i+4 in cyclic order
    for i in range(5):
        assert [g.rot(i, j)[0] for j in range(1, 5)] == [(i + j) % 5 for j in range(1, 5)]


@pytest.mark.parametrize("variant", ["complete-example42", "complete-example53",
                                     "complete-example56", "complete-example57"])
def test_complete_fixtures_are_k5(variant):
    a = adjacency_matrix(complete_graph(variant))
    assert (a == np.ones((5, 5), dtype=int) - np.eye(5, dtype=int)).all()


def test_fixture_transcriptions_agree():
    assert complete_graph("complete-example57") == complete_good(2)
    assert complete_graph("complete-example56") == complete_graph("complete-example42")


def test_unknown_variant():
    with pytest.raises(UnknownVariant):
        complete_graph("complete-example99")
    assert "complete-good" in LABELLING_SCHEMES


@pytest.mark.parametrize("m", range(2, 9))
def test_complete_cyclic(m):
    a = adjacency_matrix(complete_cyclic(m))
    assert (a == np.ones((m, m), dtype=int) - np.eye(m, dtype=int)).all()


def test_hamming_cube():
    cube = hamming_cube(3)
    assert cube.n == 8 and cube.degree == 3 and is_connected(cube)
    assert cube.rot(cube.index("000"), 1) == (cube.index("100"), 1)
    one = hamming_cube(1)
    assert one.rot(0, 1) == (1, 1)


def test_cube_replacement_matches_figure_size():
    r = replacement_product(hamming_cube(3), cycle_graph(3, start=0))
    assert r.n == 24 and r.degree == 3 and is_connected(r)


@pytest.mark.parametrize("n", [2, 4, 16])
def test_double_cycle_shape(n):
    g = double_cycle(n)
    a = adjacency_matrix(g)
    assert g.n == 2 * n and (a.sum(axis=1) == 4).all() and is_connected(g)


def test_double_cycle_papillons():
    n = 6
    a = adjacency_matrix(double_cycle(n))
    for i in range(n):
        pair, nxt = [i, n + i], [(i + 1) % n, n + (i + 1) % n]
        assert (a[np.ix_(pair, nxt)] == 1).all()


def test_double_cycle_rotation_symmetry():
    n = 7
    g = double_cycle(n)
    shift = [(v // n) * n + (v % n + 1) % n for v in range(2 * n)]
    for v, h in g.darts():
        w, k = g.rot(v, h)
        assert g.rot(shift[v], h) == (shift[w], k)


def test_random_regular_is_deterministic():
    assert random_regular(8, 4, 3) == random_regular(8, 4, 3)
    assert is_connected(random_regular(9, 4, 11))


def test_relabelled_cycle_still_cycle():
    c = cycle_graph(5)
    flipped = relabel_ports(c, [[2, 1]] * 5)
    assert (adjacency_matrix(flipped) == adjacency_matrix(c)).all()
