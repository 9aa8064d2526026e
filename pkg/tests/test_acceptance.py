"""End-to-end acceptance checks, one test per criterion.

The terminal summary prints a ``criterion N: PASS/FAIL`` line for each.
"""

from __future__ import annotations

import random

import numpy as np
import pytest

from conftest import named_fixtures, random_even_graph
from zzlab.basilica import (
    Generator,
    ab_inverse_order,
    act,
    basilica_spectrum_check,
    basilica_zigzag_check,
    schreier_graph,
)
from zzlab.connectivity import neighborhood_graph
from zzlab.core import adjacency_matrix, connected_components, is_connected
from zzlab.generators import complete_cyclic, complete_good, complete_graph, cycle_graph, double_cycle, hamming_cube
from zzlab.iso import brute_force_isomorphism, is_isomorphic, verify_mapping
from zzlab.parity import (
    Parity,
    block_component_correspondence,
    block_profile_oracle,
    congruenze_feasible,
    parity_decomposition,
    port_parity,
    pseudo_replacement,
)
from zzlab.products import (
    lexicographic_blocks,
    replacement_product,
    residual_decomposition,
    zigzag_product,
    zigzag_trace,
    zz_matrix_identity,
)
from zzlab.spectral import component_count_spectral


def _sub(a: np.ndarray, idx) -> np.ndarray:
    return a[np.ix_(idx, idx)]


def test_criterion_01_example_components():
    z = zigzag_product(complete_graph("complete-example56"), cycle_graph(4))
    comps = connected_components(z)
    assert [len(c) for c in comps] == [12, 8]
    a = adjacency_matrix(z)
    assert is_isomorphic(_sub(a, comps[0]), double_cycle(6)).verified
    assert is_isomorphic(_sub(a, comps[1]), double_cycle(4)).verified


def test_criterion_02_two_block_decomposition():
    dec = parity_decomposition(complete_graph("complete-example42"))
    assert [len(b) for b in dec.blocks] == [5, 4]
    p1 = dec.blocks[0]
    assert p1.members[0] is Parity.ODDEN
    assert p1.members[1] is p1.members[2] is Parity.ODD
    assert p1.members[3] is p1.members[4] is Parity.EVEN


def test_criterion_03_single_block():
    g = complete_graph("complete-example53")
    dec = parity_decomposition(g)
    assert len(dec.blocks) == 1 and dec.blocks[0].odden == [0, 1, 2, 3, 4]
    z = zigzag_product(g, cycle_graph(4))
    assert z.n == 20 and is_connected(z)


def test_criterion_04_good_labelling_matrix():
    a = adjacency_matrix(zigzag_product(complete_good(2), cycle_graph(4)))
    c1 = np.array([[0, 0, 0, 0], [1, 0, 1, 0], [0, 0, 0, 0], [1, 0, 1, 0]])
    c2 = np.array([[0, 1, 0, 1], [0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 0, 0]])
    c = [np.zeros((4, 4), dtype=int), c1, c2, c1, c2]
    blocks = lexicographic_blocks(a, 4)
    for r in range(5):
        for s in range(5):
            assert (blocks[r][s] == c[(s - r) % 5]).all(), (r, s)


def test_criterion_05_neighborhood_graphs():
    for d in range(3, 9):
        assert neighborhood_graph(complete_cyclic(d)).is_connected(), d
    for d in range(3, 10, 2):
        assert neighborhood_graph(cycle_graph(d)).is_connected(), d
    assert len(neighborhood_graph(cycle_graph(4)).components()) == 2


def test_criterion_06_cube_example():
    cube, c3 = hamming_cube(3), cycle_graph(3, start=0)
    r = replacement_product(cube, c3)
    assert (r.n, r.degree) == (24, 3) and is_connected(r)
    z = zigzag_product(cube, c3)
    assert (z.n, z.degree) == (24, 4) and is_connected(z)
    v, w = cube.index("111"), cube.index("110")
    step = zigzag_trace(cube, c3, v, 1, 1, 1)
    assert (step.start, step.after_zig, step.after_jump, step.end) == ((v, 1), (v, 2), (w, 2), (w, 0))
    a = adjacency_matrix(z)
    assert a[z.index("(111,1)"), z.index("(110,0)")] >= 1


def _identity_pairs():
    pairs = []
    for name, g in named_fixtures().items():
        if g.degree >= 3:
            start = 0 if name == "cube3" else 1
            pairs.append((name, g, cycle_graph(g.degree, start=start)))
    for n in (1, 2, 3, 4):
        pairs.append((f"basilica{n}/alt", schreier_graph(n), named_fixtures()["c4-basilica"]))
    return pairs


def test_criterion_07_matrix_identity_and_residual():
    problems = []
    sums = {}
    for name, g1, g2 in _identity_pairs():
        rep = zz_matrix_identity(g1, g2)
        if not rep.holds:
            problems.append(f"{name}: identity fails at {rep.first_mismatch}")
        res = residual_decomposition(g1, g2)
        sums[name] = res.row_sum
    assert sums["k5-example42"] == 23
    # the criterion also quotes 55 for the cube with C_3; with d2 = 2 the
    # stated formula gives 23, and the measured row sums agree with the formula
    if sums["cube3"] != 55:
        problems.append(f"cube3/C3 residual row sum is {sums['cube3']}, criterion quotes 55")
    assert not problems, problems


def _check_membership_pattern(g, dec, corr):
    comps = {b: corr.components[c] for b, c in corr.pairs}
    cyc = g.degree
    for block in dec.blocks:
        got: dict[int, set[int]] = {}
        for x in comps[block.id]:
            v, j = divmod(x, cyc)
            got.setdefault(v, set()).add(j + 1)
        assert set(got) == set(block.vertices)
        for v in block.vertices:
            role = block.members[v]
            if role is Parity.ODDEN:
                want = set(range(1, cyc + 1))
            else:
                used = 1 if role is Parity.ODD else 0
                want = {h for h in range(1, cyc + 1) if port_parity(h) != used}
            assert got[v] == want, (v, role)


def test_criterion_08_block_component_bijection():
    graphs = [g for g in named_fixtures().values() if g.degree % 2 == 0]
    graphs += [random_even_graph(seed) for seed in range(1, 21)]
    degrees = set()
    for g in graphs:
        dec = parity_decomposition(g)
        corr = block_component_correspondence(g, dec)
        assert len(corr.pairs) == len(dec.blocks) == len(corr.components)
        _check_membership_pattern(g, dec, corr)
        degrees.add(g.degree)
    assert {4, 6} <= degrees


def test_criterion_09_component_iff_replacement():
    for degree in (4, 6):
        pieces = []
        for g in named_fixtures().values():
            if g.degree != degree:
                continue
            dec = parity_decomposition(g)
            corr = block_component_correspondence(g, dec)
            a = adjacency_matrix(corr.product)
            for bid, ci in corr.pairs:
                pieces.append((_sub(a, corr.components[ci]),
                               pseudo_replacement(g, dec.blocks[bid]).adjacency))
        assert pieces
        for i, (s1, r1) in enumerate(pieces):
            for s2, r2 in pieces[i:]:
                assert bool(is_isomorphic(s1, s2)) == bool(is_isomorphic(r1, r2))


def test_criterion_10_basilica():
    assert act(Generator.B, "000") == "101"
    for n in range(1, 13):
        assert ab_inverse_order(n) == 2 ** n, n
    for n in range(1, 9):
        rep = basilica_zigzag_check(n)
        assert rep.components == 1 and rep.double_cycle == 2 ** (n + 1), rep


def test_criterion_11_basilica_spectrum():
    for n in range(1, 9):
        rep = basilica_spectrum_check(n, strict=False)
        assert rep.tensor_form, n
        assert rep.max_eigen_error < 1e-9, (n, rep.max_eigen_error)
        assert rep.max_residual < 1e-8, (n, rep.max_residual)


def test_criterion_12_spectral_component_count():
    for name, g in named_fixtures().items():
        assert component_count_spectral(g, tol=1e-6) == len(connected_components(g)), name
    z = zigzag_product(complete_graph("complete-example56"), cycle_graph(4))
    assert component_count_spectral(z, tol=1e-6) == len(connected_components(z)) == 2


def _random_multigraph(rng: random.Random, n: int) -> np.ndarray:
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            if rng.random() < 0.35:
                m = rng.randint(1, 2)
                a[i, j] += m if i != j else 2 * m
                if i != j:
                    a[j, i] += m
    return a


def test_criterion_13_iso_engine_oracle():
    rng = random.Random(2024)
    pieces = []
    for g in named_fixtures().values():
        a = adjacency_matrix(g)
        for lo in range(0, max(1, len(a) - 7), 3):
            pieces.append(a[lo:lo + 8, lo:lo + 8])
    for a in pieces:
        p = list(range(len(a)))
        rng.shuffle(p)
        b = a[np.ix_(p, p)]
        res = is_isomorphic(a, b)
        assert res and verify_mapping(a, b, res.mapping)
        assert brute_force_isomorphism(a, b) is not None
    for i, a in enumerate(pieces):
        for b in pieces[i + 1:]:
            if len(a) == len(b):
                assert bool(is_isomorphic(a, b)) == (brute_force_isomorphism(a, b) is not None)
    for seed in range(200):
        r = random.Random(seed)
        n = r.randint(1, 8)
        a = _random_multigraph(r, n)
        if seed % 2:
            p = list(range(n))
            r.shuffle(p)
            b = a[np.ix_(p, p)]
        else:
            b = _random_multigraph(r, n)
        res = is_isomorphic(a, b)
        assert bool(res) == (brute_force_isomorphism(a, b) is not None), seed
        if res:
            assert verify_mapping(a, b, res.mapping)


@pytest.mark.parametrize("cfg", [(4, 1, 9), (4, 0, 7), (4, 2, 9)])
def test_criterion_14_witness_configurations(cfg):
    assert congruenze_feasible(*cfg)


def test_criterion_14_feasibility_oracle():
    for d in range(1, 5):
        for p in range(0, 2 * d + 2):
            for i in range(0, p + 1):
                assert congruenze_feasible(d, i, p) == block_profile_oracle(d, i, p), (d, i, p)
