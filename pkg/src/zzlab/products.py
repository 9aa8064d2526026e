"""Replacement and zig-zag products, and the matrix facts that certify them.

Product vertices are ordered cloud-major: ``(v, k)`` sits at index
``v * n2 + k`` where ``k`` is a vertex index of the second factor.  Vertex
``k`` of the second factor stands for port ``k + 1`` of the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import RotationGraph, adjacency_matrix, is_connected
from .errors import DegreeMismatch, DisconnectedFactor, NegativeResidual, NotAnEdge


def _check_factors(g1: RotationGraph, g2: RotationGraph, allow_disconnected: bool) -> None:
    if g2.n != g1.degree:
        raise DegreeMismatch(f"|V2| = {g2.n} but G1 has degree {g1.degree}")
    if not allow_disconnected:
        for label, g in (("G1", g1), ("G2", g2)):
            if not is_connected(g):
                raise DisconnectedFactor(f"{label} is not connected")


def _product_names(g1: RotationGraph, g2: RotationGraph) -> list[str]:
    return [f"({a},{b})" for a in g1.names for b in g2.names]


def replacement_product(g1: RotationGraph, g2: RotationGraph, *,
                        allow_disconnected: bool = False) -> RotationGraph:
    _check_factors(g1, g2, allow_disconnected)
    n2, d2 = g2.n, g2.degree
    deg = d2 + 1
    table = []
    for v in range(g1.n):
        for k in range(n2):
            for i in range(1, deg + 1):
                if i <= d2:
                    m, j = g2.rot(k, i)
                    w = v
                else:
                    (w, l1), j = g1.rot(v, k + 1), deg
                    m = l1 - 1
                table.append((w * n2 + m) * deg + j - 1)
    return RotationGraph(deg, _product_names(g1, g2), table)


def encode_port(i: int, j: int, d2: int) -> int:
    return (i - 1) * d2 + j


def decode_port(p: int, d2: int) -> tuple[int, int]:
    i, j = divmod(p - 1, d2)
    return i + 1, j + 1


@dataclass(frozen=True)
class ZigZagStep:
    """The three moves behind one zig-zag dart, in product-vertex terms."""

    start: tuple[int, int]
    after_zig: tuple[int, int]
    after_jump: tuple[int, int]
    end: tuple[int, int]
    out_port: tuple[int, int]


def zigzag_trace(g1: RotationGraph, g2: RotationGraph, v: int, k: int, i: int, j: int) -> ZigZagStep:
    """Follow zig (port ``i`` in G2), jump (G1), zag (port ``j`` in G2) from ``(v, k)``."""
    k2, i2 = g2.rot(k, i)
    (w, l1) = g1.rot(v, k2 + 1)
    l, j2 = g2.rot(l1 - 1, j)
    return ZigZagStep((v, k), (v, k2), (w, l1 - 1), (w, l), (j2, i2))


def zigzag_product(g1: RotationGraph, g2: RotationGraph, *,
                   allow_disconnected: bool = False) -> RotationGraph:
    _check_factors(g1, g2, allow_disconnected)
    n2, d2 = g2.n, g2.degree
    deg = d2 * d2
    table = []
    for v in range(g1.n):
        for k in range(n2):
            for i in range(1, d2 + 1):
                k2, i2 = g2.rot(k, i)
                w, l1 = g1.rot(v, k2 + 1)
                for j in range(1, d2 + 1):
                    l, j2 = g2.rot(l1 - 1, j)
                    table.append((w * n2 + l) * deg + encode_port(j2, i2, d2) - 1)
    return RotationGraph(deg, _product_names(g1, g2), table)


@dataclass
class Papillon:
    left: list[tuple[int, int]]
    right: list[tuple[int, int]]
    edge_count: int


def papillon_blocks(g1: RotationGraph, g2: RotationGraph,
                    edge: tuple[tuple[int, int], tuple[int, int]]) -> Papillon:
    """The complete bipartite piece that one edge of G1 contributes to G1 (z) G2.

    ``left``/``right`` list ``(cloud, inner)`` pairs with multiplicity (one
    entry per G2-dart at the jump endpoint).  The zig-zag darts whose jump
    uses this edge are collected and checked to be exactly ``left x right``
    as a multiset; loops of G1 may make the two sides overlap.
    """
    (v, k), (w, l) = edge
    if g1.rot(v, k) != (w, l):
        raise NotAnEdge(f"rot({v},{k}) = {g1.rot(v, k)}, not {(w, l)}")
    d2 = g2.degree
    left = sorted((v, g2.rot(k - 1, i)[0]) for i in range(1, d2 + 1))
    right = sorted((w, g2.rot(l - 1, j)[0]) for j in range(1, d2 + 1))

    found = []
    for x in range(g2.n):
        for i in range(1, d2 + 1):
            if g2.rot(x, i)[0] != k - 1:
                continue
            for j in range(1, d2 + 1):
                step = zigzag_trace(g1, g2, v, x, i, j)
                found.append((step.start, step.end))
    expected = sorted((a, b) for a in left for b in right)
    if sorted(found) != expected:
        raise AssertionError("papillon darts do not form the complete bipartite multiset")
    return Papillon(left, right, len(found))


def rotation_permutation_matrix(g: RotationGraph) -> np.ndarray:
    """0/1 matrix on darts (cloud-major) with a 1 at ``(dart, rot(dart))``."""
    size = g.n * g.degree
    p = np.zeros((size, size), dtype=np.int64)
    p[np.arange(size), np.asarray(g.table)] = 1
    return p


@dataclass
class IdentityReport:
    holds: bool
    first_mismatch: tuple[int, int] | None
    lhs_value: int | None = None
    rhs_value: int | None = None


def zz_matrix_identity(g1: RotationGraph, g2: RotationGraph, *,
                       allow_disconnected: bool = False) -> IdentityReport:
    """Check ``A_zz == (I (x) A2) P1 (I (x) A2)`` in exact integer arithmetic."""
    a_zz = adjacency_matrix(zigzag_product(g1, g2, allow_disconnected=allow_disconnected))
    lift = np.kron(np.eye(g1.n, dtype=np.int64), adjacency_matrix(g2))
    rhs = lift @ rotation_permutation_matrix(g1) @ lift
    bad = np.argwhere(a_zz != rhs)
    if len(bad):
        r, c = (int(x) for x in bad[0])
        return IdentityReport(False, (r, c), int(a_zz[r, c]), int(rhs[r, c]))
    return IdentityReport(True, None)


@dataclass
class Residual:
    """``D = A_r^3 - A_zz`` and its normalisation ``C = D / row_sum``."""

    d: np.ndarray
    row_sum: int

    @property
    def c(self) -> np.ndarray:
        return self.d / self.row_sum

    def c_fraction(self, r: int, s: int):
        from fractions import Fraction

        return Fraction(int(self.d[r, s]), self.row_sum)


def residual_decomposition(g1: RotationGraph, g2: RotationGraph, *,
                           allow_disconnected: bool = False) -> Residual:
    a_r = adjacency_matrix(replacement_product(g1, g2, allow_disconnected=allow_disconnected))
    a_zz = adjacency_matrix(zigzag_product(g1, g2, allow_disconnected=allow_disconnected))
    d = a_r @ a_r @ a_r - a_zz
    d2 = g2.degree
    row_sum = (d2 + 1) ** 3 - d2 ** 2
    if (d < 0).any():
        r, c = (int(x) for x in np.argwhere(d < 0)[0])
        raise NegativeResidual(f"D[{r},{c}] = {int(d[r, c])}")
    if not (d == d.T).all():
        raise NegativeResidual("residual is not symmetric")
    sums = d.sum(axis=1)
    if not (sums == row_sum).all():
        raise NegativeResidual(f"row sums {sorted(set(sums.tolist()))} != {row_sum}")
    return Residual(d, row_sum)


def product_index(g2_order: int, cloud: int, inner: int) -> int:
    return cloud * g2_order + inner


def split_index(g2_order: int, x: int) -> tuple[int, int]:
    return divmod(x, g2_order)


def lexicographic_blocks(a: np.ndarray, block: int) -> Sequence[Sequence[np.ndarray]]:
    n = a.shape[0] // block
    return [[a[r * block:(r + 1) * block, c * block:(c + 1) * block] for c in range(n)]
            for r in range(n)]
