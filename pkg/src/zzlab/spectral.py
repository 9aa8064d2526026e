"""Spectra: numeric for symmetric matrices, closed form for circulants and double cycles."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import RotationGraph, adjacency_matrix, connected_components
from .errors import MultiplicityMismatch, NotSymmetric

GROUP_TOL = 1e-6
SYMMETRY_TOL = 1e-12


def group_multiplicities(values, tol: float = GROUP_TOL) -> list[tuple[float, int]]:
    """Cluster a descending list into ``(representative, count)`` pairs."""
    out: list[list] = []
    for x in values:
        if out and abs(out[-1][0] - x) <= tol:
            out[-1][1] += 1
        else:
            out.append([float(x), 1])
    return [(v, c) for v, c in out]


@dataclass
class SpectrumReport:
    eigenvalues: list[float]
    source: str
    multiplicities: list[tuple[float, int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.eigenvalues = sorted((float(x) for x in self.eigenvalues), reverse=True)
        if not self.multiplicities:
            self.multiplicities = group_multiplicities(self.eigenvalues)

    def multiplicity(self, value: float, tol: float = GROUP_TOL) -> int:
        return sum(1 for x in self.eigenvalues if abs(x - value) <= tol)

    def matches(self, other: SpectrumReport, tol: float) -> bool:
        if len(self.eigenvalues) != len(other.eigenvalues):
            return False
        return max((abs(x - y) for x, y in zip(self.eigenvalues, other.eigenvalues)), default=0.0) <= tol

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "eigenvalues": self.eigenvalues,
            "multiplicities": [[round(v, 12), c] for v, c in self.multiplicities],
        }

    def to_csv(self) -> str:
        return "index,eigenvalue\n" + "".join(f"{i},{x!r}\n" for i, x in enumerate(self.eigenvalues))


def eigenvalues_symmetric(m) -> SpectrumReport:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric("matrix must be square")
    if a.size and np.max(np.abs(a - a.T)) > SYMMETRY_TOL:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    return SpectrumReport(np.linalg.eigvalsh(a).tolist(), "numeric")


def circulant_eigenvalues(first_row) -> list[complex]:
    """``lambda_j = sum_k c_k w^(jk)`` with ``w = exp(2 pi i / n)``, computed term by term."""
    c = list(first_row)
    n = len(c)
    out = []
    for j in range(n):
        total = 0j
        for k, ck in enumerate(c):
            if ck:
                angle = 2 * math.pi * ((j * k) % n) / n
                total += ck * complex(math.cos(angle), math.sin(angle))
        out.append(total)
    return out


def circulant_eigenvector(n: int, j: int) -> np.ndarray:
    return np.exp(2j * np.pi * j * np.arange(n) / n)


def circulant_matrix(first_row) -> np.ndarray:
    c = np.asarray(first_row)
    n = len(c)
    return np.array([[c[(col - row) % n] for col in range(n)] for row in range(n)])


def circulant_spectrum(first_row) -> SpectrumReport:
    vals = circulant_eigenvalues(first_row)
    return SpectrumReport([v.real for v in vals], "circulant-formula")


def dc_spectrum(n: int) -> SpectrumReport:
    """Double cycle on ``2n`` vertices: ``n`` zeros and ``4 cos(2 pi j / n)``."""
    if n < 2:
        raise ValueError("double cycle needs n >= 2")
    vals = [0.0] * n + [4 * math.cos(2 * math.pi * j / n) for j in range(n)]
    return SpectrumReport(vals, "dc-formula")


def normalized_adjacency(g: RotationGraph) -> np.ndarray:
    return adjacency_matrix(g) / g.degree


def component_count_spectral(g: RotationGraph, tol: float = GROUP_TOL) -> int:
    spec = eigenvalues_symmetric(adjacency_matrix(g))
    count = spec.multiplicity(float(g.degree), tol)
    bfs = len(connected_components(g))
    if count != bfs:
        raise MultiplicityMismatch(f"eigenvalue {g.degree} has multiplicity {count}, BFS finds {bfs}")
    return count


def is_block_circulant(a: np.ndarray, block: int) -> bool:
    """Block ``(r, c)`` depends only on ``(c - r) mod`` the number of blocks."""
    n = a.shape[0] // block
    first = [a[:block, c * block:(c + 1) * block] for c in range(n)]
    for r in range(n):
        for c in range(n):
            if not (a[r * block:(r + 1) * block, c * block:(c + 1) * block] == first[(c - r) % n]).all():
                return False
    return True
