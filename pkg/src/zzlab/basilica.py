"""The Basilica automaton group acting on binary words, and its Schreier graphs.

Generators are numbered by port: ``a = 1``, ``a^-1 = 2``, ``b = 3``,
``b^-1 = 4``.  The level-``n`` Schreier graph joins ``w`` to ``s(w)`` with
port ``s`` at ``w`` and port ``s^-1`` at ``s(w)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .core import RotationGraph, adjacency_matrix, build_graph, connected_components
from .errors import OrderingMismatch, SpectrumMismatch
from .generators import cycle_graph
from .iso import recognize_double_cycle
from .parity import parity_decomposition
from .products import zigzag_product
from .spectral import circulant_eigenvector, circulant_matrix, eigenvalues_symmetric

EIG_TOL = 1e-9
RESIDUAL_TOL = 1e-8


class Generator(enum.IntEnum):
    A = 1
    A_INV = 2
    B = 3
    B_INV = 4

    @property
    def inverse(self) -> Generator:
        return Generator(self + 1 if self % 2 else self - 1)


def act(s: Generator | int, word: str) -> str:
    """Image of ``word`` under generator ``s``, computed letter by letter."""
    s = Generator(s)
    out = []
    state: Generator | None = s
    for i, x in enumerate(word):
        if state is None:
            out.append(word[i:])
            break
        if state is Generator.A:
            out.append(x)
            state = Generator.B if x == "0" else None
        elif state is Generator.A_INV:
            out.append(x)
            state = Generator.B_INV if x == "0" else None
        elif state is Generator.B:
            if x == "0":
                out.append("1")
                state = Generator.A
            else:
                out.append("0")
                state = None
        else:  # b^-1
            if x == "1":
                out.append("0")
                state = Generator.A_INV
            else:
                out.append("1")
                state = None
    return "".join(out)


def words(n: int) -> list[str]:
    return [format(x, f"0{n}b") for x in range(2 ** n)] if n else [""]


def schreier_graph(n: int) -> RotationGraph:
    if n < 1:
        raise ValueError("level must be at least 1")
    names = words(n)
    index = {w: i for i, w in enumerate(names)}
    pairs = []
    for w in names:
        for s in (Generator.A, Generator.B):
            pairs.append(((index[w], int(s)), (index[act(s, w)], int(s.inverse))))
    return build_graph(4, names, pairs)


def ab_inverse_order(n: int) -> int:
    """Order of ``w -> a(b^-1(w))`` on words of length ``n`` (lcm of cycle lengths)."""
    perm = {w: act(Generator.A, act(Generator.B_INV, w)) for w in words(n)}
    seen: set[str] = set()
    order = 1
    for w in perm:
        if w in seen:
            continue
        length, x = 0, w
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        order = math.lcm(order, length)
    return order


@dataclass
class ZigZagReport:
    level: int
    vertices: int
    components: int
    double_cycle: int | None
    single_block: bool
    all_odden: bool

    @property
    def ok(self) -> bool:
        return (self.components == 1 and self.double_cycle == 2 ** (self.level + 1)
                and self.single_block and self.all_odden)

    def to_dict(self) -> dict:
        return {**self.__dict__, "ok": self.ok}


def basilica_zigzag_check(n: int, c4: RotationGraph | None = None) -> ZigZagReport:
    gamma = schreier_graph(n)
    prod = zigzag_product(gamma, c4 or cycle_graph(4), allow_disconnected=True)
    comps = connected_components(prod)
    dec = parity_decomposition(gamma)
    return ZigZagReport(
        level=n,
        vertices=prod.n,
        components=len(comps),
        double_cycle=recognize_double_cycle(prod) if len(comps) == 1 else None,
        single_block=len(dec.blocks) == 1,
        all_odden=len(dec.blocks) == 1 and len(dec.blocks[0].odden) == gamma.n,
    )


def alternating_orbit(n: int) -> list[str]:
    """``0^n, b^-1(0^n), a b^-1(0^n), ...``: ``2^(n+1)`` words, applying ``b^-1`` then ``a``."""
    w = "0" * n
    out = []
    for t in range(2 ** (n + 1)):
        out.append(w)
        w = act(Generator.B_INV if t % 2 == 0 else Generator.A, w)
    if w != "0" * n:
        raise OrderingMismatch("the alternating orbit does not close up")
    return out


def spectral_order(n: int) -> list[int]:
    """Product vertex indices in the inner-then-outer cycle order.

    Cycle vertex index ``k`` stands for port ``k + 1``: inner positions use
    ``a``/``a^-1`` (indices 0/1), outer positions use ``b``/``b^-1`` (2/3).
    """
    orbit = alternating_orbit(n)
    index = {w: i for i, w in enumerate(words(n))}
    inner = [index[w] * 4 + (t % 2) for t, w in enumerate(orbit)]
    outer = [index[w] * 4 + 2 + (t % 2) for t, w in enumerate(orbit)]
    return inner + outer


@dataclass
class SpectrumCheck:
    level: int
    tensor_form: bool
    max_eigen_error: float
    max_residual: float
    eigenvalues: list[float] = field(repr=False, default_factory=list)

    @property
    def ok(self) -> bool:
        return self.tensor_form and self.max_eigen_error < EIG_TOL and self.max_residual < RESIDUAL_TOL

    def to_dict(self) -> dict:
        return {"level": self.level, "tensor_form": self.tensor_form,
                "max_eigen_error": self.max_eigen_error, "max_residual": self.max_residual,
                "ok": self.ok}


def predicted_spectrum(n: int) -> list[float]:
    size = 2 ** (n + 1)
    vals = [0.0] * size + [4 * math.cos(math.pi * j / 2 ** n) for j in range(size)]
    return sorted(vals, reverse=True)


def basilica_spectrum_check(n: int, c4: RotationGraph | None = None, strict: bool = True) -> SpectrumCheck:
    """Reorder ``Gamma_n (z) C_4``, compare with ``U (x) M``, and test the spectrum and eigenvectors."""
    prod = zigzag_product(schreier_graph(n), c4 or cycle_graph(4), allow_disconnected=True)
    order = spectral_order(n)
    if sorted(order) != list(range(prod.n)):
        raise OrderingMismatch("ordering does not list every product vertex once")
    a = adjacency_matrix(prod)
    m = a[np.ix_(order, order)]
    size = 2 ** (n + 1)
    row = [0] * size
    row[1] = row[size - 1] = 1
    u = np.ones((2, 2), dtype=np.int64)
    tensor = bool((m == np.kron(u, circulant_matrix(row))).all())
    if strict and not tensor:
        raise OrderingMismatch("reordered adjacency is not U (x) circulant")

    numeric = eigenvalues_symmetric(m).eigenvalues
    err = max(abs(x - y) for x, y in zip(numeric, predicted_spectrum(n)))
    if strict and err >= EIG_TOL:
        raise SpectrumMismatch(f"eigenvalues differ by {err:.3e}")

    mf = m.astype(float)
    residual = 0.0
    for j in range(size):
        v = circulant_eigenvector(size, j)
        for vec, lam in ((np.kron([1, -1], v), 0.0),
                         (np.kron([1, 1], v), 4 * math.cos(math.pi * j / 2 ** n))):
            residual = max(residual, float(np.max(np.abs(mf @ vec - lam * vec))))
    if strict and residual >= RESIDUAL_TOL:
        raise SpectrumMismatch(f"eigenvector residual {residual:.3e}")
    return SpectrumCheck(n, tensor, err, residual, numeric)
