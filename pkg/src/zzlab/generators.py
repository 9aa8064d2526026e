"""Named graphs and labellings used throughout the package."""

from __future__ import annotations

import random
from importlib import resources

from .core import RotationGraph, build_graph, from_json, is_connected
from .errors import SizeTooSmall, UnknownVariant

LABELLING_SCHEMES = (
    "cycle-cayley",
    "complete-good",
    "complete-example42",
    "complete-example53",
    "complete-example56",
    "complete-example57",
    "hamming-cube",
    "double-cycle",
)

# The two-block figure and the K5 (z) C4 component figure carry the same labelling.
_COMPLETE_FIXTURES = {
    "complete-example42": "k5_example42.json",
    "complete-example56": "k5_example42.json",
    "complete-example53": "k5_example53.json",
    "complete-example57": "k5_example57.json",
}


def load_fixture(filename: str) -> RotationGraph:
    text = resources.files("zzlab").joinpath("data").joinpath(filename).read_text(encoding="utf-8")
    return from_json(text)


def cycle_graph(n: int, start: int = 1) -> RotationGraph:
    """Cycle on vertices ``start..start+n-1`` with ``rot(u, 1) = (u+1, 2)``.

    Port 1 steps forward and port 2 steps back, so ``n == 2`` gives a doubled edge.
    """
    if n < 2:
        raise SizeTooSmall(f"cycle needs n >= 2, got {n}")
    pairs = [((u, 1), ((u + 1) % n, 2)) for u in range(n)]
    return build_graph(2, [str(start + u) for u in range(n)], pairs)


def complete_cyclic(m: int) -> RotationGraph:
    """K_m on ``0..m-1`` with ``rot(i, j) = (i + j mod m, m - j)``."""
    if m < 2:
        raise SizeTooSmall(f"complete graph needs m >= 2, got {m}")
    pairs = []
    for i in range(m):
        for j in range(1, m):
            w, k = (i + j) % m, m - j
            if (i, j) < (w, k):
                pairs.append(((i, j), (w, k)))
    return build_graph(m - 1, [str(i) for i in range(m)], pairs)


def complete_good(d: int) -> RotationGraph:
    """K_{2d+1} with ``rot(i, j) = (i + j mod 2d+1, 2d - j + 1)``."""
    if d < 1:
        raise SizeTooSmall(f"need d >= 1, got {d}")
    return complete_cyclic(2 * d + 1)


def complete_graph(variant: str, parameter: int | None = None) -> RotationGraph:
    if variant == "complete-good":
        return complete_good(2 if parameter is None else parameter)
    try:
        return load_fixture(_COMPLETE_FIXTURES[variant])
    except KeyError:
        raise UnknownVariant(f"unknown complete-graph labelling {variant!r}") from None


def hamming_cube(k: int) -> RotationGraph:
    """Binary words of length ``k``; port ``i`` flips letter ``i-1`` (same label at both ends)."""
    if k < 1:
        raise SizeTooSmall(f"need k >= 1, got {k}")
    words = [format(x, f"0{k}b") for x in range(2 ** k)]
    pairs = []
    for x in range(2 ** k):
        for i in range(k):
            y = x ^ (1 << (k - 1 - i))
            if x < y:
                pairs.append(((x, i + 1), (y, i + 1)))
    return build_graph(k, words, pairs)


def double_cycle(n: int) -> RotationGraph:
    """DC_n: vertices ``outer_i`` then ``inner_i``; 4-regular on ``2n`` vertices.

    Port convention: at every vertex, port 1 goes to the same-ring neighbour
    at ``i+1`` and port 3 to the other-ring neighbour at ``i+1``; ports 2 and
    4 are the matching backward connections.
    """
    if n < 2:
        raise SizeTooSmall(f"double cycle needs n >= 2, got {n}")
    names = [f"outer_{i}" for i in range(n)] + [f"inner_{i}" for i in range(n)]
    pairs = []
    for ring in (0, 1):
        for i in range(n):
            v = ring * n + i
            same = ring * n + (i + 1) % n
            other = (1 - ring) * n + (i + 1) % n
            pairs.append(((v, 1), (same, 2)))
            pairs.append(((v, 3), (other, 4)))
    return build_graph(4, names, pairs)


def random_regular(n: int, degree: int, seed: int, connected: bool = True,
                   max_tries: int = 1000) -> RotationGraph:
    """Uniformly random dart matching; every matching is a valid bi-labelling.

    Retries (advancing the same RNG) until the result is connected when
    ``connected`` is set.  Uniformity over graphs is not claimed.
    """
    if (n * degree) % 2:
        raise SizeTooSmall(f"n*degree must be even, got {n}*{degree}")
    rng = random.Random(seed)
    darts = [(v, h) for v in range(n) for h in range(1, degree + 1)]
    for _ in range(max_tries):
        rng.shuffle(darts)
        pairs = [(darts[i], darts[i + 1]) for i in range(0, len(darts), 2)]
        g = build_graph(degree, [str(v) for v in range(n)], pairs)
        if not connected or is_connected(g):
            return g
    raise RuntimeError(f"no connected sample after {max_tries} tries")
