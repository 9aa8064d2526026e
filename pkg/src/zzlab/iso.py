"""Exact isomorphism of small multigraphs given as integer adjacency matrices.

Both graphs are refined together as one disjoint union: cells hold vertices
from either side and every cell must stay balanced.  Refinement is driven by a
queue of splitter cells, so individualising one vertex of a twin pair costs
little.  When refinement stalls, the smallest unsplit cell is broken by
trying each partner for its lowest-index vertex.  Any discrete result is
re-checked entry by entry before being reported.
"""

from __future__ import annotations

import sys
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .core import RotationGraph, adjacency_matrix
from .errors import SizeLimitExceeded
from .generators import double_cycle

MAX_VERTICES = 2000


@dataclass
class IsoCertificate:
    """``mapping[i]`` is the vertex of the second graph matched to vertex ``i`` of the first."""

    mapping: list[int]
    verified: bool

    def __bool__(self) -> bool:
        return self.verified

    def to_dict(self) -> dict:
        return {"isomorphic": True, "mapping": self.mapping, "verified": self.verified}


@dataclass
class NotIsomorphic:
    reason: str

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {"isomorphic": False, "reason": self.reason}


def as_adjacency(x) -> np.ndarray:
    if isinstance(x, RotationGraph):
        return adjacency_matrix(x)
    a = np.asarray(x, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("adjacency must be a square matrix")
    if not (a == a.T).all():
        raise ValueError("adjacency must be symmetric")
    return a


def verify_mapping(a: np.ndarray, b: np.ndarray, mapping) -> bool:
    perm = np.asarray(mapping, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(len(a))):
        return False
    return bool((b[np.ix_(perm, perm)] == a).all())


class _Partition:
    __slots__ = ("cells", "cell_of", "next_id", "half")

    def __init__(self, half: int):
        self.cells: dict[int, list[int]] = {}
        self.cell_of: list[int] = []
        self.next_id = 0
        self.half = half

    def copy(self) -> _Partition:
        p = _Partition(self.half)
        p.cells = {k: list(v) for k, v in self.cells.items()}
        p.cell_of = list(self.cell_of)
        p.next_id = self.next_id
        return p

    def balanced(self, members: list[int]) -> bool:
        left = sum(1 for v in members if v < self.half)
        return 2 * left == len(members)

    def new_cell(self, members: list[int]) -> int:
        cid = self.next_id
        self.next_id += 1
        self.cells[cid] = members
        for v in members:
            self.cell_of[v] = cid
        return cid


def _refine(part: _Partition, nbrs: list[list[tuple[int, int]]], queue: list[int]) -> bool:
    pending = set(queue)
    queue = sorted(queue)
    while queue:
        s = queue.pop(0)
        pending.discard(s)
        if s not in part.cells:
            continue
        count: dict[int, int] = defaultdict(int)
        for u in part.cells[s]:
            for v, m in nbrs[u]:
                count[v] += m
        touched = sorted({part.cell_of[v] for v in count})
        for c in touched:
            members = part.cells[c]
            if len(members) == 1:
                continue
            groups: dict[int, list[int]] = defaultdict(list)
            for v in members:
                groups[count.get(v, 0)].append(v)
            if len(groups) == 1:
                continue
            del part.cells[c]
            pending.discard(c)
            for key in sorted(groups):
                grp = groups[key]
                if not part.balanced(grp):
                    return False
                cid = part.new_cell(grp)
                pending.add(cid)
                queue.append(cid)
    return True


def _initial_partition(a: np.ndarray, b: np.ndarray) -> _Partition | None:
    n = len(a)
    part = _Partition(n)
    part.cell_of = [0] * (2 * n)
    keys = defaultdict(list)
    for side, m in ((0, a), (1, b)):
        diag = np.diag(m)
        deg = m.sum(axis=1)
        for v in range(n):
            keys[(int(diag[v]), int(deg[v]))].append(side * n + v)
    for key in sorted(keys):
        if not part.balanced(keys[key]):
            return None
        part.new_cell(keys[key])
    return part


def _search(part: _Partition, nbrs, a, b) -> list[int] | None:
    n = part.half
    open_cells = [(len(m), min(m), c) for c, m in part.cells.items() if len(m) > 2]
    if not open_cells:
        mapping = [0] * n
        for members in part.cells.values():
            x, y = sorted(members)
            mapping[x] = y - n
        return mapping if verify_mapping(a, b, mapping) else None
    _, _, c = min(open_cells)
    members = sorted(part.cells[c])
    x = members[0]
    for y in (v for v in members if v >= n):
        trial = part.copy()
        rest = [v for v in members if v not in (x, y)]
        del trial.cells[c]
        first = trial.new_cell([x, y])
        second = trial.new_cell(rest)
        if _refine(trial, nbrs, [first, second]):
            found = _search(trial, nbrs, a, b)
            if found is not None:
                return found
    return None


def is_isomorphic(first, second) -> IsoCertificate | NotIsomorphic:
    a, b = as_adjacency(first), as_adjacency(second)
    if len(a) != len(b):
        return NotIsomorphic(f"orders differ: {len(a)} vs {len(b)}")
    n = len(a)
    if n > MAX_VERTICES:
        raise SizeLimitExceeded(f"{n} vertices exceeds the limit of {MAX_VERTICES}")
    if n == 0:
        return IsoCertificate([], True)
    if a.sum() != b.sum():
        return NotIsomorphic("edge counts differ")
    part = _initial_partition(a, b)
    if part is None:
        return NotIsomorphic("degree or loop profiles differ")
    nbrs: list[list[tuple[int, int]]] = []
    for side, m in ((0, a), (1, b)):
        for v in range(n):
            cols = np.nonzero(m[v])[0]
            nbrs.append([(side * n + int(u), int(m[v, u])) for u in cols])
    if not _refine(part, nbrs, sorted(part.cells)):
        return NotIsomorphic("colour refinement separates the graphs")
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * n + 100))
    try:
        mapping = _search(part, nbrs, a, b)
    finally:
        sys.setrecursionlimit(limit)
    if mapping is None:
        return NotIsomorphic("exhaustive search found no bijection")
    return IsoCertificate(mapping, verify_mapping(a, b, mapping))


def brute_force_isomorphism(first, second) -> list[int] | None:
    """Reference search: extend a partial bijection vertex by vertex."""
    a, b = as_adjacency(first), as_adjacency(second)
    n = len(a)
    if n != len(b):
        return None
    deg_a, deg_b = a.sum(axis=1), b.sum(axis=1)
    mapping: list[int] = []
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for y in range(n):
            if used[y] or deg_a[i] != deg_b[y] or a[i, i] != b[y, y]:
                continue
            if all(a[i, j] == b[y, mapping[j]] for j in range(i)):
                used[y] = True
                mapping.append(y)
                if extend(i + 1):
                    return True
                mapping.pop()
                used[y] = False
        return False

    return list(mapping) if extend(0) else None


def recognize_double_cycle(g) -> int | None:
    """Return ``n`` when ``g`` is isomorphic to the double cycle on ``2n`` vertices, else ``None``."""
    a = as_adjacency(g)
    size = len(a)
    if size < 4 or size % 2 or not (a.sum(axis=1) == 4).all():
        return None
    n = size // 2
    return n if is_isomorphic(a, double_cycle(n)) else None
