"""Bi-labelled regular multigraphs stored as rotation maps.

A graph of degree ``d`` on ``n`` vertices has ``n*d`` darts ``(v, h)`` with
``v`` a 0-based vertex index and ``h`` a 1-based port label.  The rotation map
pairs darts: ``rot(v, h) == (w, k)`` means one edge leaves ``v`` on port ``h``
and enters ``w`` on port ``k``.  The pairing must be a fixed-point-free
involution; a loop therefore uses two distinct ports of the same vertex.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DuplicateDart, FixedDart, FormatError, MissingDart, PortOutOfRange

Dart = tuple[int, int]
DartPair = tuple[Dart, Dart]

FORMAT_TAG = "rotgraph-v1"


class RotationGraph:
    """Immutable d-regular bi-labelled multigraph.

    Internally the rotation map is a flat tuple ``table`` where dart ``(v, h)``
    lives at slot ``v*d + h - 1`` and stores the slot of its partner.
    """

    __slots__ = ("degree", "names", "table", "_index")

    def __init__(self, degree: int, names: Sequence[str], table: Sequence[int]):
        if degree < 1:
            raise PortOutOfRange(f"degree must be positive, got {degree}")
        names = tuple(str(x) for x in names)
        n = len(names)
        if len(set(names)) != n:
            raise FormatError("vertex names must be distinct")
        size = n * degree
        if len(table) != size:
            raise MissingDart(f"rotation table has {len(table)} slots, expected {size}")
        table = tuple(int(t) for t in table)
        for s, t in enumerate(table):
            if not 0 <= t < size:
                raise PortOutOfRange(f"slot {s} points outside the dart range")
            if t == s:
                raise FixedDart(f"dart {divmod(s, degree)[0], s % degree + 1} is fixed")
            if table[t] != s:
                raise DuplicateDart(
                    f"rotation is not an involution at dart {s // degree, s % degree + 1}"
                )
        self.degree = degree
        self.names = names
        self.table = table
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def n(self) -> int:
        return len(self.names)

    def rot(self, v: int, h: int) -> Dart:
        d = self.degree
        if not 1 <= h <= d:
            raise PortOutOfRange(f"port {h} outside 1..{d}")
        t = self.table[v * d + h - 1]
        return t // d, t % d + 1

    def darts(self) -> Iterator[Dart]:
        for v in range(self.n):
            for h in range(1, self.degree + 1):
                yield v, h

    def dart_pairs(self) -> list[DartPair]:
        """Each edge once, as ``((v, h), (w, k))`` with the smaller slot first."""
        d = self.degree
        out = []
        for s, t in enumerate(self.table):
            if s < t:
                out.append(((s // d, s % d + 1), (t // d, t % d + 1)))
        return out

    def index(self, name: str) -> int:
        return self._index[str(name)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RotationGraph):
            return NotImplemented
        return (self.degree, self.names, self.table) == (other.degree, other.names, other.table)

    def __hash__(self) -> int:
        return hash((self.degree, self.names, self.table))

    def __repr__(self) -> str:
        return f"RotationGraph(degree={self.degree}, n={self.n})"


def _resolve(ref, index: dict[str, int], n: int) -> int:
    # ints are indices, anything else is a display name
    if isinstance(ref, (int, np.integer)) and not isinstance(ref, bool):
        v = int(ref)
        if not 0 <= v < n:
            raise PortOutOfRange(f"vertex index {v} outside 0..{n - 1}")
        return v
    try:
        return index[str(ref)]
    except KeyError:
        raise FormatError(f"unknown vertex name {ref!r}") from None


def build_graph(degree: int, vertex_names: Sequence, dart_pairs: Iterable) -> RotationGraph:
    """Build and validate a graph from unordered dart pairs.

    Vertex references inside ``dart_pairs`` may be 0-based ints or display
    names (anything non-int is looked up by ``str(ref)``).
    """
    names = [str(x) for x in vertex_names]
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    if degree < 1:
        raise PortOutOfRange(f"degree must be positive, got {degree}")
    table: list[int | None] = [None] * (n * degree)
    for (a, h), (b, k) in dart_pairs:
        v, w = _resolve(a, index, n), _resolve(b, index, n)
        for port in (h, k):
            if not 1 <= int(port) <= degree:
                raise PortOutOfRange(f"port {port} outside 1..{degree}")
        s, t = v * degree + int(h) - 1, w * degree + int(k) - 1
        if s == t:
            raise FixedDart(f"dart ({names[v]}, {h}) paired with itself")
        for slot in (s, t):
            if table[slot] is not None:
                raise DuplicateDart(f"dart ({names[slot // degree]}, {slot % degree + 1}) paired twice")
        table[s], table[t] = t, s
    missing = [i for i, t in enumerate(table) if t is None]
    if missing:
        s = missing[0]
        raise MissingDart(
            f"{len(missing)} uncovered darts, first ({names[s // degree]}, {s % degree + 1})"
        )
    return RotationGraph(degree, names, table)


def adjacency_matrix(g: RotationGraph) -> np.ndarray:
    """Integer adjacency; a loop adds 2 to its diagonal entry."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    d = g.degree
    for s, t in enumerate(g.table):
        a[s // d, t // d] += 1
    return a


def neighbors(g: RotationGraph, v: int) -> list[int]:
    """Opposite endpoints of the ``d`` darts at ``v`` (a multiset, sorted)."""
    d = g.degree
    return sorted(g.table[v * d + i] // d for i in range(d))


def connected_components(g: RotationGraph) -> list[list[int]]:
    d = g.degree
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for i in range(d):
                w = g.table[v * d + i] // d
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: RotationGraph) -> bool:
    return len(connected_components(g)) == 1


def disjoint_union(*graphs: RotationGraph) -> RotationGraph:
    """Side-by-side union; names get a ``k:`` prefix for the k-th operand."""
    if not graphs:
        raise ValueError("need at least one graph")
    d = graphs[0].degree
    if any(g.degree != d for g in graphs):
        raise ValueError("all operands must share a degree")
    names, table, offset = [], [], 0
    for k, g in enumerate(graphs):
        names.extend(f"{k}:{x}" for x in g.names)
        table.extend(t + offset for t in g.table)
        offset += g.n * d
    return RotationGraph(d, names, table)


def relabel_ports(g: RotationGraph, perms: Sequence[Sequence[int]]) -> RotationGraph:
    """Apply a port permutation per vertex: old port ``h`` at ``v`` becomes ``perms[v][h-1]``."""
    d = g.degree
    new_slot = [v * d + perms[v][h - 1] - 1 for v, h in g.darts()]
    table = [0] * len(g.table)
    for s, t in enumerate(g.table):
        table[new_slot[s]] = new_slot[t]
    return RotationGraph(d, g.names, table)


def permute_vertices(g: RotationGraph, order: Sequence[int]) -> RotationGraph:
    """Reorder vertices so that new vertex ``i`` is old vertex ``order[i]``."""
    d = g.degree
    pos = {old: new for new, old in enumerate(order)}
    if len(pos) != g.n:
        raise ValueError("order must be a permutation of the vertices")
    table = [0] * len(g.table)
    for new, old in enumerate(order):
        for i in range(d):
            t = g.table[old * d + i]
            table[new * d + i] = pos[t // d] * d + t % d
    return RotationGraph(d, [g.names[o] for o in order], table)


# -- serialization ---------------------------------------------------------


def to_dict(g: RotationGraph) -> dict:
    rot = [[v, h, w, k] for (v, h), (w, k) in g.dart_pairs()]
    return {"format": FORMAT_TAG, "degree": g.degree, "vertices": list(g.names), "rot": rot}


def to_json(g: RotationGraph) -> str:
    return json.dumps(to_dict(g), sort_keys=True, separators=(",", ":")) + "\n"


def from_dict(obj: dict) -> RotationGraph:
    if not isinstance(obj, dict) or obj.get("format") != FORMAT_TAG:
        raise FormatError(f"expected an object with format {FORMAT_TAG!r}")
    try:
        degree = obj["degree"]
        names = obj["vertices"]
        rot = obj["rot"]
    except KeyError as exc:
        raise FormatError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(degree, int) or isinstance(degree, bool):
        raise FormatError("degree must be an integer")
    pairs = []
    for entry in rot:
        if len(entry) != 4 or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry):
            raise FormatError(f"rot entries must be 4 integers, got {entry!r}")
        v, h, w, k = entry
        pairs.append(((v, h), (w, k)))
    return build_graph(degree, names, pairs)


def from_json(text: str) -> RotationGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return from_dict(obj)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: RotationGraph, name: str = "G") -> str:
    lines = [f"graph {_dot_quote(name)} {{"]
    for v in range(g.n):
        lines.append(f"  {_dot_quote(g.names[v])};")
    for (v, h), (w, k) in g.dart_pairs():
        lines.append(
            f"  {_dot_quote(g.names[v])} -- {_dot_quote(g.names[w])} [label=\"{h}:{k}\"];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
