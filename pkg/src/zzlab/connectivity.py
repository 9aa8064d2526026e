"""A sufficient condition for connectedness of zig-zag products.

Each vertex ``h`` of the small factor gives a neighbour set ``N_h``; two sets
are joined when they intersect.  If the resulting graph is connected, then
every zig-zag product with that small factor (and a connected big factor) is
connected.  The converse fails, e.g. for the 4-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import RotationGraph


@dataclass
class NeighborhoodGraph:
    n: int
    edges: list[tuple[int, int]] = field(default_factory=list)
    neighbor_sets: list[frozenset[int]] = field(default_factory=list)

    def components(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            parent[find(a)] = find(b)
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "neighbor_sets": [sorted(s) for s in self.neighbor_sets],
            "components": self.components(),
            "connected": self.is_connected(),
        }


def neighbor_set(g: RotationGraph, v: int) -> frozenset[int]:
    # a loop at v puts v in its own set
    return frozenset(g.rot(v, h)[0] for h in range(1, g.degree + 1))


def neighborhood_graph(g2: RotationGraph) -> NeighborhoodGraph:
    sets = [neighbor_set(g2, v) for v in range(g2.n)]
    edges = [(h, k) for h in range(g2.n) for k in range(h + 1, g2.n) if sets[h] & sets[k]]
    return NeighborhoodGraph(g2.n, edges, sets)


def zigzag_connected_sufficient(g2: RotationGraph) -> bool:
    return neighborhood_graph(g2).is_connected()
