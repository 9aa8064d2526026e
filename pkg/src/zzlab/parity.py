"""Parity blocks of even-regular bi-labelled graphs and what they control.

Port ``h`` has parity ``h % 2`` (1 = odd, 0 = even).  A *state* is a pair
``(v, p)``: standing at ``v`` and about to leave on a port of parity ``p``.
Leaving on ``(v, h)`` and arriving at ``(w, k)`` moves to state
``(w, k % 2)``.  This relation is symmetric, so its connected components are
well defined; each one is a parity block.  A vertex whose two states fall in
the same block is *odden* there.

For a graph of degree ``2d`` each block corresponds to one connected component
of ``G (z) C_2d``, and the isomorphism type of that component is captured by
the smaller pseudo-replacement graph built here.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .core import RotationGraph, connected_components
from .errors import (
    ConditionFailure,
    CorrespondenceViolated,
    DegreeNot4,
    NotPartitionPreserving,
    OddDegree,
)
from .generators import cycle_graph
from .products import zigzag_product

ODD, EVEN = 1, 0
State = tuple[int, int]


class Parity(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"
    ODDEN = "odden"


def port_parity(h: int) -> int:
    return h % 2


def parity_name(p: int) -> str:
    return "odd" if p == ODD else "even"


@dataclass
class ParityBlock:
    id: int
    states: frozenset[State]
    members: dict[int, Parity]
    darts: frozenset[tuple[int, int]]

    @property
    def vertices(self) -> list[int]:
        return sorted(self.members)

    @property
    def odden(self) -> list[int]:
        return [v for v in self.vertices if self.members[v] is Parity.ODDEN]

    @property
    def single(self) -> list[int]:
        return [v for v in self.vertices if self.members[v] is not Parity.ODDEN]

    def parities_of(self, v: int) -> list[int]:
        """Port parities ``v`` uses inside this block, odd first."""
        return [p for p in (ODD, EVEN) if (v, p) in self.states]

    def __len__(self) -> int:
        return len(self.members)

    def to_dict(self, g: RotationGraph | None = None) -> dict:
        name = (lambda v: g.names[v]) if g is not None else str
        return {
            "id": self.id,
            "size": len(self),
            "parities": {name(v): self.members[v].value for v in self.vertices},
            "odden": [name(v) for v in self.odden],
            "darts": len(self.darts),
        }


@dataclass
class ParityDecomposition:
    graph: RotationGraph
    blocks: list[ParityBlock]
    state_block: dict[State, int] = field(default_factory=dict)

    def block_of_dart(self, v: int, h: int) -> ParityBlock:
        return self.blocks[self.state_block[(v, port_parity(h))]]

    def to_dict(self) -> dict:
        return {
            "blocks": [b.to_dict(self.graph) for b in self.blocks],
            "sizes": [len(b) for b in self.blocks],
        }


def _half_degree(g: RotationGraph) -> int:
    if g.degree % 2:
        raise OddDegree(f"parity blocks need even degree, got {g.degree}")
    return g.degree // 2


def state_successors(g: RotationGraph, state: State) -> list[State]:
    v, p = state
    out = []
    for h in range(2 - p, g.degree + 1, 2):
        w, k = g.rot(v, h)
        out.append((w, port_parity(k)))
    return out


def _make_block(g: RotationGraph, bid: int, states: set[State]) -> ParityBlock:
    members: dict[int, Parity] = {}
    for v in sorted({v for v, _ in states}):
        has_odd, has_even = (v, ODD) in states, (v, EVEN) in states
        members[v] = Parity.ODDEN if has_odd and has_even else (Parity.ODD if has_odd else Parity.EVEN)
    darts = frozenset((v, h) for v, h in g.darts() if (v, port_parity(h)) in states)
    return ParityBlock(bid, frozenset(states), members, darts)


def parity_block_from(g: RotationGraph, v: int, p: int) -> ParityBlock:
    """The block reached from ``(v, p)`` by parity-preserving walks."""
    _half_degree(g)
    seen = {(v, p)}
    queue = deque(seen)
    while queue:
        for nxt in state_successors(g, queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return _make_block(g, -1, seen)


def parity_decomposition(g: RotationGraph) -> ParityDecomposition:
    _half_degree(g)
    state_block: dict[State, int] = {}
    groups: list[set[State]] = []
    for v in range(g.n):
        for p in (ODD, EVEN):
            if (v, p) in state_block:
                continue
            bid = len(groups)
            comp = {(v, p)}
            state_block[(v, p)] = bid
            queue = deque([(v, p)])
            while queue:
                for nxt in state_successors(g, queue.popleft()):
                    if nxt not in state_block:
                        state_block[nxt] = bid
                        comp.add(nxt)
                        queue.append(nxt)
            groups.append(comp)
    blocks = [_make_block(g, i, s) for i, s in enumerate(groups)]
    return ParityDecomposition(g, blocks, state_block)


# -- blocks versus components of G (z) C_2d -----------------------------------


@dataclass
class Correspondence:
    product: RotationGraph
    pairs: list[tuple[int, int]]  # (block id, component index)
    components: list[list[int]]

    def to_dict(self, decomposition: ParityDecomposition) -> dict:
        rows = []
        for bid, ci in self.pairs:
            rows.append({
                "block": bid,
                "block_size": len(decomposition.blocks[bid]),
                "component": ci,
                "component_size": len(self.components[ci]),
                "vertices": [self.product.names[x] for x in self.components[ci]],
            })
        return {"pairs": rows, "blocks": len(decomposition.blocks),
                "components": len(self.components)}


def expected_component(g: RotationGraph, block: ParityBlock) -> list[int]:
    """Product vertices ``(v, j)`` predicted for ``block`` (``j`` a 0-based cycle index).

    Cycle vertex ``j`` stands for port ``j + 1``; the block claims the ports
    whose parity is opposite to the parity ``v`` uses inside the block.
    """
    cyc = g.degree
    out = []
    for v in block.vertices:
        for p in block.parities_of(v):
            for j in range(cyc):
                if port_parity(j + 1) != p:
                    out.append(v * cyc + j)
    return sorted(out)


def block_component_correspondence(g: RotationGraph,
                                   decomposition: ParityDecomposition | None = None) -> Correspondence:
    dec = decomposition or parity_decomposition(g)
    prod = zigzag_product(g, cycle_graph(g.degree), allow_disconnected=True)
    comps = connected_components(prod)
    where = {tuple(c): i for i, c in enumerate(comps)}
    pairs = []
    for block in dec.blocks:
        want = tuple(expected_component(g, block))
        if want not in where:
            raise CorrespondenceViolated(f"block {block.id} does not match any component")
        pairs.append((block.id, where[want]))
    if len(comps) != len(dec.blocks) or len({c for _, c in pairs}) != len(pairs):
        raise CorrespondenceViolated(
            f"{len(dec.blocks)} blocks but {len(comps)} components"
        )
    return Correspondence(prod, pairs, comps)


# -- pseudo-replacement graphs ---------------------------------------------------


def label_position(h: int) -> int:
    return (h - 1) // 2


def label_at(parity: int, t: int) -> int:
    return 2 * t + 1 if parity == ODD else 2 * t + 2


@dataclass
class PseudoReplacement:
    vertices: list[tuple[int, int]]
    adjacency: np.ndarray

    def index(self) -> dict[tuple[int, int], int]:
        return {x: i for i, x in enumerate(self.vertices)}


def pseudo_replacement(g: RotationGraph, block: ParityBlock) -> PseudoReplacement:
    d = _half_degree(g)
    verts = [(v, label_at(p, t)) for v in block.vertices for p in block.parities_of(v) for t in range(d)]
    pos = {x: i for i, x in enumerate(verts)}
    a = np.zeros((len(verts), len(verts)), dtype=np.int64)

    def join(x: int, y: int) -> None:
        a[x, y] += 1
        a[y, x] += 1

    if d >= 2:
        for v in block.vertices:
            for p in block.parities_of(v):
                for t in range(d):
                    join(pos[(v, label_at(p, t))], pos[(v, label_at(p, (t + 1) % d))])
    for (v, h) in sorted(block.darts):
        w, k = g.rot(v, h)
        if (v, h) < (w, k):
            join(pos[(v, h)], pos[(w, k)])
    return PseudoReplacement(verts, a)


# -- spanning paths in 4-regular graphs ------------------------------------------


@dataclass
class SpanningPath:
    vertices: list[int]
    darts: list[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.vertices)


def spanning_path(g: RotationGraph, block: ParityBlock,
                  start: tuple[int, int] | None = None) -> SpanningPath:
    """Closed walk through ``block``: arrive on port ``k``, leave on the other port of parity ``k``.

    ``start`` is a departing dart; the default is the smallest dart of the block.
    Odden vertices are visited twice, the others once.
    """
    if g.degree != 4:
        raise DegreeNot4(f"spanning paths need degree 4, got {g.degree}")
    first = start if start is not None else min(block.darts)
    if first not in block.darts:
        raise ValueError(f"dart {first} is not in block {block.id}")
    verts, darts = [], []
    v, h = first
    while True:
        verts.append(v)
        darts.append((v, h))
        w, k = g.rot(v, h)
        v, h = w, (k + 1) % 4 + 1
        if (v, h) == first:
            break
    return SpanningPath(verts, darts)


# -- blocks of complete graphs ------------------------------------------------


def congruenze_feasible(d: int, i: int, p: int) -> bool:
    """Can a block of a bi-labelled ``K_{2d+1}`` have ``p`` vertices, ``i`` of them odden?"""
    if i > 0:
        if p != 2 * d + 1:
            return False
        return i == 2 * d + 1 or (i <= d and (2 * d + 1 - i) * (d - i) % 2 == 0)
    return p >= d + 1 and p * d % 2 == 0


def congruenze_statement(d: int, i: int, p: int) -> bool:
    """The weaker ``(i-1)(d-1)`` parity test, kept for comparison."""
    if i > 0:
        return p == 2 * d + 1 and (i - 1) * (d - 1) % 2 == 0
    return p >= d + 1 and p * d % 2 == 0


@lru_cache(maxsize=None)
def _realizable(degrees: tuple[int, ...]) -> bool:
    if not degrees:
        return True
    first, rest = degrees[0], degrees[1:]
    if first > len(rest):
        return False
    for chosen in itertools.combinations(range(len(rest)), first):
        if any(rest[c] == 0 for c in chosen):
            continue
        residual = list(rest)
        for c in chosen:
            residual[c] -= 1
        if _realizable(tuple(sorted(residual, reverse=True))):
            return True
    return False


def degree_sequence_realizable(degrees) -> bool:
    """Exhaustive search for a simple graph with the given degree sequence."""
    return _realizable(tuple(sorted(degrees, reverse=True)))


def block_profile_oracle(d: int, i: int, p: int) -> bool:
    """A block on ``p`` vertices of ``K_{2d+1}`` with ``i`` full-degree members.

    Odden members have degree ``2d`` inside the block, the others ``d``; the
    block is a simple subgraph, so the question is realisability of that
    degree sequence on ``p`` vertices.
    """
    if p < 1 or not 0 <= i <= p or p > 2 * d + 1:
        return False
    return degree_sequence_realizable([2 * d] * i + [d] * (p - i))


# -- explicit isomorphisms between pseudo-replacements ---------------------------


@dataclass(frozen=True)
class CycleAutomorphism:
    """Dihedral symmetry ``t -> (+-t) + shift`` of the positions ``0..d-1`` of a label class."""

    shift: int = 0
    reflect: bool = False

    def apply(self, t: int, d: int) -> int:
        return ((-t if self.reflect else t) + self.shift) % d

    def compose(self, other: CycleAutomorphism, d: int) -> CycleAutomorphism:
        """``self`` after ``other``."""
        sign = -1 if self.reflect else 1
        return CycleAutomorphism((sign * other.shift + self.shift) % d, self.reflect != other.reflect)

    def inverse(self, d: int) -> CycleAutomorphism:
        if self.reflect:
            return self
        return CycleAutomorphism(-self.shift % d, False)

    def permutation(self, d: int) -> tuple[int, ...]:
        return tuple(self.apply(t, d) for t in range(d))

    @staticmethod
    def elements(d: int) -> list[CycleAutomorphism]:
        """One representative per distinct permutation of ``0..d-1``."""
        seen, out = set(), []
        for reflect in (False, True):
            for shift in range(d):
                phi = CycleAutomorphism(shift, reflect)
                perm = phi.permutation(d)
                if perm not in seen:
                    seen.add(perm)
                    out.append(phi)
        return out


@dataclass
class BlockIsomorphism:
    mapping: dict[tuple[int, int], tuple[int, int]]

    def __call__(self, u: int, k: int) -> tuple[int, int]:
        return self.mapping[(u, k)]


def _target_parity(u: int, p: int, f: dict[int, int], block_b: ParityBlock,
                   odden_a: set[int], eps: dict[int, bool]) -> int:
    if u in odden_a:
        return p ^ 1 if eps.get(u, False) else p
    return block_b.parities_of(f[u])[0]


def _condition_number(u: int, v: int, odden: set[int]) -> int:
    return 1 + (u in odden) + (v in odden)


def isoclass_build(g_a: RotationGraph, block_a: ParityBlock,
                   g_b: RotationGraph, block_b: ParityBlock,
                   f: dict[int, int],
                   g_maps: dict[tuple[int, int], CycleAutomorphism],
                   eps: dict[int, bool] | None = None) -> BlockIsomorphism:
    """Assemble the vertex map of pseudo-replacements from block data and check it.

    ``f`` sends block vertices of ``block_a`` to those of ``block_b``;
    ``g_maps[(u, p)]`` acts on the positions of the parity-``p`` labels at
    ``u`` (missing entries mean the identity); ``eps[u]`` swaps the two label
    classes of an odden ``u``.  Every block dart is checked against the
    rotation map of ``g_b`` and the first failure raises ``ConditionFailure``.
    """
    eps = eps or {}
    d = _half_degree(g_a)
    if g_b.degree != g_a.degree:
        raise NotPartitionPreserving("graphs have different degrees")
    odden_a, odden_b = set(block_a.odden), set(block_b.odden)
    if sorted(f) != block_a.vertices or sorted(f.values()) != block_b.vertices:
        raise NotPartitionPreserving("f is not a bijection between the block vertex sets")
    for u, fu in f.items():
        if (u in odden_a) != (fu in odden_b):
            raise NotPartitionPreserving(f"f sends {u} to {fu} across the degree classes")

    ident = CycleAutomorphism()
    mapping = {}
    for u in block_a.vertices:
        for p in block_a.parities_of(u):
            phi = g_maps.get((u, p), ident)
            tp = _target_parity(u, p, f, block_b, odden_a, eps)
            for t in range(d):
                mapping[(u, label_at(p, t))] = (f[u], label_at(tp, phi.apply(t, d)))

    for (u, h) in sorted(block_a.darts):
        v, k = g_a.rot(u, h)
        fu, fh = mapping[(u, h)]
        got = g_b.rot(fu, fh)
        want = mapping[(v, k)]
        if got != want:
            raise ConditionFailure(_condition_number(u, v, odden_a), (u, h),
                                   f"image rotates to {got}, expected {want}")

    r_a, r_b = pseudo_replacement(g_a, block_a), pseudo_replacement(g_b, block_b)
    idx_b = r_b.index()
    perm = [idx_b[mapping[x]] for x in r_a.vertices]
    if sorted(perm) != list(range(len(r_b.vertices))):
        raise NotPartitionPreserving("image is not a bijection onto the target pseudo-replacement")
    if not (r_b.adjacency[np.ix_(perm, perm)] == r_a.adjacency).all():
        raise AssertionError("assembled map is not a graph isomorphism")
    return BlockIsomorphism(mapping)


def search_isoclass_assignment(g_a: RotationGraph, block_a: ParityBlock,
                               g_b: RotationGraph, block_b: ParityBlock,
                               f: dict[int, int]):
    """Backtracking over dihedral choices and class swaps for a fixed ``f``.

    Returns ``(g_maps, eps)`` accepted by :func:`isoclass_build`, or ``None``.
    """
    d = _half_degree(g_a)
    odden_a = set(block_a.odden)
    keys = sorted(block_a.states, key=lambda s: (s[0], -s[1]))
    options = CycleAutomorphism.elements(d)
    chosen: dict[State, tuple[bool, CycleAutomorphism]] = {}

    def image(u: int, h: int) -> tuple[int, int] | None:
        key = (u, port_parity(h))
        if key not in chosen:
            return None
        swap, phi = chosen[key]
        tp = _target_parity(u, key[1], f, block_b, odden_a, {u: swap})
        return f[u], label_at(tp, phi.apply(label_position(h), d))

    def consistent(key: State) -> bool:
        u, p = key
        for h in range(2 - p, g_a.degree + 1, 2):
            v, k = g_a.rot(u, h)
            mine, theirs = image(u, h), image(v, k)
            if theirs is not None and g_b.rot(*mine) != theirs:
                return False
        return True

    def extend(pos: int) -> bool:
        if pos == len(keys):
            return True
        key = keys[pos]
        u = key[0]
        other = (u, key[1] ^ 1)
        if u not in odden_a:
            swaps = (False,)
        elif other in chosen:
            swaps = (chosen[other][0],)
        else:
            swaps = (False, True)
        for swap in swaps:
            for phi in options:
                chosen[key] = (swap, phi)
                if consistent(key) and extend(pos + 1):
                    return True
                del chosen[key]
        return False

    if not extend(0):
        return None
    g_maps = {key: phi for key, (_, phi) in chosen.items()}
    eps = {u: chosen[(u, ODD)][0] for u in odden_a}
    return g_maps, eps
