"""Hosoya and Merrifield-Simmons indices by three independent engines.

* ``count_brute``: explicit subset enumeration (small graphs only).
* ``count_recursive``: edge/vertex deletion identities with component splitting.
* ``count_chain``: linear-time transfer-matrix sweep along the chain.
"""
from __future__ import annotations

import enum
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from .cactus_graph import AttachmentSequence, AttachmentType, CactusGraph

BRUTE_LIMIT = 26

TransferMatrix = Tuple[Tuple[int, int], Tuple[int, int]]


class IndexKind(enum.Enum):
    HOSOYA = "hosoya"
    MERRIFIELD_SIMMONS = "ms"

    @classmethod
    def parse(cls, text: str) -> "IndexKind":
        key = text.strip().lower().replace("-", "_")
        aliases = {
            "hosoya": cls.HOSOYA,
            "m": cls.HOSOYA,
            "ms": cls.MERRIFIELD_SIMMONS,
            "i": cls.MERRIFIELD_SIMMONS,
            "merrifield_simmons": cls.MERRIFIELD_SIMMONS,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown index kind {text!r}; expected 'hosoya' or 'ms'") from None


HOSOYA, MS = IndexKind.HOSOYA, IndexKind.MERRIFIELD_SIMMONS


class SizeLimitExceeded(ValueError):
    """Raised when an enumeration engine is asked for an instance beyond its bound."""


# --------------------------------------------------------------------------
# brute force
# --------------------------------------------------------------------------

def _valid_subsets(items: Sequence, conflicts: Dict[int, FrozenSet[int]]) -> Iterator[Tuple[int, ...]]:
    # lexicographic DFS over index subsets; a branch is cut as soon as the
    # newly added item conflicts with one already chosen
    chosen: List[int] = []
    blocked: Dict[int, int] = {}

    def rec(start: int) -> Iterator[Tuple[int, ...]]:
        yield tuple(chosen)
        for i in range(start, len(items)):
            if blocked.get(i, 0):
                continue
            chosen.append(i)
            for j in conflicts[i]:
                blocked[j] = blocked.get(j, 0) + 1
            yield from rec(i + 1)
            for j in conflicts[i]:
                blocked[j] -= 1
            chosen.pop()

    yield from rec(0)


def _is_matching(g: CactusGraph, edge_ids: Tuple[int, ...]) -> bool:
    seen = set()
    for e in edge_ids:
        for v in g.edges[e]:
            if v in seen:
                return False
            seen.add(v)
    return True


def _is_independent(g: CactusGraph, verts: Tuple[int, ...]) -> bool:
    s = set(verts)
    return not any(u in s and v in s for u, v in g.edges)


def count_brute(g: CactusGraph, kind: IndexKind) -> int:
    """Count matchings / independent sets by enumerating every valid subset."""
    if kind is HOSOYA:
        if g.edge_count > BRUTE_LIMIT:
            raise SizeLimitExceeded(f"brute-force Hosoya count limited to {BRUTE_LIMIT} edges, got {g.edge_count}")
        items = list(range(g.edge_count))
        conflicts = {
            i: frozenset(j for j in items if j != i and set(g.edges[i]) & set(g.edges[j]))
            for i in items
        }
        check = _is_matching
    else:
        if g.vertex_count > BRUTE_LIMIT:
            raise SizeLimitExceeded(
                f"brute-force Merrifield-Simmons count limited to {BRUTE_LIMIT} vertices, got {g.vertex_count}"
            )
        items = list(range(g.vertex_count))
        adj = g.adjacency()
        conflicts = {v: frozenset(adj[v]) for v in items}
        check = _is_independent
    total = 0
    for subset in _valid_subsets(items, conflicts):
        if not check(g, subset):
            raise AssertionError(f"enumerator produced an invalid subset {subset}")
        total += 1
    return total


# --------------------------------------------------------------------------
# deletion recursion
# --------------------------------------------------------------------------

Adj = Dict[int, FrozenSet[int]]


def _components(vertices: FrozenSet[int], adj: Adj) -> List[FrozenSet[int]]:
    left = set(vertices)
    comps = []
    while left:
        root = left.pop()
        comp = {root}
        stack = [root]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in left:
                    left.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


class _Recursive:
    def __init__(self, g: CactusGraph, kind: IndexKind) -> None:
        adj = g.adjacency()
        self.adj: Adj = {v: frozenset(ws) for v, ws in adj.items()}
        self.kind = kind
        self.memo: Dict[Tuple[FrozenSet[int], FrozenSet[Tuple[int, int]]], int] = {}

    def neighbours(self, v: int, verts: FrozenSet[int], removed: FrozenSet[Tuple[int, int]]):
        return [w for w in self.adj[v] if w in verts and (min(v, w), max(v, w)) not in removed]

    def count(self, verts: FrozenSet[int], removed: FrozenSet[Tuple[int, int]] = frozenset()) -> int:
        if not verts:
            return 1
        key = (verts, removed)
        if key in self.memo:
            return self.memo[key]
        sub_adj = {v: frozenset(self.neighbours(v, verts, removed)) for v in verts}
        comps = _components(verts, sub_adj)
        if len(comps) > 1:
            result = 1
            for comp in comps:
                result *= self.count(comp, frozenset(e for e in removed if e[0] in comp))
        else:
            v = max(verts, key=lambda u: (len(sub_adj[u]), -u))
            nbrs = sorted(sub_adj[v])
            if not nbrs:
                result = 1 if self.kind is HOSOYA else 2
            elif self.kind is HOSOYA:
                # m(G) = m(G - e) + m(G - u - w) for e = uw
                w = nbrs[0]
                e = (min(v, w), max(v, w))
                result = self.count(verts, removed | {e}) + self.count(
                    verts - {v, w}, frozenset(x for x in removed if v not in x and w not in x)
                )
            else:
                # i(G) = i(G - v) + i(G - N[v])
                result = self.count(verts - {v}, removed) + self.count(verts - {v} - set(nbrs), removed)
        self.memo[key] = result
        return result


def count_recursive(g: CactusGraph, kind: IndexKind) -> int:
    """Count via m(G) = m(G-e) + m(G-u-v) and i(G) = i(G-v) + i(G-N[v])."""
    return _Recursive(g, kind).count(frozenset(range(g.vertex_count)))


# --------------------------------------------------------------------------
# transfer matrices
# --------------------------------------------------------------------------

_HEXAGON = CactusGraph(vertex_count=6, edges=tuple((i, (i + 1) % 6) for i in range(6)))


@lru_cache(maxsize=None)
def hexagon_transfer(d: AttachmentType, kind: IndexKind) -> TransferMatrix:
    """Counts over one hexagon split by the status of vertex 0 and vertex ``d``.

    Status 1 means covered by a hexagon edge (Hosoya) or in the set (MS).
    """
    table = [[0, 0], [0, 0]]
    exit_v = d.distance
    if kind is HOSOYA:
        edges = _HEXAGON.edges
        conflicts = {i: frozenset(j for j in range(6) if j != i and set(edges[i]) & set(edges[j])) for i in range(6)}
        for subset in _valid_subsets(range(6), conflicts):
            covered = {v for e in subset for v in edges[e]}
            table[0 in covered][exit_v in covered] += 1
    else:
        conflicts = {v: frozenset(((v - 1) % 6, (v + 1) % 6)) for v in range(6)}
        for subset in _valid_subsets(range(6), conflicts):
            table[0 in subset][exit_v in subset] += 1
    return (tuple(table[0]), tuple(table[1]))


def _step(vec: Tuple[int, int], t: TransferMatrix, kind: IndexKind) -> Tuple[int, int]:
    v0, v1 = vec
    if kind is HOSOYA:
        # a cut vertex already covered on the left must stay uncovered on the right
        return (v0 * (t[0][0] + t[1][0]) + v1 * t[0][0], v0 * (t[0][1] + t[1][1]) + v1 * t[0][1])
    return (v0 * t[0][0] + v1 * t[1][0], v0 * t[0][1] + v1 * t[1][1])


def _first_hexagon(kind: IndexKind) -> Tuple[int, int]:
    # status split of the first hexagon's cut vertex: (8, 10) matchings, (13, 5) independent sets
    t = hexagon_transfer(AttachmentType.ORTHO, kind)
    return (t[0][0] + t[0][1], t[1][0] + t[1][1])


def chain_vector(seq: AttachmentSequence, kind: IndexKind) -> Tuple[int, int]:
    """Counts of R_n split by the status of the last hexagon's entry cut vertex."""
    if seq.n == 0:
        return (1, 0)
    vec = _first_hexagon(kind)
    for choice in seq.choices:
        vec = _step(vec, hexagon_transfer(choice, kind), kind)
    return vec


def count_chain(seq: AttachmentSequence, kind: IndexKind) -> int:
    """Exact index of ``build_chain(seq)`` in O(n) big-integer operations."""
    if seq.n == 0:
        return 1
    vec = chain_vector(seq, kind)
    if seq.n == 1:
        return sum(vec)
    last = hexagon_transfer(AttachmentType.ORTHO, kind)
    if kind is HOSOYA:
        return vec[0] * 18 + vec[1] * sum(last[0])
    return vec[0] * sum(last[0]) + vec[1] * sum(last[1])


def count_graph(g: CactusGraph, kind: IndexKind, engine: str = "recursive") -> int:
    if engine == "brute":
        return count_brute(g, kind)
    if engine == "recursive":
        return count_recursive(g, kind)
    raise ValueError(f"engine {engine!r} works on sequences, not graphs")
