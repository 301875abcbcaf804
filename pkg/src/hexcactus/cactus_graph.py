"""Hexagonal cactus chains and their pendant-path variants.

Every hexagon is stored as a 6-tuple in clockwise order starting at its
entry cut vertex (the vertex it shares with the previous hexagon; for the
first hexagon, the vertex it shares with the second). A hexagon attached
at distance ``d`` is glued to position ``d`` of the previous tuple.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Edge = Tuple[int, int]


class AttachmentType(enum.Enum):
    ORTHO = 1
    META = 2
    PARA = 3

    @property
    def distance(self) -> int:
        return self.value

    @property
    def code(self) -> str:
        return self.name[0].lower()

    @classmethod
    def from_code(cls, code: str) -> "AttachmentType":
        try:
            return _CODES[code.lower()]
        except KeyError:
            raise ValueError(f"unknown attachment code {code!r}; expected one of o, m, p") from None

    @classmethod
    def from_distance(cls, distance: int) -> "AttachmentType":
        return cls(distance)


_CODES = {t.code: t for t in AttachmentType}
ORTHO, META, PARA = AttachmentType.ORTHO, AttachmentType.META, AttachmentType.PARA


class AuxVariant(enum.Enum):
    """Which vertex of the pendant path x1..x5 is glued to the last hexagon."""

    PRIME = 0  # x1
    TILDE = 1  # x2
    HAT = 2  # x3

    @property
    def path_index(self) -> int:
        return self.value


@dataclass(frozen=True)
class AttachmentSequence:
    """One realization of the random model: ``n`` hexagons and ``n - 2`` choices."""

    n: int
    choices: Tuple[AttachmentType, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("number of hexagons must be non-negative")
        object.__setattr__(self, "choices", tuple(self.choices))
        expected = max(self.n - 2, 0)
        if len(self.choices) != expected:
            raise ValueError(
                f"a chain of {self.n} hexagons needs {expected} attachment choices, "
                f"got {len(self.choices)}"
            )
        for c in self.choices:
            if not isinstance(c, AttachmentType):
                raise TypeError(f"choices must be AttachmentType, got {c!r}")

    @classmethod
    def from_string(cls, text: str, n: Optional[int] = None) -> "AttachmentSequence":
        """Parse a string over ``o``/``m``/``p``.

        Without ``n`` the chain length is ``len(text) + 2``, which is only
        unambiguous for non-empty strings.
        """
        choices = tuple(AttachmentType.from_code(ch) for ch in text.strip())
        if n is None:
            if not choices:
                raise ValueError("an empty sequence string does not determine n (0, 1 or 2); pass n explicitly")
            n = len(choices) + 2
        return cls(n, choices)

    def to_string(self) -> str:
        return "".join(c.code for c in self.choices)

    def __str__(self) -> str:
        return self.to_string()


def reverse_sequence(seq: AttachmentSequence) -> AttachmentSequence:
    return AttachmentSequence(seq.n, tuple(reversed(seq.choices)))


@dataclass(frozen=True)
class CactusGraph:
    vertex_count: int
    edges: Tuple[Edge, ...]
    hexagons: Tuple[Tuple[int, ...], ...] = ()
    cut_vertices: Tuple[int, ...] = ()
    terminal_cut: Optional[int] = None
    pendant: Tuple[int, ...] = ()

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> Dict[int, List[int]]:
        adj: Dict[int, List[int]] = {v: [] for v in range(self.vertex_count)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count


def _cycle_edges(cycle: Sequence[int]) -> List[Edge]:
    k = len(cycle)
    return [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


class _Builder:
    def __init__(self) -> None:
        self.count = 0
        self.edges: List[Edge] = []

    def fresh(self, k: int) -> List[int]:
        ids = list(range(self.count, self.count + k))
        self.count += k
        return ids

    def add_edges(self, edges: Iterable[Edge]) -> None:
        self.edges.extend(edges)


def _build(seq: AttachmentSequence) -> Tuple[_Builder, List[Tuple[int, ...]], List[int]]:
    b = _Builder()
    hexagons: List[Tuple[int, ...]] = []
    cuts: List[int] = []
    for k in range(seq.n):
        if k == 0:
            hexagon = tuple(b.fresh(6))
        else:
            # second hexagon shares the first's position 0; later ones follow the choices
            pos = 0 if k == 1 else seq.choices[k - 2].distance
            entry = hexagons[-1][pos]
            cuts.append(entry)
            hexagon = (entry, *b.fresh(5))
        hexagons.append(hexagon)
        b.add_edges(_cycle_edges(hexagon))
    return b, hexagons, cuts


def build_chain(seq: AttachmentSequence) -> CactusGraph:
    """Realize the chain R_n described by ``seq``."""
    b, hexagons, cuts = _build(seq)
    return CactusGraph(
        vertex_count=b.count,
        edges=tuple(b.edges),
        hexagons=tuple(hexagons),
        cut_vertices=tuple(cuts),
        terminal_cut=hexagons[-1][0] if hexagons else None,
    )


def build_aux(seq: AttachmentSequence, pendant: AttachmentType, variant: AuxVariant) -> CactusGraph:
    """R_n with a path x1..x5 glued to the last hexagon.

    Path vertex ``variant.path_index`` is identified with the vertex of the
    last hexagon at clockwise distance ``pendant.distance`` from that
    hexagon's entry cut vertex. For ``n = 0`` the result is the bare path.
    """
    b, hexagons, cuts = _build(seq)
    path: List[int] = []
    for i in range(5):
        if hexagons and i == variant.path_index:
            path.append(hexagons[-1][pendant.distance])
        else:
            path.append(b.fresh(1)[0])
    b.add_edges((path[i], path[i + 1]) for i in range(4))
    return CactusGraph(
        vertex_count=b.count,
        edges=tuple(b.edges),
        hexagons=tuple(hexagons),
        cut_vertices=tuple(cuts),
        terminal_cut=hexagons[-1][0] if hexagons else None,
        pendant=tuple(path),
    )


def path_graph(k: int) -> CactusGraph:
    return CactusGraph(vertex_count=k, edges=tuple((i, i + 1) for i in range(k - 1)))


def to_dot(g: CactusGraph, name: str = "cactus") -> str:
    cut = set(g.cut_vertices)
    lines = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        if v in cut:
            lines.append(f'  v{v} [cut="true", shape=doublecircle];')
        else:
            lines.append(f"  v{v};")
    for u, v in g.edges:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
