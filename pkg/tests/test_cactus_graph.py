import re

import pytest
from hypothesis import given

from hexcactus.cactus_graph import (
    META,
    ORTHO,
    PARA,
    AttachmentSequence,
    AttachmentType,
    AuxVariant,
    build_aux,
    build_chain,
    reverse_sequence,
    to_dot,
)

from conftest import sequences


def edge_set(g):
    return {frozenset(e) for e in g.edges}


def cyclic_distance(hexagon, u, v):
    i, j = hexagon.index(u), hexagon.index(v)
    d = abs(i - j)
    return min(d, 6 - d)


def test_attachment_kind_distance_bijection():
    assert [t.distance for t in AttachmentType] == [1, 2, 3]
    assert {AttachmentType.from_distance(d) for d in (1, 2, 3)} == set(AttachmentType)
    assert [AttachmentType.from_code(c) for c in "OmP"] == [ORTHO, META, PARA]


@pytest.mark.parametrize("n, k", [(0, 0), (1, 0), (2, 0), (3, 1), (7, 5)])
def test_sequence_length_invariant(n, k):
    AttachmentSequence(n, (ORTHO,) * k)
    with pytest.raises(ValueError):
        AttachmentSequence(n, (ORTHO,) * (k + 1))


def test_sequence_string_round_trip():
    s = AttachmentSequence.from_string("PoM")
    assert s.n == 5 and s.choices == (PARA, ORTHO, META)
    assert str(s) == "pom"
    with pytest.raises(ValueError):
        AttachmentSequence.from_string("")
    assert AttachmentSequence.from_string("", n=1).n == 1
    with pytest.raises(ValueError):
        AttachmentSequence.from_string("x", n=3)


@pytest.mark.parametrize(
    "text, expected", [("op", "po"), ("", ""), ("m", "m")]
)
def test_reverse_sequence(text, expected):
    n = len(text) + 2
    r = reverse_sequence(AttachmentSequence.from_string(text, n))
    assert r.n == n and r.to_string() == expected


def test_small_chains():
    assert build_chain(AttachmentSequence(0)).vertex_count == 0
    g1 = build_chain(AttachmentSequence(1))
    assert (g1.vertex_count, g1.edge_count, len(g1.hexagons)) == (6, 6, 1)
    g2 = build_chain(AttachmentSequence(2))
    assert (g2.vertex_count, g2.edge_count, len(g2.cut_vertices)) == (11, 12, 1)


def test_para_three_chain_matches_hand_built_adjacency():
    g = build_chain(AttachmentSequence(3, (PARA,)))
    # first hexagon 0..5; second shares 0 and adds 6..10; third is glued opposite 0 on the second (vertex 8)
    cycles = [(0, 1, 2, 3, 4, 5), (0, 6, 7, 8, 9, 10), (8, 11, 12, 13, 14, 15)]
    expected = {frozenset((c[i], c[(i + 1) % 6])) for c in cycles for i in range(6)}
    assert (g.vertex_count, g.edge_count) == (16, 18)
    assert edge_set(g) == expected
    assert g.cut_vertices == (0, 8)
    assert cyclic_distance(g.hexagons[1], 0, 8) == 3


@given(sequences(9))
def test_chain_structure(seq):
    g = build_chain(seq)
    if seq.n == 0:
        assert g.vertex_count == 0
        return
    assert g.vertex_count == 5 * seq.n + 1
    assert g.edge_count == 6 * seq.n
    assert len(edge_set(g)) == g.edge_count
    assert g.is_connected()
    # every edge on exactly one hexagon
    seen = []
    for h in g.hexagons:
        seen += [frozenset((h[i], h[(i + 1) % 6])) for i in range(6)]
    assert sorted(map(sorted, seen)) == sorted(map(sorted, edge_set(g)))
    for i, h in enumerate(g.hexagons):
        for j, k in enumerate(g.hexagons[i + 1:], start=i + 1):
            shared = set(h) & set(k)
            assert len(shared) == (1 if j == i + 1 else 0)
    for idx, choice in enumerate(seq.choices):
        internal = g.hexagons[idx + 1]
        assert cyclic_distance(internal, g.cut_vertices[idx], g.cut_vertices[idx + 1]) == choice.distance


@pytest.mark.parametrize("pendant", list(AttachmentType))
@pytest.mark.parametrize("variant", list(AuxVariant))
def test_aux_at_zero_is_p5(pendant, variant):
    g = build_aux(AttachmentSequence(0), pendant, variant)
    assert (g.vertex_count, g.edge_count) == (5, 4)
    assert edge_set(g) == {frozenset((i, i + 1)) for i in range(4)}


@pytest.mark.parametrize(
    "pendant, variant, glued_index",
    [(PARA, AuxVariant.HAT, 2), (ORTHO, AuxVariant.PRIME, 0), (META, AuxVariant.TILDE, 1)],
)
def test_aux_on_one_hexagon(pendant, variant, glued_index):
    g = build_aux(AttachmentSequence(1), pendant, variant)
    assert (g.vertex_count, g.edge_count) == (6 + 5 - 1, 6 + 4)
    hexagon = g.hexagons[0]
    glued = g.pendant[glued_index]
    assert glued in hexagon
    assert cyclic_distance(hexagon, hexagon[0], glued) == pendant.distance
    assert sum(v in hexagon for v in g.pendant) == 1


def test_aux_glues_to_last_hexagon():
    seq = AttachmentSequence(4, (META, ORTHO))
    g = build_aux(seq, META, AuxVariant.TILDE)
    last = g.hexagons[-1]
    assert g.pendant[1] == last[2]
    assert g.terminal_cut == last[0] == g.cut_vertices[-1]


def _dot_lines(text):
    nodes = [l for l in text.splitlines() if re.match(r"^\s+v\d+( \[.*\])?;$", l)]
    edges = [l for l in text.splitlines() if "--" in l]
    return nodes, edges


def test_dot_export():
    empty = to_dot(build_chain(AttachmentSequence(0)))
    assert _dot_lines(empty) == ([], [])
    assert empty.startswith("graph ") and empty.rstrip().endswith("}")
    nodes, edges = _dot_lines(to_dot(build_chain(AttachmentSequence(1))))
    assert (len(nodes), len(edges)) == (6, 6)
    nodes, edges = _dot_lines(to_dot(build_chain(AttachmentSequence(2))))
    assert (len(nodes), len(edges)) == (11, 12)
    assert sum('cut="true"' in l for l in nodes) == 1
