"""
Building cactus chains and counting them
========================================

A chain is described by the attachment choices of its internal hexagons.
We build one, export it, and count it with all three engines.
"""

from hexcactus import AttachmentSequence, IndexKind, build_chain, count_brute, count_chain, count_recursive, to_dot
from hexcactus.exact_count import hexagon_transfer
from hexcactus.cactus_graph import PARA

# four hexagons: the second is left para, the third ortho
seq = AttachmentSequence.from_string("po")
g = build_chain(seq)
print(f"{seq.n} hexagons, {g.vertex_count} vertices, {g.edge_count} edges, cut vertices {g.cut_vertices}")

# %%
# The three engines agree. Brute force stops at 26 edges/vertices; the
# transfer-matrix sweep handles thousands of hexagons.
for kind in IndexKind:
    print(kind.value, count_brute(g, kind), count_recursive(g, kind), count_chain(seq, kind))

# %%
# The transfer matrix of a para hexagon, split by whether the entry and
# exit cut vertices are used.
print(hexagon_transfer(PARA, IndexKind.MERRIFIELD_SIMMONS))
print(hexagon_transfer(PARA, IndexKind.HOSOYA))

long_seq = AttachmentSequence(500, (PARA,) * 498)
print("digits in the Hosoya index of a 500-hexagon para chain:", len(str(count_chain(long_seq, IndexKind.HOSOYA))))

# %%
# DOT output can be piped to graphviz: ``python 01_build_and_count.py | dot -Tpng``
print(to_dot(build_chain(AttachmentSequence.from_string("m", n=3))))
