"""
Cells of ghost partitions and how they meet
============================================

"""

from opengw.lattice import (
    BOUNDARY,
    DISK,
    Attachment,
    BubbleTree,
    Configuration,
    Piece,
    basic_degenerations,
    collision_configuration,
    config_dimension,
    containing_cells,
    gluing_audit,
    lattice_graph,
)
from opengw.partitions import cell_summary, enumerate_partitions

# every way to split genus 3 and one boundary circle into ghosts
for lam in enumerate_partitions(3, 1):
    s = cell_summary(lam)
    print(f"{str(lam):<22} dim {s.dim:>2}  glue {s.gluing_rank}  ob {s.ob_rank}")

# the 1,2 cell and its neighbours, with the dimension of each meeting stratum
lam = enumerate_partitions(3, 1)[1]
print()
print("from", lam)
for move, new in basic_degenerations(lam):
    c = collision_configuration(lam, move)
    print(f"  {move.kind:<3} -> {str(new):<14} meet in {c}  dim {config_dimension(c)}")

# both tori on their own boundary disk bubbles: a stratum in four cells
quad = Configuration((3, 1), (
    Attachment(BOUNDARY, BubbleTree(DISK, (BubbleTree(Piece(1)),))),
    Attachment(BOUNDARY, BubbleTree(DISK, (BubbleTree(Piece(2)),))),
))
print()
print(quad, "dim", config_dimension(quad), "audit", gluing_audit(quad))
print(sorted(str(x) for x in containing_cells(quad)))

# the whole lattice, as Graphviz
G = lattice_graph(3, 1)
print()
print(len(G.vertices), "cells", len(G.edges), "edges, connected:", G.connected)
print(G.to_dot())
