"""
Extremal families and the moves between them
============================================

Caterpillars, double star paths, cluster caterpillars, starlike trees and
brooms are the extremal shapes.  Three local moves push a tree up or down the
preorder; chaining them walks from one extreme to the other.
"""
from edvtrees import FamilyParams, compare_trees, construct, edge_division_vector, edge_move, edge_shift
from edvtrees.families import format_family

n = 10

# double star paths with a fixed spine: moving pendants towards balance raises the tree
print("double star paths on a 6-vertex spine")
for a in range(3):
    p = FamilyParams.double_star_path(n, a, 4 - a, 6)
    print(f"  {format_family(p):>16}  {edge_division_vector(construct(p))}")

# one edge shift: a pendant hops from one end of the spine to the other
p = FamilyParams.double_star_path(n, 1, 3, 6)
before, after = construct(p), edge_shift(p)
print("\nedge shift:", edge_division_vector(before), "->", edge_division_vector(after),
      "|", compare_trees(before, after))

# cluster caterpillars fall as the cluster moves to the middle of the spine
print("\ncluster caterpillars on a 7-vertex spine")
for s in range(1, 5):
    p = FamilyParams.single_cluster(n, 7, s)
    print(f"  s={s}  {edge_division_vector(construct(p))}")

# an edge move contracts an inner edge and hangs its far side as a pendant
t = construct(FamilyParams.path(6))
moved = edge_move(t, 2, 3)
print("\nedge move on P6:", edge_division_vector(t), "->", edge_division_vector(moved))

# the brooms: a fixed maximum degree, the rest stretched into a handle
print("\nbrooms of order", n)
for d in range(3, n - 1):
    print(f"  D={d}  {edge_division_vector(construct(FamilyParams.broom(n, d)))}")
