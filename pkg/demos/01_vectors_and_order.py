"""
Edge division vectors and the dominance preorder
=================================================

Cutting an edge of a tree splits it in two; mu(e) is the size of the smaller
piece.  Counting edges by mu gives the edge division vector, and comparing
suffix sums of those vectors orders trees of the same size.
"""
from edvtrees import Tree, compare_trees, edge_division_vector, edge_mu, parse_family
from edvtrees.families import construct
from edvtrees.verify import find_equivalent_nonisomorphic
from edvtrees.tree import to_level_sequence

# a path on six vertices: the middle edge splits 3|3, the ends split 1|5
path = construct(parse_family("P(6)"))
for (u, v), m in zip(edge_mu(path).edges, edge_mu(path).mu):
    print(f"edge {u}-{v}: mu = {m}")
print("P6 vector:", edge_division_vector(path))

# the star has every edge pendant, so all mass sits at mu = 1
star = construct(parse_family("S(6)"))
print("S6 vector:", edge_division_vector(star))
print("S6 vs P6:", compare_trees(star, path))

# two trees can disagree in both directions
a = Tree(8, [(0, 1), (1, 2), (1, 3), (0, 4), (4, 5), (4, 6), (0, 7)])
b = Tree(8, [(0, 1), (1, 2), (1, 3), (0, 4), (4, 5), (0, 6), (6, 7)])
print("\nvectors", edge_division_vector(a), edge_division_vector(b))
print("relation:", compare_trees(a, b))

# the preorder is not antisymmetric: distinct trees may share a vector
print("\nnon-isomorphic trees of order 7 with equal vectors:")
for t1, t2 in find_equivalent_nonisomorphic(7):
    print(" ", edge_division_vector(t1), to_level_sequence(t1), "|", to_level_sequence(t2))
