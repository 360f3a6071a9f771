"""
Topological indices from the vector alone
=========================================

An index that sums a function of mu over the edges depends only on the edge
division vector.  If the function rises with mu the index follows the
preorder; if it falls the index runs against it.
"""
import numpy as np

from edvtrees import IndexKind, IndexSpec, Relation, compare, free_trees, index_value, monotone_class
from edvtrees import edge_division_vector, wiener_bruteforce
from edvtrees.indices import pairwise_index_oracle

n = 10
trees = list(free_trees(n))
vecs = [edge_division_vector(t) for t in trees]
specs = [IndexSpec(IndexKind.Wiener), IndexSpec(IndexKind.Gutman), IndexSpec(IndexKind.ABC2),
         IndexSpec(IndexKind.ModifiedWiener, lam=-0.5)]
vals = np.array([[float(index_value(t, s)) for s in specs] for t in trees])

print(f"{len(trees)} trees of order {n}")
for s, col in zip(specs, vals.T):
    print(f"  {s.label:>14}: {monotone_class(s, n).value:>10}, range {col.min():.4g} .. {col.max():.4g}")

# the Wiener index computed edge by edge agrees with the sum over vertex pairs
assert all(index_value(t, specs[0]) == wiener_bruteforce(t) for t in trees)

# for every strictly ordered pair, Wiener rises and ABC2 falls
less = [(i, j) for i in range(len(trees)) for j in range(len(trees))
        if compare(vecs[i], vecs[j]).variant is Relation.StrictlyLess]
w, abc = vals[:, 0], vals[:, 2]
print(f"\n{len(less)} strictly ordered pairs")
print("  Wiener increases on all:", all(w[i] < w[j] for i, j in less))
print("  ABC2 decreases on all:  ", all(abc[i] > abc[j] for i, j in less))

# the hyper-Wiener index has two readings that disagree already on P4
p4 = next(t for t in free_trees(4) if max(t.degrees()) == 2)
print("\nhyper-Wiener on P4: edge form",
      index_value(p4, IndexSpec(IndexKind.HyperWienerEdgeForm)),
      "pairwise", pairwise_index_oracle(p4, IndexKind.HyperWienerPairwise))
