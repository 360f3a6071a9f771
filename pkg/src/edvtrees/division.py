"""
Edge splits, edge division vectors and the dominance preorder on trees.

For an edge ``e`` of a tree on ``n`` vertices, ``mu(e)`` is the order of the
smaller component of ``T - e``.  The edge division vector counts edges by
``mu``; two trees of equal order are compared by suffix sums of these counts.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Sequence

from .tree import Tree, _rooted_order

__all__ = [
    "EdgeMuMap",
    "EdgeDivisionVector",
    "Relation",
    "OrderRelation",
    "edge_mu",
    "edge_division_vector",
    "compare",
    "compare_trees",
    "centroidal_vertices",
    "proper_centroidal_vertices",
    "center_edges",
]


@dataclass(frozen=True)
class EdgeMuMap:
    """Per-edge split data, aligned with ``edges``.

    ``n_small_side[i]`` is the order of the component of ``T - edges[i]`` that
    realises ``mu[i]`` (either side when the split is even).
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    mu: tuple[int, ...]
    n_small_side: tuple[int, ...]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.edges, self.mu))

    def __getitem__(self, edge: tuple[int, int]) -> int:
        u, v = edge
        return self.as_dict()[(u, v) if u < v else (v, u)]


@dataclass(frozen=True)
class EdgeDivisionVector:
    n: int
    r: tuple[int, ...]

    def __post_init__(self):
        if len(self.r) != self.n // 2:
            raise ValueError(f"vector length {len(self.r)} != floor({self.n}/2)")
        if any(x < 0 for x in self.r):
            raise ValueError("negative entry in edge division vector")

    def suffix_sums(self) -> list[int]:
        out = [0] * len(self.r)
        acc = 0
        for i in range(len(self.r) - 1, -1, -1):
            acc += self.r[i]
            out[i] = acc
        return out

    def __getitem__(self, i: int) -> int:
        """1-based access: ``v[1]`` is the number of pendant edges."""
        return self.r[i - 1]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.r)) + ")"

    @classmethod
    def parse(cls, text: str, n: int) -> "EdgeDivisionVector":
        body = text.strip().strip("()")
        return cls(n, tuple(int(x) for x in body.split(",") if x.strip()))


class Relation(enum.Enum):
    StrictlyLess = "StrictlyLess"
    StrictlyGreater = "StrictlyGreater"
    Equivalent = "Equivalent"
    Incomparable = "Incomparable"


@dataclass(frozen=True)
class OrderRelation:
    """Outcome of comparing two edge division vectors.

    ``witness_k`` is the smallest 1-based index whose suffix sums differ; for
    ``Incomparable`` results ``witness_k2`` is the first index where the
    inequality runs the other way.
    """

    variant: Relation
    witness_k: int | None = None
    witness_k2: int | None = None

    @property
    def is_le(self) -> bool:
        return self.variant in (Relation.StrictlyLess, Relation.Equivalent)

    @property
    def is_ge(self) -> bool:
        return self.variant in (Relation.StrictlyGreater, Relation.Equivalent)

    def flipped(self) -> "OrderRelation":
        swap = {Relation.StrictlyLess: Relation.StrictlyGreater,
                Relation.StrictlyGreater: Relation.StrictlyLess}
        return OrderRelation(swap.get(self.variant, self.variant), self.witness_k, self.witness_k2)

    def to_dict(self) -> dict:
        d = {"relation": self.variant.value}
        if self.witness_k is not None:
            d["witness_k"] = self.witness_k
        if self.witness_k2 is not None:
            d["witness_k2"] = self.witness_k2
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __str__(self) -> str:
        s = self.variant.value
        if self.variant in (Relation.StrictlyLess, Relation.StrictlyGreater):
            s += f" (witness k={self.witness_k})"
        elif self.variant is Relation.Incomparable:
            s += f" (witness k={self.witness_k}, k'={self.witness_k2})"
        return s


def _subtree_sizes(t: Tree):
    order, parent = _rooted_order(t.adjacency, 0)
    size = [1] * t.n
    for x in reversed(order):
        if parent[x] >= 0:
            size[parent[x]] += size[x]
    return parent, size


def edge_mu(t: Tree) -> EdgeMuMap:
    n = t.n
    if n == 1:
        return EdgeMuMap(1, (), (), ())
    parent, size = _subtree_sizes(t)
    mus, small = [], []
    for u, v in t.edges:
        child = v if parent[v] == u else u
        s = size[child]
        mus.append(min(s, n - s))
        small.append(min(s, n - s))
    return EdgeMuMap(n, t.edges, tuple(mus), tuple(small))


def edge_division_vector(t: Tree) -> EdgeDivisionVector:
    r = [0] * (t.n // 2)
    for m in edge_mu(t).mu:
        r[m - 1] += 1
    return EdgeDivisionVector(t.n, tuple(r))


def compare(a: EdgeDivisionVector | Sequence[int], b: EdgeDivisionVector | Sequence[int]) -> OrderRelation:
    """Compare ``a`` with ``b`` under suffix-sum dominance."""
    if isinstance(a, EdgeDivisionVector) and isinstance(b, EdgeDivisionVector):
        if a.n != b.n:
            raise ValueError(f"orders differ: {a.n} vs {b.n}")
        ra, rb = a.r, b.r
    else:
        ra, rb = tuple(getattr(a, "r", a)), tuple(getattr(b, "r", b))
        if len(ra) != len(rb):
            raise ValueError(f"orders differ: vector lengths {len(ra)} vs {len(rb)}")
    first_less = first_greater = None
    sa = sb = 0
    # walk from the top index down; record the smallest k on each side
    for k in range(len(ra), 0, -1):
        sa += ra[k - 1]
        sb += rb[k - 1]
        if sa < sb:
            first_less = k
        elif sa > sb:
            first_greater = k
    if first_less is None and first_greater is None:
        return OrderRelation(Relation.Equivalent)
    if first_greater is None:
        return OrderRelation(Relation.StrictlyLess, first_less)
    if first_less is None:
        return OrderRelation(Relation.StrictlyGreater, first_greater)
    k1, k2 = sorted((first_less, first_greater))
    return OrderRelation(Relation.Incomparable, k1, k2)


def compare_trees(a: Tree, b: Tree) -> OrderRelation:
    return compare(edge_division_vector(a), edge_division_vector(b))


def _max_component(t: Tree) -> list[int]:
    parent, size = _subtree_sizes(t)
    n = t.n
    worst = [n - size[v] for v in range(n)]
    for v in range(n):
        p = parent[v]
        if p >= 0 and size[v] > worst[p]:
            worst[p] = size[v]
    return worst


def centroidal_vertices(t: Tree) -> list[int]:
    """Vertices whose every incident edge leaves at least n/2 vertices on their side."""
    n = t.n
    return [v for v, w in enumerate(_max_component(t)) if 2 * w <= n]


def proper_centroidal_vertices(t: Tree) -> list[int]:
    """Centroidal vertices whose neighbouring components all have order < floor(n/2)."""
    n = t.n
    if n == 1:
        return [0]
    return [v for v, w in enumerate(_max_component(t)) if w < n // 2]


def center_edges(t: Tree) -> list[tuple[int, int]]:
    m = edge_mu(t)
    half = t.n // 2
    return [e for e, x in zip(m.edges, m.mu) if x == half]
