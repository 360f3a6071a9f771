"""
Exhaustive generation of unlabelled free trees and class filters.

Free trees are generated around their centroid.  A tree with one centroid is a
multiset of rooted branches, each of order at most ``(n-1)/2``, hung from the
centroid; a tree with two centroids is an unordered pair of rooted halves of
order ``n/2`` joined by an edge.  Rooted branches come from a catalog built
bottom-up as multisets of smaller rooted trees, so every isomorphism class is
produced exactly once without any deduplication pass.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .families import FamilyParams, construct
from .tree import Tree, canonical_code, profile

__all__ = [
    "ClassKind",
    "ClassSpec",
    "EnumerationError",
    "DEFAULT_CAP",
    "free_trees",
    "free_level_sequences",
    "count_free_trees",
    "in_class",
    "enumerate_class",
    "prufer_class_count",
    "caterpillars_by_composition",
]

DEFAULT_CAP = 20


class EnumerationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# rooted catalog
# ---------------------------------------------------------------------------

class _Catalog:
    """Rooted unlabelled trees, ids ordered by size.

    ``levels[i]`` is the pre-order depth sequence of tree ``i`` (root depth 0,
    children in nonincreasing id order).
    """

    def __init__(self):
        self.size: list[int] = [1]
        self.levels: list[tuple[int, ...]] = [(0,)]
        self.first_of_size: list[int] = [0, 0, 1]  # first id with size >= m
        self.max_size = 1

    def extend_to(self, m: int) -> None:
        while self.max_size < m:
            target = self.max_size + 1
            start = len(self.size)
            for kids in self.multisets(target - 1, start - 1):
                seq = [0]
                for c in kids:
                    seq.extend(d + 1 for d in self.levels[c])
                self.size.append(target)
                self.levels.append(tuple(seq))
            self.max_size = target
            # first_of_size[j] for j up to target + 1
            self.first_of_size = [0] * (target + 2)
            for j in range(target + 2):
                self.first_of_size[j] = next((i for i, s in enumerate(self.size) if s >= j), len(self.size))

    def last_id_with_size_at_most(self, s: int) -> int:
        if s >= self.max_size:
            return len(self.size) - 1
        return self.first_of_size[s + 1] - 1

    def multisets(self, total: int, max_id: int) -> Iterator[tuple[int, ...]]:
        """Nonincreasing id tuples with ids <= ``max_id`` whose sizes sum to ``total``."""
        if total == 0:
            yield ()
            return
        top = min(max_id, self.last_id_with_size_at_most(total))
        for i in range(top, -1, -1):
            s = self.size[i]
            for rest in self.multisets(total - s, i):
                yield (i,) + rest


@lru_cache(maxsize=1)
def _catalog() -> _Catalog:
    return _Catalog()


def _check_n(n: int, cap: int | None) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if n < 1:
        raise EnumerationError(f"n must be >= 1, got {n}")
    if n > limit:
        raise EnumerationError(f"n={n} exceeds the enumeration cap {limit}")


def _raw_sequences(n: int) -> Iterator[tuple[int, ...]]:
    cat = _catalog()
    if n == 1:
        yield (0,)
        return
    half = (n - 1) // 2
    cat.extend_to(max(half, n // 2, 1))
    # one centroid: every branch has order <= (n-1)/2
    for kids in cat.multisets(n - 1, cat.last_id_with_size_at_most(half)):
        seq = [0]
        for c in kids:
            seq.extend(d + 1 for d in cat.levels[c])
        yield tuple(seq)
    if n % 2 == 0:
        # two centroids: halves A >= B rooted at the centroids, B hung under A's root
        m = n // 2
        lo = cat.first_of_size[m]
        hi = cat.last_id_with_size_at_most(m)
        for a in range(hi, lo - 1, -1):
            for b in range(a, lo - 1, -1):
                seq = list(cat.levels[a])
                seq.extend(d + 1 for d in cat.levels[b])
                yield tuple(seq)


def free_level_sequences(n: int, part: int = 0, parts: int = 1, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Level sequences (root depth 0) of every free tree of order ``n``.

    With ``parts > 1`` only the sequences whose position in the generation
    order is congruent to ``part`` are returned, so disjoint workers cover the
    whole space.
    """
    _check_n(n, cap)
    if not 0 <= part < parts:
        raise EnumerationError(f"part must satisfy 0 <= part < parts, got {part}/{parts}")
    it = _raw_sequences(n)
    if parts > 1:
        it = itertools.islice(it, part, None, parts)
    return it


def _tree_from_levels(seq: tuple[int, ...]) -> Tree:
    stack: list[int] = []
    edges = []
    for i, d in enumerate(seq):
        del stack[d:]
        if d:
            edges.append((stack[-1], i))
        stack.append(i)
    return Tree(len(seq), edges)


def free_trees(n: int, part: int = 0, parts: int = 1, cap: int | None = None) -> Iterator[Tree]:
    """One tree per isomorphism class of order ``n``, in a fixed deterministic order."""
    for seq in free_level_sequences(n, part, parts, cap):
        yield _tree_from_levels(seq)


def count_free_trees(n: int, cap: int | None = None) -> int:
    return sum(1 for _ in free_level_sequences(n, cap=cap))


# ---------------------------------------------------------------------------
# classes
# ---------------------------------------------------------------------------

class ClassKind(enum.Enum):
    AllTrees = "all"
    Caterpillars = "cat"
    FixedDiameter = "diam"
    FixedPendants = "pend"
    FixedMaxDegree = "maxdeg"


@dataclass(frozen=True)
class ClassSpec:
    """A tree class of fixed order ``n``; ``param`` is k, d, q or the max degree."""

    kind: ClassKind
    n: int
    param: int | None = None

    def __post_init__(self):
        n, p, kind = self.n, self.param, self.kind
        if n < 1:
            raise EnumerationError(f"n must be >= 1, got {n}")
        if kind is ClassKind.AllTrees:
            return
        if p is None:
            raise EnumerationError(f"class {kind.value} needs a parameter")
        if kind is ClassKind.Caterpillars and not 1 <= p <= n:
            raise EnumerationError(f"spine length must satisfy 1 <= k <= n, got k={p}")
        if kind is ClassKind.FixedDiameter and not 1 <= p <= n - 1:
            raise EnumerationError(f"diameter must satisfy 1 <= d <= n-1, got d={p}")
        if kind is ClassKind.FixedPendants and not 2 <= p <= n - 1:
            raise EnumerationError(f"pendant count must satisfy 2 <= q <= n-1, got q={p}")
        if kind is ClassKind.FixedMaxDegree and not 2 <= p <= n - 1:
            raise EnumerationError(f"max degree must satisfy 2 <= D <= n-1, got D={p}")

    @classmethod
    def all(cls, n):
        return cls(ClassKind.AllTrees, n)

    @classmethod
    def caterpillars(cls, n, k):
        return cls(ClassKind.Caterpillars, n, k)

    @classmethod
    def diameter(cls, n, d):
        return cls(ClassKind.FixedDiameter, n, d)

    @classmethod
    def pendants(cls, n, q):
        return cls(ClassKind.FixedPendants, n, q)

    @classmethod
    def max_degree(cls, n, delta):
        return cls(ClassKind.FixedMaxDegree, n, delta)

    @classmethod
    def parse(cls, text: str) -> "ClassSpec":
        """Parse ``all:n``, ``cat:n:k``, ``diam:n:d``, ``pend:n:q`` or ``maxdeg:n:D``."""
        parts = text.strip().split(":")
        try:
            kind = ClassKind(parts[0].lower())
        except ValueError:
            raise EnumerationError(f"unknown class {parts[0]!r}") from None
        want = 2 if kind is ClassKind.AllTrees else 3
        if len(parts) != want or not all(p.strip().lstrip("-").isdigit() for p in parts[1:]):
            raise EnumerationError(f"malformed class spec {text!r}")
        nums = [int(p) for p in parts[1:]]
        return cls(kind, nums[0], nums[1] if want == 3 else None)

    def __str__(self) -> str:
        if self.kind is ClassKind.AllTrees:
            return f"all:{self.n}"
        return f"{self.kind.value}:{self.n}:{self.param}"


def in_class(t: Tree, c: ClassSpec) -> bool:
    if t.n != c.n:
        raise EnumerationError(f"order mismatch: tree has n={t.n}, class has n={c.n}")
    kind = c.kind
    if kind is ClassKind.AllTrees:
        return True
    prof = profile(t)
    if kind is ClassKind.FixedDiameter:
        return prof.diameter == c.param
    if kind is ClassKind.FixedPendants:
        return prof.pendant_count == c.param
    if kind is ClassKind.FixedMaxDegree:
        return prof.max_degree == c.param
    # spine of k vertices: the core, optionally extended by one leaf at either end
    if not prof.is_caterpillar:
        return False
    core = prof.core_size
    k = c.param
    return max(1, core) <= k <= core + 2 and k <= t.n


def enumerate_class(c: ClassSpec, part: int = 0, parts: int = 1, cap: int | None = None) -> Iterator[Tree]:
    for t in free_trees(c.n, part, parts, cap):
        if in_class(t, c):
            yield t


def caterpillars_by_composition(n: int, k: int) -> dict[str, Tree]:
    """Every ``CP(n; c_1..c_k)`` over compositions of ``n-k`` into ``k`` parts, keyed
    by canonical code."""
    out: dict[str, Tree] = {}
    m = n - k
    if m < 0:
        return out
    # stars and bars
    for bars in itertools.combinations(range(m + k - 1), k - 1):
        prev = -1
        comp = []
        for b in bars:
            comp.append(b - prev - 1)
            prev = b
        comp.append(m + k - 1 - prev - 1)
        t = construct(FamilyParams.caterpillar(n, comp))
        out.setdefault(canonical_code(t), t)
    return out


# ---------------------------------------------------------------------------
# labelled oracle
# ---------------------------------------------------------------------------

def prufer_class_count(n: int, chunk: int = 1 << 18) -> int:
    """Number of isomorphism classes among all ``n^(n-2)`` labelled trees.

    Every Prüfer sequence is decoded (vectorised in chunks); the decoded tree is
    rooted at vertex ``n-1``, which always survives decoding, and classified by
    bottom-up rooted labels.  One representative per rooted class is then
    reduced to its free canonical code.
    """
    if n < 1:
        raise EnumerationError("n must be >= 1")
    if n <= 2:
        return 1
    L = n - 2
    total = n ** L
    width = n - 1
    sig_ids: dict[bytes, int] = {}
    reps: dict[int, tuple[int, ...]] = {}
    powers = n ** np.arange(L - 1, -1, -1, dtype=np.int64)
    mult = np.random.default_rng(0x5EED).integers(1, 2**63, size=width, dtype=np.uint64) | np.uint64(1)
    for lo in range(0, total, chunk):
        idx = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        B = idx.size
        rows = np.arange(B)
        seq = (idx[:, None] // powers[None, :]) % n
        flat = (rows[:, None] * n + seq).ravel()
        deg = (np.bincount(flat, minlength=B * n) + 1).reshape(B, n).astype(np.int16)
        parent = np.full((B, n), -1, dtype=np.int64)
        order = np.empty((B, n - 1), dtype=np.int64)
        for i in range(L):
            leaf = np.argmax(deg == 1, axis=1)
            parent[rows, leaf] = seq[:, i]
            order[:, i] = leaf
            deg[rows, leaf] = 0
            deg[rows, seq[:, i]] -= 1
        last = np.argmax(deg == 1, axis=1)
        parent[rows, last] = n - 1
        order[:, L] = last

        kids = np.full((B, n, width), -1, dtype=np.int32)
        nkids = np.zeros((B, n), dtype=np.int64)

        def label(v):
            block = -np.sort(-kids[rows, v, :], axis=1)
            # group rows by a 64-bit hash, then confirm every row equals its
            # group representative so the grouping is exact
            h = ((block.astype(np.uint64) + np.uint64(1)) * mult).sum(axis=1, dtype=np.uint64)
            _, first, inv = np.unique(h, return_index=True, return_inverse=True)
            inv = inv.ravel()
            if not np.array_equal(block, block[first][inv]):
                view = np.ascontiguousarray(block).view(np.dtype((np.void, 4 * width))).ravel()
                _, first, inv = np.unique(view, return_index=True, return_inverse=True)
                inv = inv.ravel()
            ids = np.empty(len(first), dtype=np.int32)
            for j, r in enumerate(first):
                ids[j] = sig_ids.setdefault(block[r].tobytes(), len(sig_ids))
            return ids[inv], first, ids

        for j in range(n - 1):
            v = order[:, j]
            lab, _, _ = label(v)
            p = parent[rows, v]
            kids[rows, p, nkids[rows, p]] = lab
            nkids[rows, p] += 1
        root_lab, first, ids = label(np.full(B, n - 1))
        for j, rid in enumerate(ids):
            rid = int(rid)
            if rid not in reps:
                r = first[j]
                reps[rid] = tuple(int(x) for x in parent[r])
    codes = set()
    for par in reps.values():
        edges = [(v, p) for v, p in enumerate(par) if p >= 0]
        codes.add(canonical_code(Tree(n, edges)))
    return len(codes)
