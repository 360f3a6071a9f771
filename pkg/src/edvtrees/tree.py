"""
Immutable unrooted trees, text formats, canonical codes and structural profiles.

Vertices are dense integer ids ``0..n-1``.  Every constructor validates that
the edge set really forms a tree, so downstream code never re-checks.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Tree",
    "TreeProfile",
    "TreeFormatError",
    "parse_tree",
    "parse_edge_list",
    "parse_level_sequence",
    "canonical_code",
    "canonical_level_sequence",
    "is_isomorphic",
    "profile",
    "to_edge_list",
    "to_level_sequence",
]


class TreeFormatError(ValueError):
    """Malformed tree text or an edge set that is not a tree."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class Tree:
    """An unrooted tree on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices, at least 1.
    edges : iterable of (int, int)
        Exactly ``n - 1`` unordered pairs.

    Raises
    ------
    TreeFormatError
        If the edges contain self-loops, duplicates, out-of-range ids, a cycle,
        or do not connect all ``n`` vertices.
    """

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise TreeFormatError(f"a tree needs at least one vertex, got n={n}")
        norm = []
        seen = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise TreeFormatError(f"vertex id out of range in edge ({u}, {v}) for n={n}")
            if u == v:
                raise TreeFormatError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise TreeFormatError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
            adj[u].append(v)
            adj[v].append(u)
        if len(norm) != n - 1:
            if len(norm) > n - 1:
                raise TreeFormatError(f"cycle detected: {len(norm)} edges on {n} vertices")
            raise TreeFormatError(f"disconnected: {len(norm)} edges on {n} vertices")
        # n-1 edges + connected  <=>  tree
        mark = [False] * n
        mark[0] = True
        stack = [0]
        reached = 1
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not mark[y]:
                    mark[y] = True
                    reached += 1
                    stack.append(y)
        if reached != n:
            raise TreeFormatError("cycle detected: edge set is not connected and acyclic")
        self._n = n
        self._edges = tuple(norm)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @classmethod
    def from_parents(cls, parents: Sequence[int]) -> "Tree":
        """Build from a parent array where the root has parent ``-1``."""
        return cls(len(parents), [(v, p) for v, p in enumerate(parents) if p >= 0])

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        # labelled equality; use is_isomorphic for shape equality
        if not isinstance(other, Tree):
            return NotImplemented
        return self._n == other._n and set(self._edges) == set(other._edges)

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._edges)))

    def __repr__(self) -> str:
        return f"Tree(n={self._n}, edges={list(self._edges)})"


@dataclass(frozen=True)
class TreeProfile:
    diameter: int
    pendant_count: int
    max_degree: int
    is_caterpillar: bool
    core_size: int


# ---------------------------------------------------------------------------
# parsing / serialisation
# ---------------------------------------------------------------------------

_INT = re.compile(r"-?\d+")


def parse_edge_list(text: str) -> Tree:
    """Parse ``"u v"`` lines (0-based ids).  A lone ``"0"`` line denotes the
    single-vertex tree.  Blank lines and ``#`` comments are ignored."""
    edges = []
    labels = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        ids = []
        for tok, col in tokens:
            if not _INT.fullmatch(tok):
                raise TreeFormatError(f"expected an integer vertex id, got {tok!r}", lineno, col)
            val = int(tok)
            if val < 0:
                raise TreeFormatError(f"vertex id out of range: {val}", lineno, col)
            ids.append((val, col))
        if len(ids) == 1:
            labels.add(ids[0][0])
            continue
        if len(ids) != 2:
            raise TreeFormatError(f"expected 'u v', got {len(ids)} tokens", lineno, 1)
        (u, _), (v, cv) = ids
        if u == v:
            raise TreeFormatError(f"self-loop at vertex {u}", lineno, cv)
        labels.update((u, v))
        edges.append((u, v, lineno, cv))
    if not labels:
        raise TreeFormatError("empty edge list")
    n = len(labels)
    for lab in labels:
        if lab >= n:
            line = next((ln for u, v, ln, _ in edges if lab in (u, v)), None)
            raise TreeFormatError(
                f"vertex id out of range: {lab} (ids must be 0..{n - 1})", line
            )
    # locate the first edge that closes a cycle so the error carries a line number
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, lineno, col in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise TreeFormatError(f"cycle detected at edge ({u}, {v})", lineno, col)
        parent[ru] = rv
    return Tree(n, [(u, v) for u, v, _, _ in edges])


def parse_level_sequence(text: str | Sequence[int]) -> Tree:
    """Parse a rooted level sequence (pre-order depths).  The first entry is the
    root depth (0 or 1); each later entry lies in ``base+1 .. previous+1``."""
    if isinstance(text, str):
        levels = []
        for m in re.finditer(r"\S+", text):
            if not _INT.fullmatch(m.group()):
                raise TreeFormatError(f"expected an integer level, got {m.group()!r}", 1, m.start() + 1)
            levels.append(int(m.group()))
    else:
        levels = [int(x) for x in text]
    if not levels:
        raise TreeFormatError("empty level sequence")
    base = levels[0]
    stack: list[int] = []  # stack[d] = most recent vertex at depth base+d
    parents = []
    for i, lev in enumerate(levels):
        d = lev - base
        if i == 0:
            parents.append(-1)
        else:
            if d < 1 or d > len(stack):
                raise TreeFormatError(
                    f"level {lev} at position {i + 1} must lie in {base + 1}..{base + len(stack)}",
                    1,
                    i + 1,
                )
            parents.append(stack[d - 1])
        del stack[d:]
        stack.append(i)
    return Tree.from_parents(parents)


def parse_tree(text: str, format: str = "edge-list") -> Tree:
    """Parse ``text`` as ``edge-list``, ``level-sequence`` or ``family-expression``."""
    if format == "edge-list":
        return parse_edge_list(text)
    if format == "level-sequence":
        return parse_level_sequence(text)
    if format == "family-expression":
        from .families import construct, parse_family

        return construct(parse_family(text))
    raise ValueError(f"unknown tree format {format!r}")


def to_edge_list(t: Tree) -> str:
    if t.n == 1:
        return "0\n"
    return "".join(f"{u} {v}\n" for u, v in t.edges)


def to_level_sequence(t: Tree) -> str:
    return " ".join(map(str, canonical_level_sequence(t)))


# ---------------------------------------------------------------------------
# centroids and canonical codes
# ---------------------------------------------------------------------------

def _rooted_order(adj: Sequence[Sequence[int]], root: int) -> tuple[list[int], list[int]]:
    """BFS order and parent array from ``root``."""
    n = len(adj)
    parent = [-1] * n
    order = [root]
    parent[root] = root
    for x in order:
        for y in adj[x]:
            if parent[y] == -1:
                parent[y] = x
                order.append(y)
    parent[root] = -1
    return order, parent


def _centroids(adj: Sequence[Sequence[int]]) -> list[int]:
    n = len(adj)
    order, parent = _rooted_order(adj, 0)
    size = [1] * n
    heaviest = [0] * n
    for x in reversed(order):
        p = parent[x]
        if p >= 0:
            size[p] += size[x]
            if size[x] > heaviest[p]:
                heaviest[p] = size[x]
    return [v for v in range(n) if 2 * max(heaviest[v], n - size[v]) <= n]


def _ahu(adj: Sequence[Sequence[int]], root: int, banned: int = -1) -> str:
    order, parent = _rooted_order_excluding(adj, root, banned)
    codes: dict[int, list[str]] = {}
    code = ""
    for x in reversed(order):
        code = "(" + "".join(sorted(codes.pop(x, ()))) + ")"
        p = parent[x]
        if p >= 0:
            codes.setdefault(p, []).append(code)
    return code


def _rooted_order_excluding(adj, root, banned):
    parent = {root: -1}
    order = [root]
    for x in order:
        for y in adj[x]:
            if y != banned and y not in parent:
                parent[y] = x
                order.append(y)
    return order, parent


def canonical_code_adj(adj: Sequence[Sequence[int]]) -> str:
    """Canonical code from raw adjacency lists (no validation)."""
    cs = _centroids(adj)
    if len(cs) == 1:
        return _ahu(adj, cs[0])
    u, v = cs
    a, b = sorted((_ahu(adj, u, v), _ahu(adj, v, u)))
    # two equal halves joined by the centroid edge
    return "[" + a + b + "]"


def canonical_code(t: Tree) -> str:
    """Isomorphism-invariant string: equal for two trees iff they are isomorphic.

    The tree is rooted at its centroid; with two centroids it is split along the
    edge joining them and the two half-codes are concatenated in sorted order.
    """
    return canonical_code_adj(t.adjacency)


def is_isomorphic(a: Tree, b: Tree) -> bool:
    return a.n == b.n and canonical_code(a) == canonical_code(b)


def canonical_level_sequence(t: Tree) -> list[int]:
    """Pre-order depths from the (first) centroid, children visited in
    decreasing order of their own level sequences.  Equal for isomorphic trees."""
    adj = t.adjacency
    cs = _centroids(adj)
    best = None
    for root in cs:
        order, parent = _rooted_order(adj, root)
        seqs: dict[int, list[list[int]]] = {}
        seq: list[int] = []
        for x in reversed(order):
            kids = sorted(seqs.pop(x, ()), reverse=True)
            seq = [0] + [lev + 1 for k in kids for lev in k]
            p = parent[x]
            if p >= 0:
                seqs.setdefault(p, []).append(seq)
        if best is None or seq > best:
            best = seq
    return best


# ---------------------------------------------------------------------------
# profile
# ---------------------------------------------------------------------------

def _bfs_far(adj, src):
    dist = [-1] * len(adj)
    dist[src] = 0
    q = deque([src])
    last = src
    while q:
        x = q.popleft()
        last = x
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                q.append(y)
    return last, dist[last]


def diametral_path(t: Tree) -> list[int]:
    """A longest path, as a vertex list, found by two breadth-first sweeps."""
    a, _ = _bfs_far(t.adjacency, 0)
    order, parent = _rooted_order(t.adjacency, a)
    b = order[-1]
    path = [b]
    while parent[path[-1]] >= 0:
        path.append(parent[path[-1]])
    return path


def profile(t: Tree) -> TreeProfile:
    adj = t.adjacency
    deg = t.degrees()
    a, _ = _bfs_far(adj, 0)
    _, diameter = _bfs_far(adj, a)
    core = [v for v in range(t.n) if deg[v] >= 2]
    core_set = set(core)
    # leaves removed once; the remainder is a path iff every core vertex has <= 2 core neighbours
    is_cat = all(sum(1 for y in adj[v] if y in core_set) <= 2 for v in core)
    return TreeProfile(
        diameter=diameter,
        pendant_count=sum(1 for d in deg if d == 1),
        max_degree=max(deg),
        is_caterpillar=is_cat,
        core_size=len(core),
    )
