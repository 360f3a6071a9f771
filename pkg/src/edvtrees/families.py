"""
Named tree families and the three order-relating rewirings.

Labelling convention for everything built here: spine vertices come first
(``0..k-1`` in path order), then pendant vertices grouped by spine position.
Starlike trees put the hub at 0 and lay legs out in nondecreasing length.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .tree import Tree, TreeFormatError, is_isomorphic

__all__ = [
    "FamilyKind",
    "FamilyParams",
    "FamilyError",
    "construct",
    "spine",
    "normalize",
    "parse_family",
    "format_family",
    "branch_shift",
    "edge_shift",
    "edge_move",
]


class FamilyError(ValueError):
    pass


class FamilyKind(enum.Enum):
    Path = "Path"
    Star = "Star"
    Caterpillar = "Caterpillar"
    DoubleStarPath = "DoubleStarPath"
    SingleClusterCaterpillar = "SingleClusterCaterpillar"
    BalancedStarlike = "BalancedStarlike"
    Broom = "Broom"


@dataclass(frozen=True)
class FamilyParams:
    """Symbolic description of one member of a named family.

    Only the fields relevant to ``kind`` are meaningful:

    - Caterpillar: ``composition`` (pendant counts per spine vertex)
    - DoubleStarPath: ``a``, ``b`` pendants at the two spine ends, spine length ``k``
    - SingleClusterCaterpillar: spine length ``k``, all pendants at position ``s``
    - BalancedStarlike: ``q`` legs
    - Broom: maximum degree ``delta`` (a double star path with ``a=1``)
    """

    kind: FamilyKind
    n: int
    composition: tuple[int, ...] = ()
    a: int = 0
    b: int = 0
    k: int = 0
    s: int = 0
    q: int = 0
    delta: int = 0

    @classmethod
    def path(cls, n):
        return cls(FamilyKind.Path, n)

    @classmethod
    def star(cls, n):
        return cls(FamilyKind.Star, n)

    @classmethod
    def caterpillar(cls, n, composition):
        comp = tuple(composition)
        return cls(FamilyKind.Caterpillar, n, composition=comp, k=len(comp))

    @classmethod
    def double_star_path(cls, n, a, b, k=None):
        if k is None:
            k = n - a - b
        return cls(FamilyKind.DoubleStarPath, n, a=a, b=b, k=k)

    @classmethod
    def single_cluster(cls, n, k, s):
        # position s and its mirror k-s+1 describe the same tree
        if 1 <= s <= k:
            s = min(s, k - s + 1)
        return cls(FamilyKind.SingleClusterCaterpillar, n, k=k, s=s)

    @classmethod
    def starlike(cls, n, q):
        return cls(FamilyKind.BalancedStarlike, n, q=q)

    @classmethod
    def broom(cls, n, delta):
        return cls(FamilyKind.Broom, n, delta=delta)

    def validate(self) -> None:
        n = self.n
        kind = self.kind
        if n < 1:
            raise FamilyError(f"order n must be >= 1, got {n}")
        if kind is FamilyKind.Caterpillar:
            c = self.composition
            if len(c) < 1:
                raise FamilyError("caterpillar needs k >= 1 spine vertices")
            if any(x < 0 for x in c):
                raise FamilyError("caterpillar composition entries must be >= 0")
            if sum(c) + len(c) != n:
                raise FamilyError(f"composition sum {sum(c)} + k {len(c)} != n {n}")
        elif kind is FamilyKind.DoubleStarPath:
            if self.k < 1:
                raise FamilyError(f"double star path needs spine length k >= 1, got {self.k}")
            if self.a < 0 or self.b < 0:
                raise FamilyError("double star path needs a, b >= 0")
            if self.a + self.b + self.k != n:
                raise FamilyError(f"a + b + k = {self.a + self.b + self.k} != n = {n}")
        elif kind is FamilyKind.SingleClusterCaterpillar:
            if self.k < 1:
                raise FamilyError(f"spine length k must be >= 1, got {self.k}")
            if n - self.k < 0:
                raise FamilyError(f"n - k must be >= 0, got {n - self.k}")
            if not 1 <= self.s <= (self.k + 1) // 2:
                raise FamilyError(f"cluster position s must satisfy 1 <= s <= ceil(k/2), got s={self.s}")
        elif kind is FamilyKind.BalancedStarlike:
            if not 3 <= self.q <= n - 1:
                raise FamilyError(f"starlike tree needs 3 <= q <= n-1, got q={self.q}, n={n}")
        elif kind is FamilyKind.Broom:
            if not 3 <= self.delta <= n - 1:
                raise FamilyError(f"broom needs 3 <= delta <= n-1, got delta={self.delta}, n={n}")

    def as_caterpillar(self) -> "FamilyParams":
        """Equivalent Caterpillar parameters (not defined for starlike trees)."""
        kind, n = self.kind, self.n
        if kind is FamilyKind.Caterpillar:
            return self
        if kind is FamilyKind.Path:
            return FamilyParams.caterpillar(n, [0] * n)
        if kind is FamilyKind.Star:
            return FamilyParams.caterpillar(n, [n - 1])
        if kind is FamilyKind.DoubleStarPath:
            if self.k == 1:
                return FamilyParams.caterpillar(n, [self.a + self.b])
            return FamilyParams.caterpillar(n, [self.a] + [0] * (self.k - 2) + [self.b])
        if kind is FamilyKind.SingleClusterCaterpillar:
            comp = [0] * self.k
            comp[self.s - 1] = n - self.k
            return FamilyParams.caterpillar(n, comp)
        if kind is FamilyKind.Broom:
            return FamilyParams.double_star_path(n, 1, self.delta - 1).as_caterpillar()
        raise FamilyError(f"{kind.value} is not a caterpillar family")


def _caterpillar_edges(comp):
    k = len(comp)
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, c in enumerate(comp):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return nxt, edges


def _starlike_edges(n, q):
    s, r = divmod(n - 1, q)
    lengths = [s] * (q - r) + [s + 1] * r
    edges = []
    nxt = 1
    for length in lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return edges


def construct(p: FamilyParams) -> Tree:
    """Build the tree described by ``p``."""
    p.validate()
    if p.kind is FamilyKind.BalancedStarlike:
        return Tree(p.n, _starlike_edges(p.n, p.q))
    n, edges = _caterpillar_edges(p.as_caterpillar().composition)
    return Tree(n, edges)


def spine(p: FamilyParams) -> list[int]:
    """Spine vertex ids of a caterpillar-type family member, in path order."""
    return list(range(len(p.as_caterpillar().composition)))


def normalize(p: FamilyParams) -> FamilyParams:
    """Return Path/Star parameters when ``p`` describes a path or star."""
    p.validate()
    t = construct(p)
    if t.n <= 3 or max(t.degrees()) <= 2:
        return FamilyParams.path(p.n) if max(t.degrees(), default=0) <= 2 else FamilyParams.star(p.n)
    if max(t.degrees()) == t.n - 1:
        return FamilyParams.star(p.n)
    return p


# ---------------------------------------------------------------------------
# family expressions
# ---------------------------------------------------------------------------

_NUM = r"\s*(\d+)\s*"
_PATTERNS = [
    (re.compile(rf"P\({_NUM}\)"), "path"),
    (re.compile(rf"S\({_NUM}\)"), "star"),
    (re.compile(rf"CP\({_NUM},{_NUM}\)\s*\^\s*\{{?\s*(\d+)\s*\}}?"), "cluster"),
    (re.compile(rf"CP\({_NUM};\s*([\d\s,]*)\)"), "cat"),
    (re.compile(rf"DSP\({_NUM};{_NUM},{_NUM}(?:;{_NUM})?\)"), "dsp"),
    (re.compile(rf"SP\({_NUM},{_NUM}\)"), "starlike"),
    (re.compile(rf"BROOM\({_NUM},{_NUM}\)"), "broom"),
]


def parse_family(text: str) -> FamilyParams:
    """Parse a family expression such as ``CP(7,4)^2`` or ``DSP(9; 1,3; 5)``.

    Grammar: ``P(n)``, ``S(n)``, ``CP(n; c1,...,ck)``, ``DSP(n; a,b[; k])``,
    ``CP(n,k)^s``, ``SP(n,q)``, ``BROOM(n,d)``.
    """
    src = text.strip()
    for pat, tag in _PATTERNS:
        m = pat.fullmatch(src)
        if not m:
            continue
        g = [x for x in m.groups()]
        if tag == "path":
            p = FamilyParams.path(int(g[0]))
        elif tag == "star":
            p = FamilyParams.star(int(g[0]))
        elif tag == "cluster":
            p = FamilyParams.single_cluster(int(g[0]), int(g[1]), int(g[2]))
        elif tag == "cat":
            parts = [x.strip() for x in g[1].split(",")]
            if not parts or any(not x.isdigit() for x in parts):
                raise TreeFormatError(f"bad caterpillar composition in {src!r}", 1, m.start(2) + 1)
            p = FamilyParams.caterpillar(int(g[0]), [int(x) for x in parts])
        elif tag == "dsp":
            k = int(g[3]) if g[3] is not None else None
            p = FamilyParams.double_star_path(int(g[0]), int(g[1]), int(g[2]), k)
        elif tag == "starlike":
            p = FamilyParams.starlike(int(g[0]), int(g[1]))
        else:
            p = FamilyParams.broom(int(g[0]), int(g[1]))
        try:
            p.validate()
        except FamilyError as exc:
            raise TreeFormatError(f"{src!r}: {exc}", 1, 1) from exc
        return p
    raise TreeFormatError(f"unrecognised family expression {src!r}", 1, 1)


def format_family(p: FamilyParams) -> str:
    kind = p.kind
    if kind is FamilyKind.Path:
        return f"P({p.n})"
    if kind is FamilyKind.Star:
        return f"S({p.n})"
    if kind is FamilyKind.Caterpillar:
        return f"CP({p.n}; {','.join(map(str, p.composition))})"
    if kind is FamilyKind.DoubleStarPath:
        return f"DSP({p.n}; {p.a},{p.b}; {p.k})"
    if kind is FamilyKind.SingleClusterCaterpillar:
        return f"CP({p.n},{p.k})^{p.s}"
    if kind is FamilyKind.BalancedStarlike:
        return f"SP({p.n},{p.q})"
    return f"BROOM({p.n},{p.delta})"


# ---------------------------------------------------------------------------
# transformations
# ---------------------------------------------------------------------------

def _check_spine(t: Tree, path: list[int]) -> None:
    if len(set(path)) != len(path):
        raise FamilyError("spine repeats a vertex")
    for x, y in zip(path, path[1:]):
        if not t.has_edge(x, y):
            raise FamilyError(f"spine is not a path: ({x}, {y}) is not an edge")


def branch_shift(t: Tree, path: list[int], from_index: int) -> Tree:
    """Move every branch hanging at spine vertex ``v_t`` over to ``v_{t+1}``.

    ``from_index`` is the 1-based position ``t`` on ``path`` (``path[0]`` is
    ``v_1``).  Branches are reattached by their root vertex, so their shapes
    are preserved.
    """
    _check_spine(t, path)
    k = len(path)
    if not 1 <= from_index < k:
        raise FamilyError(f"cannot shift from spine position {from_index}: need 1 <= t < k = {k}")
    on_path = set(path)
    src, dst = path[from_index - 1], path[from_index]
    roots = [x for x in t.neighbors(src) if x not in on_path]
    if not roots:
        raise FamilyError(f"empty branch at spine position {from_index}")
    moved = set(roots)
    edges = []
    for u, v in t.edges:
        if u == src and v in moved:
            edges.append((dst, v))
        elif v == src and u in moved:
            edges.append((u, dst))
        else:
            edges.append((u, v))
    return Tree(t.n, edges)


def edge_shift(p: FamilyParams) -> Tree:
    """Move one pendant from the ``b`` end of a double star path to the ``a`` end.

    The tree is built from ``p`` and then rewired in place of labels, so the
    result keeps the vertex ids of ``construct(p)``; it is isomorphic to the
    double star path with ``(a + 1, b - 1)``.
    """
    if p.kind is not FamilyKind.DoubleStarPath:
        raise FamilyError("edge shift applies to double star paths only")
    p.validate()
    if p.b < 1:
        raise FamilyError("edge shift needs b >= 1 pendants at the far end")
    t = construct(p)
    last_spine = p.k - 1
    # pendants of the far end were labelled last
    x = p.n - 1
    edges = [(0, x) if (u, v) == (last_spine, x) else (u, v) for u, v in t.edges]
    return Tree(t.n, edges)


def edge_move(t: Tree, u: int, v: int) -> Tree:
    """Contract edge ``uv`` into ``u`` and re-hang ``v`` as a pendant of ``u``.

    Both components of ``T - uv`` must have order at least 2.
    """
    if not t.has_edge(u, v):
        raise FamilyError(f"({u}, {v}) is not an edge")
    # size of v's side
    seen = {u, v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in t.neighbors(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    side_v = len(seen) - 1
    if side_v < 2 or t.n - side_v < 2:
        raise FamilyError("transformation requires both sides >= 2")
    edges = []
    for a, b in t.edges:
        if {a, b} == {u, v}:
            edges.append((a, b))
        elif a == v:
            edges.append((u, b))
        elif b == v:
            edges.append((a, u))
        else:
            edges.append((a, b))
    return Tree(t.n, edges)


def same_tree(p1: FamilyParams, p2: FamilyParams) -> bool:
    return is_isomorphic(construct(p1), construct(p2))
