"""
Edge-additive topological indices ``F(T) = sum_e f(mu(e))`` and their oracles.

Each index is described by an :class:`IndexSpec`; :func:`contribution` gives
its per-edge function ``f(x, n)`` and :func:`index_value` folds it over the
edge division vector.  Pairwise oracles work from BFS distances only and share
no code with the edge-division machinery.
"""
from __future__ import annotations

import enum
import itertools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .division import edge_division_vector
from .families import FamilyKind, FamilyParams
from .tree import Tree

__all__ = [
    "IndexKind",
    "ValueKind",
    "MonotoneClass",
    "IndexSpec",
    "contribution",
    "index_value",
    "parse_index",
    "monotone_class",
    "distance_matrix",
    "wiener_bruteforce",
    "pairwise_index_oracle",
    "steiner_bruteforce",
    "closed_form_wiener",
    "ClosedFormError",
    "wiener_min_caterpillar",
    "wiener_max_caterpillar",
    "wiener_starlike",
    "wiener_max_by_pendants",
    "wiener_broom",
    "broom_case",
    "values_close",
]

DEFAULT_TOLERANCE = 1e-9


class IndexKind(enum.Enum):
    Wiener = "wiener"
    ModifiedWiener = "mwiener"
    VariableWiener = "vwiener"
    SteinerKWiener = "steiner"
    HyperWienerEdgeForm = "hyperwiener-edge"
    HyperWienerPairwise = "hyperwiener-pairwise"
    WienerHosoya = "wiener-hosoya"
    DegreeDistance = "degree-distance"
    Gutman = "gutman"
    ABC2 = "abc2"


class ValueKind(enum.Enum):
    ExactInteger = "exact-integer"
    ExactRational = "exact-rational"
    Floating = "floating"


class MonotoneClass(enum.Enum):
    Increasing = "Increasing"
    Decreasing = "Decreasing"
    Neither = "Neither"


_EXACT_INT = {IndexKind.Wiener, IndexKind.SteinerKWiener, IndexKind.WienerHosoya,
              IndexKind.DegreeDistance, IndexKind.Gutman}


@dataclass(frozen=True)
class IndexSpec:
    kind: IndexKind
    lam: float | None = None
    k: int | None = None

    def __post_init__(self):
        if self.kind in (IndexKind.ModifiedWiener, IndexKind.VariableWiener):
            if self.lam is None or not math.isfinite(self.lam):
                raise ValueError(f"{self.kind.value} needs a finite lambda, got {self.lam}")
        if self.kind is IndexKind.SteinerKWiener:
            if self.k is None or self.k < 2:
                raise ValueError(f"steiner index needs integer k >= 2, got {self.k}")

    @property
    def value_kind(self) -> ValueKind:
        if self.kind in _EXACT_INT:
            return ValueKind.ExactInteger
        if self.kind is IndexKind.HyperWienerPairwise:
            return ValueKind.ExactInteger
        if self.kind is IndexKind.HyperWienerEdgeForm:
            return ValueKind.ExactRational
        return ValueKind.Floating

    @property
    def edge_additive(self) -> bool:
        return self.kind is not IndexKind.HyperWienerPairwise

    @property
    def label(self) -> str:
        if self.kind in (IndexKind.ModifiedWiener, IndexKind.VariableWiener):
            return f"{self.kind.value}:{self.lam:g}"
        if self.kind is IndexKind.SteinerKWiener:
            return f"steiner:{self.k}"
        return self.kind.value

    def __str__(self) -> str:
        return self.label


def parse_index(text: str) -> IndexSpec:
    """Parse ``name[:param]``, e.g. ``wiener``, ``mwiener:-0.5`` or ``steiner:3``."""
    name, _, param = text.strip().partition(":")
    try:
        kind = IndexKind(name.lower())
    except ValueError:
        known = ", ".join(k.value for k in IndexKind)
        raise ValueError(f"unknown index {name!r} (known: {known})") from None
    if kind in (IndexKind.ModifiedWiener, IndexKind.VariableWiener):
        if not param:
            raise ValueError(f"{name} needs a parameter, e.g. {name}:2")
        return IndexSpec(kind, lam=float(param))
    if kind is IndexKind.SteinerKWiener:
        if not param:
            raise ValueError("steiner needs a parameter, e.g. steiner:3")
        return IndexSpec(kind, k=int(param))
    if param:
        raise ValueError(f"{name} takes no parameter")
    return IndexSpec(kind)


def contribution(spec: IndexSpec, x: int, n: int):
    """Per-edge contribution for an edge whose smaller side has ``x`` vertices."""
    y = n - x
    kind = spec.kind
    if kind is IndexKind.Wiener:
        return x * y
    if kind is IndexKind.ModifiedWiener:
        return float(x * y) ** spec.lam
    if kind is IndexKind.VariableWiener:
        lam = spec.lam
        return float(n) ** lam - float(x) ** lam - float(y) ** lam
    if kind is IndexKind.SteinerKWiener:
        k = spec.k
        return math.comb(n, k) - math.comb(x, k) - math.comb(y, k)
    if kind is IndexKind.HyperWienerEdgeForm:
        return Fraction(x * y, 2) + Fraction((x * y) ** 2, 2)
    if kind is IndexKind.WienerHosoya:
        return x * y + (x - 1) * (y - 1)
    if kind is IndexKind.DegreeDistance:
        return 4 * x * y - n
    if kind is IndexKind.Gutman:
        return 4 * x * y - (2 * n - 1)
    if kind is IndexKind.ABC2:
        return math.sqrt(n - 2) / math.sqrt(x * y)
    raise ValueError(f"{kind.value} has no edge contribution function")


def index_value(t: Tree, spec: IndexSpec):
    """Evaluate ``spec`` on ``t``.

    Integer kinds return ``int``, the edge form of hyper-Wiener returns a
    ``Fraction``, everything parametrised by a real returns ``float``.
    """
    n = t.n
    if spec.kind is IndexKind.HyperWienerPairwise:
        return pairwise_index_oracle(t, spec.kind)
    if spec.kind is IndexKind.SteinerKWiener and spec.k > n:
        raise ValueError(f"steiner k={spec.k} exceeds n={n}")
    if n == 1:
        return 0
    if spec.kind is IndexKind.ABC2 and n == 2:
        return 0.0
    r = edge_division_vector(t).r
    total = 0
    for i, count in enumerate(r, start=1):
        if count:
            total += count * contribution(spec, i, n)
    if spec.value_kind is ValueKind.Floating:
        return float(total)
    return total


def values_close(a, b, tol: float = DEFAULT_TOLERANCE) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return math.isclose(a, b, rel_tol=tol, abs_tol=tol)
    return a == b


def monotone_class(spec: IndexSpec, n: int, tol: float = DEFAULT_TOLERANCE) -> MonotoneClass:
    """Classify ``f`` on ``1..floor(n/2)`` as strictly increasing, decreasing or neither."""
    if spec.kind is IndexKind.HyperWienerPairwise:
        return MonotoneClass.Neither
    if n < 4:
        raise ValueError("monotone class needs n >= 4")
    vals = [contribution(spec, x, n) for x in range(1, n // 2 + 1)]
    if spec.value_kind is ValueKind.Floating:
        def gt(a, b):
            return a > b and not math.isclose(a, b, rel_tol=tol, abs_tol=tol)
    else:
        def gt(a, b):
            return a > b
    pairs = list(zip(vals, vals[1:]))
    if all(gt(b, a) for a, b in pairs):
        return MonotoneClass.Increasing
    if all(gt(a, b) for a, b in pairs):
        return MonotoneClass.Decreasing
    return MonotoneClass.Neither


# ---------------------------------------------------------------------------
# pairwise oracles
# ---------------------------------------------------------------------------

def distance_matrix(t: Tree) -> list[list[int]]:
    n = t.n
    adj = t.adjacency
    out = []
    for s in range(n):
        d = [-1] * n
        d[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if d[y] < 0:
                    d[y] = d[x] + 1
                    q.append(y)
        out.append(d)
    return out


def wiener_bruteforce(t: Tree) -> int:
    """Sum of distances over unordered vertex pairs, by BFS from every vertex."""
    d = distance_matrix(t)
    return sum(d[u][v] for u in range(t.n) for v in range(u + 1, t.n))


def pairwise_index_oracle(t: Tree, kind) -> int:
    """Direct pair summation for ``HyperWienerPairwise``, ``DegreeDistancePairwise``
    or ``GutmanPairwise`` (also accepts the matching :class:`IndexKind`)."""
    name = kind.value if isinstance(kind, IndexKind) else str(kind)
    key = name.lower().replace("-", "").replace("_", "").replace("pairwise", "")
    d = distance_matrix(t)
    deg = t.degrees()
    n = t.n
    pairs = ((u, v) for u in range(n) for v in range(u + 1, n))
    if key == "hyperwiener":
        return sum(d[u][v] * (d[u][v] + 1) // 2 for u, v in pairs)
    if key == "degreedistance":
        return sum((deg[u] + deg[v]) * d[u][v] for u, v in pairs)
    if key == "gutman":
        return sum(deg[u] * deg[v] * d[u][v] for u, v in pairs)
    raise ValueError(f"no pairwise oracle for {name!r}")


def steiner_bruteforce(t: Tree, k: int) -> int:
    """Sum over all ``k``-subsets of the size (edge count) of the smallest
    subtree containing the subset, found by repeatedly pruning leaves that are
    not in the subset."""
    n = t.n
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    adj = [set(a) for a in t.adjacency]
    total = 0
    for subset in itertools.combinations(range(n), k):
        keep = set(subset)
        deg = [len(a) for a in adj]
        alive = [True] * n
        stack = [v for v in range(n) if deg[v] <= 1 and v not in keep]
        removed = 0
        while stack:
            v = stack.pop()
            if not alive[v]:
                continue
            alive[v] = False
            removed += 1
            for y in adj[v]:
                if alive[y]:
                    deg[y] -= 1
                    if deg[y] <= 1 and y not in keep:
                        stack.append(y)
        total += (n - removed) - 1
    return total


# ---------------------------------------------------------------------------
# closed forms for the Wiener index of extremal families
# ---------------------------------------------------------------------------

class ClosedFormError(ValueError):
    pass


def _integral(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"closed form produced non-integer {x}")
    return int(x)


def wiener_min_caterpillar(n: int, k: int) -> int:
    """Wiener index of the spine-centre cluster caterpillar on ``k`` spine vertices."""
    if not 2 <= k <= n:
        raise ClosedFormError(f"need 2 <= k <= n, got n={n}, k={k}")
    F = Fraction
    base = -F(k ** 3, 12) + F(n * k * k, 4) - k * n
    if k % 2:
        return _integral(base + F(13 * k, 12) + n * n - F(5 * n, 4))
    return _integral(base + F(5 * k, 6) + n * n - n)


def wiener_max_caterpillar(n: int, k: int) -> int:
    """Wiener index of the balanced double star path with spine length ``k``."""
    if not 2 <= k <= n:
        raise ClosedFormError(f"need 2 <= k <= n, got n={n}, k={k}")
    F = Fraction
    base = -F(k ** 3, 12) + F(k * k, 4) + F(k * n * n, 4) - k * n + F(3 * n * n, 4) - n
    if (n - k) % 2 == 0:
        return _integral(base + F(5 * k, 6))
    return _integral(base + F(7 * k, 12) + F(1, 4))


def wiener_starlike(n: int, q: int) -> int:
    if not 3 <= q <= n - 1:
        raise ClosedFormError(f"need 3 <= q <= n-1, got n={n}, q={q}")
    s, r = divmod(n - 1, q)
    F = Fraction
    val = (F(3 * q - 2, 6) * q * s ** 3
           + (F(q * q, 2) + F(3 * q * r, 2) - r) * s * s
           + (r * r + F(3 * q * r, 2) + F(q, 3) - r) * s
           + r * r)
    return _integral(val)


def wiener_max_by_pendants(n: int, q: int) -> int:
    """Wiener index of the balanced double star path with ``q`` pendants."""
    if not 2 <= q <= n - 1:
        raise ClosedFormError(f"need 2 <= q <= n-1, got n={n}, q={q}")
    F = Fraction
    base = F(n ** 3, 6) - F(n * q * q, 4) + F(n * q, 2) + F(q ** 3, 12) + F(q * q, 4)
    if q % 2 == 0:
        return _integral(base - F(n, 6) - F(5 * q, 6))
    return _integral(base - F(5 * n, 12) - F(7 * q, 12) + F(1, 4))


def broom_case(n: int, delta: int) -> str:
    """Which branch of the broom formula applies.

    Returns ``"even-middle"``, ``"odd-lower"``, ``"odd-upper"`` or ``"outer"``.
    The outer branch is stated with a conjunction that no ``delta`` satisfies;
    it is evaluated here for every ``delta`` outside the middle values.
    """
    if n % 2 == 0 and n >= 4 and delta == n // 2:
        return "even-middle"
    if n % 2 == 1 and n >= 5 and delta == n // 2:
        return "odd-lower"
    if n % 2 == 1 and n >= 5 and delta == (n + 1) // 2:
        return "odd-upper"
    return "outer"


def wiener_broom(n: int, delta: int, case: str | None = None) -> int:
    if not 3 <= delta <= n - 1:
        raise ClosedFormError(f"need 3 <= delta <= n-1, got n={n}, delta={delta}")
    F = Fraction
    case = case or broom_case(n, delta)
    if case == "even-middle":
        val = F(n ** 3, 12) + F(5 * n * n, 8) - F(19 * n, 12) + 1
    elif case == "odd-lower":
        val = F(n ** 3, 12) + F(3 * n * n, 4) - F(25 * n, 12) + F(5, 4)
    elif case == "odd-upper":
        val = F(n ** 3, 12) + F(n * n, 2) - F(13 * n, 12) + F(1, 2)
    elif case == "outer":
        d = delta
        val = F(d ** 3, 3) - F((n + 1) * d * d, 2) + F((9 * n - 5) * d, 6) + F(n ** 3, 6) - F(7 * n, 6) + 1
    else:
        raise ClosedFormError(f"unknown broom case {case!r}")
    return _integral(val)


def closed_form_wiener(p: FamilyParams) -> int:
    """Closed-form Wiener index for the extremal families that have one.

    Accepts the spine-centre cluster caterpillar, the balanced double star
    path, the balanced starlike tree and the broom.
    """
    kind, n = p.kind, p.n
    if kind is FamilyKind.SingleClusterCaterpillar:
        if p.s != (p.k + 1) // 2:
            raise ClosedFormError(f"cluster must sit at the spine centre s={(p.k + 1) // 2}, got s={p.s}")
        return wiener_min_caterpillar(n, p.k)
    if kind is FamilyKind.DoubleStarPath:
        m = n - p.k
        if sorted((p.a, p.b)) != [m // 2, m - m // 2]:
            raise ClosedFormError(f"double star path must be balanced, got a={p.a}, b={p.b}")
        return wiener_max_caterpillar(n, p.k)
    if kind is FamilyKind.BalancedStarlike:
        return wiener_starlike(n, p.q)
    if kind is FamilyKind.Broom:
        return wiener_broom(n, p.delta)
    raise ClosedFormError(f"no closed form for {kind.value}")
