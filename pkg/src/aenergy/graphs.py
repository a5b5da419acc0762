"""Simple undirected graphs, named graph families, and scalar invariants.

Vertices are labeled 0..n-1. Edges are kept as a lexicographically sorted
tuple of (u, v) pairs with u < v; this normalized order is the contract for
line-graph vertex labeling. Family generators use fixed labelings (hub first
for stars, wheels and friendship graphs; path order elsewhere) so spectra and
derived graphs are reproducible run to run.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class InvalidEdge(ValueError):
    """Edge endpoint out of range, or a self-loop."""


class InvalidFamilyParam(ValueError):
    """Family parameters violate the family's constraints."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus normalized edge tuple."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency_lists(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class DegreeSummary:
    """Degree sequence with the derived scalars most bounds consume."""

    degrees: tuple[int, ...]
    max_degree: int
    min_degree: int
    zagreb1: int
    isolated_count: int
    pendant_count: int


@dataclass(frozen=True)
class FamilySpec:
    """A named family tag plus its integer parameters."""

    family: str
    params: tuple[int, ...]


def make_graph(n: int, edges) -> Graph:
    """Build a Graph from any iterable of vertex pairs.

    Pairs are normalized to u < v and deduplicated. Raises InvalidEdge for
    out-of-range endpoints or self-loops.
    """
    if n < 0:
        raise InvalidEdge(f"vertex count must be non-negative, got {n}")
    normalized = set()
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge {(u, v)} out of range for n={n}")
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        normalized.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(normalized)))


# --- named families ---------------------------------------------------------


def _path(k: int) -> Graph:
    return make_graph(k, [(i, i + 1) for i in range(k - 1)])


def _cycle(k: int) -> Graph:
    return make_graph(k, [(i, (i + 1) % k) for i in range(k)])


def _complete(a: int) -> Graph:
    return make_graph(a, [(i, j) for i in range(a) for j in range(i + 1, a)])


def _complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _star(a: int) -> Graph:
    # S_a is the star on a vertices (one hub, a-1 leaves), hub labeled 0.
    return make_graph(a, [(0, i) for i in range(1, a)])


def _double_star(a: int, b: int) -> Graph:
    # Centers 0 and 1 joined; a leaves on center 0, b leaves on center 1.
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return make_graph(a + b + 2, edges)


def _wheel(k: int) -> Graph:
    # Hub 0 joined to every vertex of the rim cycle 1..k-1.
    edges = [(0, i) for i in range(1, k)]
    edges += [(i, i % (k - 1) + 1) for i in range(1, k)]
    return make_graph(k, edges)


def _ladder(k: int) -> Graph:
    # Two k-vertex rails 0..k-1 and k..2k-1 plus k rungs.
    edges = [(i, i + 1) for i in range(k - 1)]
    edges += [(k + i, k + i + 1) for i in range(k - 1)]
    edges += [(i, k + i) for i in range(k)]
    return make_graph(2 * k, edges)


def _book(k: int) -> Graph:
    # k quadrilateral pages sharing the spine edge {0, 1}.
    edges = [(0, 1)]
    for i in range(k):
        a, b = 2 + 2 * i, 3 + 2 * i
        edges += [(0, a), (a, b), (b, 1)]
    return make_graph(2 * k + 2, edges)


def _friendship(k: int) -> Graph:
    # k triangles sharing the hub 0.
    edges = []
    for i in range(k):
        a, b = 1 + 2 * i, 2 + 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return make_graph(2 * k + 1, edges)


def _comb(a: int, b: int) -> Graph:
    # Path 0..a-1 with pendants hung on the b lowest-index path vertices.
    edges = [(i, i + 1) for i in range(a - 1)]
    edges += [(j, a + j) for j in range(b)]
    return make_graph(a + b, edges)


# family -> (arity, minimum parameter values, builder)
_FAMILIES = {
    "path": (1, (1,), _path),
    "cycle": (1, (3,), _cycle),
    "complete": (1, (1,), _complete),
    "complete_bipartite": (2, (1, 1), _complete_bipartite),
    "star": (1, (1,), _star),
    "double_star": (2, (1, 1), _double_star),
    "wheel": (1, (4,), _wheel),
    "ladder": (1, (1,), _ladder),
    "book": (1, (1,), _book),
    "friendship": (1, (1,), _friendship),
    "comb": (2, (1, 0), _comb),
}

FAMILY_TAGS = tuple(sorted(_FAMILIES))


def validate_family_spec(spec: FamilySpec) -> None:
    """Raise InvalidFamilyParam unless the spec satisfies its family's constraints."""
    if spec.family not in _FAMILIES:
        raise InvalidFamilyParam(f"unknown family tag {spec.family!r}")
    arity, minima, _ = _FAMILIES[spec.family]
    if len(spec.params) != arity:
        raise InvalidFamilyParam(
            f"{spec.family} takes {arity} parameter(s), got {len(spec.params)}"
        )
    for value, lo in zip(spec.params, minima):
        if value < lo:
            raise InvalidFamilyParam(
                f"{spec.family} parameter {value} below minimum {lo}"
            )
    if spec.family == "comb":
        a, b = spec.params
        if b > a:
            raise InvalidFamilyParam(f"comb requires b <= a, got a={a}, b={b}")


def generate_family(spec: FamilySpec) -> Graph:
    """Build the named family member with its conventional labeling."""
    validate_family_spec(spec)
    _, _, builder = _FAMILIES[spec.family]
    return builder(*spec.params)


# --- invariants -------------------------------------------------------------


def degree_summary(g: Graph) -> DegreeSummary:
    """Degree sequence plus max/min degree, first Zagreb index, and the
    isolated- and pendant-vertex counts."""
    degrees = [0] * g.n
    for u, v in g.edges:
        degrees[u] += 1
        degrees[v] += 1
    assert sum(degrees) == 2 * g.m
    return DegreeSummary(
        degrees=tuple(degrees),
        max_degree=max(degrees, default=0),
        min_degree=min(degrees, default=0),
        zagreb1=sum(d * d for d in degrees),
        isolated_count=sum(1 for d in degrees if d == 0),
        pendant_count=sum(1 for d in degrees if d == 1),
    )


def line_graph(g: Graph) -> Graph:
    """Line graph: vertex i is the i-th edge of g in normalized edge order;
    two vertices are adjacent when their edges share an endpoint."""
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(g.edges):
        incident[u].append(idx)
        incident[v].append(idx)
    edges = []
    for ids in incident:
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                edges.append((ids[i], ids[j]))
    # Two distinct edges of a simple graph share at most one endpoint, so no
    # pair is generated twice.
    return Graph(g.m, tuple(sorted(edges)))


def connectivity(g: Graph) -> tuple[bool, int | None]:
    """Breadth-first connectivity check; diameter is None when disconnected."""
    if g.n == 0:
        return True, 0
    adj = g.adjacency_lists()

    def eccentricity(start: int) -> int | None:
        dist = [-1] * g.n
        dist[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if min(dist) < 0:
            return None
        return max(dist)

    first = eccentricity(0)
    if first is None:
        return False, None
    diameter = first
    for start in range(1, g.n):
        ecc = eccentricity(start)
        diameter = max(diameter, ecc)  # type: ignore[type-var]
    return True, diameter


def adjacency_rank(g: Graph) -> int:
    """Exact rank of the 0/1 adjacency matrix over the rationals.

    Uses fraction-free (Bareiss) elimination on Python integers, so there is
    no floating-point tolerance involved.
    """
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        rows[u][v] = 1
        rows[v][u] = 1
    rank = 0
    prev = 1
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, n):
            for j in range(c + 1, n):
                num = rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j]
                quot, rem = divmod(num, prev)
                if rem:  # Bareiss division is exact; a remainder is a bug
                    raise ArithmeticError("inexact division in rank elimination")
                rows[i][j] = quot
            rows[i][c] = 0
        prev = rows[r][c]
        r += 1
        rank += 1
        if r == n:
            break
    return rank
