"""Small simple undirected graphs with bitmask adjacency rows.

Vertices are 0-based ints.  Row ``adj[i]`` is an int whose bit ``j`` is set
iff the edge {i, j} is present, so neighbourhood operations are single int
ops and graphs hash/compare structurally.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class EulerKind(enum.Enum):
    EULERIAN = "eulerian"
    SEMI_EULERIAN = "semi-eulerian"
    NEITHER = "neither"


@dataclass(frozen=True)
class EulerClass:
    kind: EulerKind
    connected: bool

    @property
    def traversable(self) -> bool:
        """True iff a single trail can cover every edge."""
        return self.kind is not EulerKind.NEITHER


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} has bits outside 0..{self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
        for i in range(self.n):
            for j in _bits(self.adj[i]):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge ({u}, {v}) for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @staticmethod
    def complete(n: int) -> "Graph":
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << i) for i in range(n)))

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n)

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def cycle(n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.adj[v])

    def induced(self, vertices: list[int]) -> "Graph":
        """Induced subgraph; vertex i of the result is vertices[i]."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = [0] * len(vertices)
        for i, v in enumerate(vertices):
            for w in _bits(self.adj[v]):
                if w in pos:
                    rows[i] |= 1 << pos[w]
        return Graph(len(vertices), tuple(rows))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << i) for i, row in enumerate(g.adj)))


def edge_bearing_components(g: Graph) -> list[int]:
    """Vertex masks of connected components that contain at least one edge."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1 or not g.adj[v]:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for w in _bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    return comps


def euler_classify(g: Graph) -> EulerClass:
    """Classify the edge-bearing part of ``g``.

    Isolated vertices are ignored: the classification describes the part of
    the graph that actually carries edges.  An edgeless graph counts as
    Eulerian (the empty closed trail covers all zero edges).
    """
    comps = edge_bearing_components(g)
    if not comps:
        return EulerClass(EulerKind.EULERIAN, True)
    connected = len(comps) == 1
    if not connected:
        return EulerClass(EulerKind.NEITHER, False)
    odd = sum(1 for row in g.adj if row.bit_count() % 2 == 1)
    if odd == 0:
        return EulerClass(EulerKind.EULERIAN, True)
    if odd == 2:
        return EulerClass(EulerKind.SEMI_EULERIAN, True)
    return EulerClass(EulerKind.NEITHER, True)


def trail_edge_upper_bound(g: Graph) -> int:
    """Upper bound on the number of edges of any trail in ``g``.

    Per edge-bearing component: a component with 2t odd-degree vertices
    (t >= 1) splits into at least t edge-disjoint trails, so a single trail
    misses at least t-1 of its edges.  The bound is the max over components
    of |E_c| - max(0, odd_c/2 - 1); it never undercuts the true optimum.
    """
    best = 0
    for comp in edge_bearing_components(g):
        edges = 0
        odd = 0
        for v in _bits(comp):
            d = (g.adj[v] & comp).bit_count()
            edges += d
            odd += d % 2
        edges //= 2
        best = max(best, edges - max(0, odd // 2 - 1))
    return best


def twin_classes(g: Graph) -> list[int]:
    """Map each vertex to a class id; same id means the two vertices are
    twins (N(u)-{v} == N(v)-{u}), hence swappable by an automorphism."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    groups: dict[int, int] = {}
    for v in range(g.n):
        for key in (g.adj[v], g.adj[v] | (1 << v)):
            if key in groups:
                parent[find(v)] = find(groups[key])
            else:
                groups[key] = v
    return [find(v) for v in range(g.n)]


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices (2^C(n,2) of them); test-sized n only."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in _bits(mask)])
