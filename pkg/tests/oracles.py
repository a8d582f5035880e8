"""Independent brute-force oracles used only by the test suite.

Deliberately simple and slow; nothing here shares code paths with the
package's search, classification, or canonicalization machinery.
"""

from __future__ import annotations

from itertools import combinations, permutations

from ramsey_trails.graph import Graph


def naive_longest_trail(g: Graph) -> int:
    """Max vertex count over all trails, by enumerating every edge-distinct
    walk from every start vertex."""
    edges = list(g.edges())
    by_vertex: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for i, (u, v) in enumerate(edges):
        by_vertex[u].append(i)
        by_vertex[v].append(i)

    best = 1

    def walk(v: int, used: set[int], length: int) -> None:
        nonlocal best
        best = max(best, length)
        for i in by_vertex[v]:
            if i in used:
                continue
            a, b = edges[i]
            used.add(i)
            walk(b if v == a else a, used, length + 1)
            used.remove(i)

    for s in range(g.n):
        walk(s, set(), 1)
    return best


def naive_has_all_edge_trail(g: Graph, closed: bool) -> bool:
    """Does some single trail cover every edge (and close up, if asked)?"""
    edges = list(g.edges())
    if not edges:
        return True

    def walk(v: int, used: set[int], start: int) -> bool:
        if len(used) == len(edges):
            return v == start if closed else True
        for i, (a, b) in enumerate(edges):
            if i in used or v not in (a, b):
                continue
            used.add(i)
            if walk(b if v == a else a, used, start):
                return True
            used.remove(i)
        return False

    return any(walk(s, set(), s) for s in range(g.n))


def canonical_edge_set(g: Graph) -> tuple[tuple[int, int], ...]:
    """Min-over-all-permutations canonical edge list (brute force)."""
    best = None
    for perm in permutations(range(g.n)):
        relabeled = tuple(
            sorted(
                (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                for u, v in g.edges()
            )
        )
        if best is None or relabeled < best:
            best = relabeled
    return best


def count_isomorphism_classes(n: int) -> int:
    """Number of non-isomorphic graphs on n vertices by labeled enumeration
    plus brute-force canonical deduplication.  Feasible for n <= 6."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        seen.add(canonical_edge_set(g))
    return len(seen)
