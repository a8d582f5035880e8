"""Exact longest-trail search and Eulerian trail extraction.

A trail is a walk whose edges are all distinct; vertices may repeat and are
counted with multiplicity, so a trail with m edges has m+1 vertices.

Two exact engines back the queries.  The primary one exploits that a trail
with a given edge set exists iff that set is connected and has at most two
odd-degree vertices, so the longest trail of a component is its edge count
minus the smallest deletion set whose removal restores that property; the
deletion sets are enumerated smallest-first, which is fast precisely on the
dense graphs where plain search degenerates.  The secondary engine is
depth-first search over edge extensions (one start per twin class, branches
cut against the residual component's trail-edge bound); it serves as the
unpruned reference mode and takes over if the deletion enumeration exceeds
its budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .graph import (
    EulerKind,
    Graph,
    _bits,
    complement,
    edge_bearing_components,
    euler_classify,
    trail_edge_upper_bound,
    twin_classes,
)

# max deletion subsets examined before handing over to DFS
_DELETION_BUDGET = 500_000


@dataclass(frozen=True)
class Trail:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def from_vertices(seq) -> "Trail":
        vs = tuple(seq)
        es = tuple((a, b) if a < b else (b, a) for a, b in zip(vs, vs[1:]))
        return Trail(vs, es)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def closed(self) -> bool:
        return len(self.vertices) > 1 and self.vertices[0] == self.vertices[-1]

    def prefix(self, count: int) -> "Trail":
        """First ``count`` vertices; a prefix of a trail is a trail."""
        return Trail(self.vertices[:count], self.edges[: count - 1])

    def reversed(self) -> "Trail":
        return Trail(self.vertices[::-1], self.edges[::-1])


@dataclass(frozen=True)
class TrailResult:
    best_vertex_count: int
    witness: Trail


def trail_violation(g: Graph, trail: Trail) -> str | None:
    """First broken trail invariant, or None if ``trail`` is valid in ``g``."""
    if not trail.vertices:
        return "trail has no vertices"
    for v in trail.vertices:
        if not 0 <= v < g.n:
            return f"vertex {v} outside 0..{g.n - 1}"
    if len(trail.edges) != len(trail.vertices) - 1:
        return (
            f"edge count {len(trail.edges)} does not match "
            f"{len(trail.vertices)} vertices"
        )
    for i, (a, b) in enumerate(zip(trail.vertices, trail.vertices[1:])):
        lo, hi = (a, b) if a < b else (b, a)
        if trail.edges[i] != (lo, hi):
            return f"edge {i} is {trail.edges[i]}, expected {{{lo}, {hi}}}"
    if len(set(trail.edges)) != len(trail.edges):
        return "repeated edge"
    for u, v in trail.edges:
        if u == v:
            return f"self-loop at {u}"
        if not g.has_edge(u, v):
            return f"edge ({u}, {v}) not present in graph"
    return None


def is_trail_in(g: Graph, trail: Trail) -> bool:
    return trail_violation(g, trail) is None


def eulerian_trail(g: Graph, start: int | None = None) -> Trail:
    """Trail covering every edge exactly once (Hierholzer).

    Requires the graph to classify Eulerian or semi-Eulerian.  The result is
    closed iff the graph is Eulerian; for a semi-Eulerian graph it runs
    between the two odd-degree vertices.  Deterministic: lowest-id choices
    throughout.
    """
    cls = euler_classify(g)
    if cls.kind is EulerKind.NEITHER:
        state = "disconnected" if not cls.connected else "too many odd degrees"
        raise ValueError(f"graph has no edge-covering trail ({state})")
    if g.edge_count() == 0:
        return Trail((start if start is not None else 0,), ())
    odd = [v for v in range(g.n) if g.adj[v].bit_count() % 2]
    if start is None:
        start = odd[0] if odd else next(v for v in range(g.n) if g.adj[v])
    elif odd and start not in odd:
        raise ValueError(f"semi-Eulerian trail must start at an odd vertex, not {start}")
    elif not odd and not g.adj[start]:
        raise ValueError(f"start vertex {start} has no edges")

    rem = list(g.adj)
    stack = [start]
    out: list[int] = []
    while stack:
        v = stack[-1]
        if rem[v]:
            w = (rem[v] & -rem[v]).bit_length() - 1
            rem[v] ^= 1 << w
            rem[w] ^= 1 << v
            stack.append(w)
        else:
            out.append(stack.pop())
    out.reverse()
    return Trail.from_vertices(out)


def _residual_bound(rem: list[int], v: int) -> int:
    """Trail-edge bound of the residual component containing ``v``."""
    comp = frontier = 1 << v
    while frontier:
        nxt = 0
        for w in _bits(frontier):
            nxt |= rem[w]
        frontier = nxt & ~comp
        comp |= nxt
    edges = 0
    odd = 0
    for w in _bits(comp):
        d = rem[w].bit_count()
        edges += d
        odd += d & 1
    return (edges >> 1) - max(0, (odd >> 1) - 1)


def _search(g: Graph, target: int | None, prune: bool) -> tuple[int, tuple[int, ...]]:
    """DFS over edge extensions from one start per twin class.

    Returns (edges, vertex sequence) of the best trail found; if ``target``
    is given, stops at the first trail with that many edges (the sequence
    then has exactly target+1 vertices).
    """
    n = g.n
    rem = list(g.adj)
    eid = [[0] * n for _ in range(n)]
    idx = 0
    for u, v in g.edges():
        eid[u][v] = eid[v][u] = idx
        idx += 1

    best_edges = 0
    best_seq: tuple[int, ...] = (0,)
    if target is not None:
        stop_at = target
    else:
        # with pruning on, stopping at the structural bound proves optimality;
        # without it, only the trivial all-edges cap applies
        stop_at = trail_edge_upper_bound(g) if prune else g.edge_count()
    if stop_at == 0:
        return 0, best_seq
    dead: set[tuple[int, int]] = set()
    path = [0]
    used = 0

    def dfs(v: int, depth: int) -> bool:
        nonlocal best_edges, best_seq, used
        if depth > best_edges:
            best_edges = depth
            best_seq = tuple(path)
            if depth >= stop_at:
                return True
        if target is not None and (v, used) in dead:
            return False
        if prune:
            room = depth + _residual_bound(rem, v)
            if room <= best_edges if target is None else room < target:
                if target is not None:
                    dead.add((v, used))
                return False
        nbrs = rem[v]
        bit_v = 1 << v
        while nbrs:
            low = nbrs & -nbrs
            nbrs ^= low
            w = low.bit_length() - 1
            ebit = 1 << eid[v][w]
            rem[v] ^= low
            rem[w] ^= bit_v
            used ^= ebit
            path.append(w)
            hit = dfs(w, depth + 1)
            path.pop()
            used ^= ebit
            rem[v] |= low
            rem[w] |= bit_v
            if hit:
                return True
        if target is not None:
            dead.add((v, used))
        return False

    classes_seen = set()
    classes = twin_classes(g)
    for s in range(n):
        if classes[s] in classes_seen or not g.adj[s]:
            continue
        classes_seen.add(classes[s])
        path[:] = [s]
        if dfs(s, 0):
            break
    return best_edges, best_seq


def _component_deletion_search(
    n: int, rows: tuple[int, ...], comp: int, max_miss: int, budget: int
) -> tuple[int, Graph] | None | str:
    """Largest edge subset of one component that stays connected with at
    most two odd-degree vertices, found by removing d = 0, 1, ... edges.

    Returns (edge count, remainder graph), None if even max_miss removals
    cannot help, or "budget" when the enumeration would exceed ``budget``
    subsets and the caller should use DFS instead.
    """
    edges = []
    odd = 0
    for v in _bits(comp):
        row = rows[v]
        odd += row.bit_count() & 1
        for w in _bits(row >> (v + 1) << (v + 1)):
            edges.append((v, w))
    m = len(edges)
    spent = 0
    for d in range(max(0, odd // 2 - 1), min(max_miss, m - 1) + 1):
        spent += math.comb(m, d)
        if spent > budget:
            return "budget"
        for drop in combinations(range(m), d):
            trimmed = list(rows)
            for i in drop:
                u, v = edges[i]
                trimmed[u] ^= 1 << v
                trimmed[v] ^= 1 << u
            touched = 0
            odd_left = 0
            for v in _bits(comp):
                row = trimmed[v]
                if row:
                    touched |= 1 << v
                    odd_left += row.bit_count() & 1
            if odd_left > 2:
                continue
            seen = frontier = touched & -touched
            while frontier:
                nxt = 0
                for w in _bits(frontier):
                    nxt |= trimmed[w]
                frontier = nxt & ~seen
                seen |= nxt
            if seen == touched:
                keep = tuple(trimmed[v] if comp >> v & 1 else 0 for v in range(n))
                return m - d, Graph(n, keep)
    return None


def longest_trail(g: Graph, prune: bool = True) -> TrailResult:
    """Exact maximum-vertex trail with a witness; deterministic given g.

    ``prune=False`` bypasses every accelerator and runs the raw depth-first
    search; results are identical either way.
    """
    cls = euler_classify(g)
    if cls.traversable and g.edge_count() > 0:
        t = eulerian_trail(g)
        return TrailResult(t.vertex_count, t)
    if not prune:
        edges, seq = _search(g, None, False)
        return TrailResult(edges + 1, Trail.from_vertices(seq))
    best: tuple[int, Graph] | None = None
    for comp in edge_bearing_components(g):
        res = _component_deletion_search(g.n, g.adj, comp, g.n * g.n, _DELETION_BUDGET)
        if res == "budget":
            edges, seq = _search(g, None, True)
            return TrailResult(edges + 1, Trail.from_vertices(seq))
        assert res is not None  # d = m-1 leaves a single edge, always valid
        if best is None or res[0] > best[0]:
            best = res
    if best is None:
        return TrailResult(1, Trail((0,), ()))
    count, remainder = best
    t = eulerian_trail(remainder)
    assert t.edge_count == count
    return TrailResult(count + 1, t)


def find_long_trail(g: Graph, k: int) -> Trail | None:
    """Some trail with at least k vertices (exactly k after prefixing), or
    None if no trail that long exists; short-circuits on the first hit."""
    if k <= 1:
        return Trail((0,), ())
    need = k - 1
    if trail_edge_upper_bound(g) < need:
        return None
    cls = euler_classify(g)
    if cls.traversable:
        m = g.edge_count()
        return eulerian_trail(g).prefix(k) if m >= need else None
    for comp in edge_bearing_components(g):
        m_c = sum((g.adj[v] & comp).bit_count() for v in _bits(comp)) // 2
        if m_c < need:
            continue
        res = _component_deletion_search(g.n, g.adj, comp, m_c - need, _DELETION_BUDGET)
        if res == "budget":
            edges, seq = _search(g, need, True)
            if edges >= need:
                return Trail.from_vertices(seq).prefix(k)
            return None
        if res is not None and res[0] >= need:
            return eulerian_trail(res[1]).prefix(k)
    return None


def has_long_trail(g: Graph, k: int) -> bool:
    """True iff some trail in ``g`` has at least k vertices (with multiplicity)."""
    return find_long_trail(g, k) is not None


def pair_trail_count(g: Graph) -> int:
    """Max vertex count of a trail in ``g`` or in its complement."""
    return max(
        longest_trail(g).best_vertex_count,
        longest_trail(complement(g)).best_vertex_count,
    )
