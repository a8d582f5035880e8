"""Isomorph-free graph enumeration and the exhaustive trail-Ramsey search.

Enumeration grows representatives one vertex at a time: every class on n
vertices arises from deleting a minimum-degree vertex, so it suffices to
extend each (n-1)-vertex representative by a new minimum-degree vertex and
deduplicate by canonical form.  The canonical form is the minimal
column-major upper-triangle bitstring over all placements that respect an
iterated degree partition (colour refinement); that restriction keeps the
form a complete isomorphism invariant while pruning the permutation search.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from . import __version__
from .graph import Graph, _bits, complement, twin_classes
from .graph6 import decode_graph6, encode_graph6
from .trails import has_long_trail, pair_trail_count

log = logging.getLogger(__name__)

MAX_ENUM_VERTICES = 9

# vertex count of the lone 1-vertex graph's longest trail; seeds the
# value(n-1) < k <= value(n) resolution rule at n = 2
_VALUE_1 = 1

_INF_CHUNK = 1 << 62


def _refined_colors(n: int, adj: tuple[int, ...]) -> list[int]:
    """Label-independent vertex colours: degree, iteratively refined by the
    multiset of neighbour colours until the partition stabilizes."""
    keys = [row.bit_count() for row in adj]
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    colors = [order[k] for k in keys]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(adj[v]))))
            for v in range(n)
        ]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _canonical_chunks(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical form: position p contributes the p adjacency bits towards
    already-placed vertices (earliest position = most significant bit)."""
    if n == 1:
        return (0,)
    colors = _refined_colors(n, adj)
    slot_color = sorted(colors)
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    twins = twin_classes(Graph(n, adj))

    best = [_INF_CHUNK] * n
    placed: list[int] = []
    placed_mask = 0

    def rec(p: int) -> None:
        nonlocal placed_mask
        if p == n:
            return
        cands = []
        tried = set()
        for v in by_color[slot_color[p]]:
            if placed_mask >> v & 1 or twins[v] in tried:
                continue
            tried.add(twins[v])
            chunk = 0
            row = adj[v]
            for u in placed:
                chunk = chunk << 1 | (row >> u & 1)
            cands.append((chunk, v))
        cands.sort()
        for chunk, v in cands:
            if chunk > best[p]:
                break
            if chunk < best[p]:
                best[p] = chunk
                for q in range(p + 1, n):
                    best[q] = _INF_CHUNK
            placed.append(v)
            placed_mask |= 1 << v
            rec(p + 1)
            placed.pop()
            placed_mask ^= 1 << v

    rec(0)
    return tuple(best)


def canonical_form(g: Graph) -> Graph:
    """Canonical representative of g's isomorphism class."""
    return _graph_from_chunks(g.n, _canonical_chunks(g.n, g.adj))


def _graph_from_chunks(n: int, chunks: tuple[int, ...]) -> Graph:
    rows = [0] * n
    for p in range(1, n):
        chunk = chunks[p]
        for q in range(p):
            if chunk >> (p - 1 - q) & 1:
                rows[p] |= 1 << q
                rows[q] |= 1 << p
    return Graph(n, tuple(rows))


@lru_cache(maxsize=None)
def _representatives(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)
    smaller = _representatives(n - 1)
    keys: set[tuple[int, ...]] = set()
    last = n - 1
    for g in smaller:
        degs = g.degrees()
        for nbrs in range(1 << last):
            new_deg = nbrs.bit_count()
            # the new vertex must attain the minimum degree: every class is
            # reachable this way (delete a min-degree vertex), and the filter
            # cuts the candidate load before canonicalization
            ok = True
            for v in range(last):
                if degs[v] + (nbrs >> v & 1) < new_deg:
                    ok = False
                    break
            if not ok:
                continue
            rows = [row | ((nbrs >> i & 1) << last) for i, row in enumerate(g.adj)]
            rows.append(nbrs)
            keys.add(_canonical_chunks(n, tuple(rows)))
    return tuple(_graph_from_chunks(n, key) for key in sorted(keys))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class on n vertices, in canonical
    order.  Supported for 1 <= n <= 9."""
    if not 1 <= n <= MAX_ENUM_VERTICES:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_VERTICES}, got {n}")
    yield from _representatives(n)


def _min_pair_count(graphs: list[Graph]) -> int | None:
    """Min of pair_trail_count over ``graphs``, skipping a graph as soon as
    either side reaches the running minimum."""
    cur: int | None = None
    for g in graphs:
        if cur is not None and (
            has_long_trail(g, cur) or has_long_trail(complement(g), cur)
        ):
            continue
        cur = pair_trail_count(g)
    return cur


def _value_worker(lines: list[str]) -> int | None:
    return _min_pair_count([decode_graph6(s) for s in lines])


def min_pair_trail_count(n: int, jobs: int = 1, use_cache: bool = True) -> int:
    """The minimum over all n-vertex graphs of the max trail vertex count on
    either side of the complementary pair; 2 <= n <= 9."""
    if not 2 <= n <= MAX_ENUM_VERTICES:
        raise ValueError(f"supported range is 2 <= n <= {MAX_ENUM_VERTICES}, got {n}")
    if use_cache:
        cached = _cache_read(n)
        if cached is not None:
            return cached
    graphs = list(enumerate_graphs(n))
    if jobs > 1 and len(graphs) > 4 * jobs:
        lines = [encode_graph6(g) for g in graphs]
        step = (len(lines) + jobs - 1) // jobs
        parts = [lines[i : i + step] for i in range(0, len(lines), step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            minima = [m for m in pool.map(_value_worker, parts) if m is not None]
        result = min(minima)
    else:
        result = _min_pair_count(graphs)
    assert result is not None
    if use_cache:
        _cache_write(n, result)
    return result


@dataclass(frozen=True)
class RamseyTable:
    """value(n) per vertex count plus the trail Ramsey numbers it resolves."""

    max_n: int
    values: dict[int, int]
    ramsey: dict[int, int]

    @property
    def max_resolved_k(self) -> int:
        return self.values[self.max_n]

    def to_json_dict(self) -> dict:
        return {
            "version": __version__,
            "max_n": self.max_n,
            "value": {str(n): v for n, v in sorted(self.values.items())},
            "ramsey": {str(k): v for k, v in sorted(self.ramsey.items())},
            "max_resolved_k": self.max_resolved_k,
        }


def ramsey_table(max_n: int, jobs: int = 1, use_cache: bool = True) -> RamseyTable:
    """Ramsey numbers of trails for every k the search resolves.

    R(k) = n exactly when value(n-1) < k <= value(n); values of k above
    value(max_n) stay unresolved rather than extrapolated.
    """
    if not 2 <= max_n <= MAX_ENUM_VERTICES:
        raise ValueError(f"supported range is 2 <= max_n <= {MAX_ENUM_VERTICES}")
    values = {
        n: min_pair_trail_count(n, jobs=jobs, use_cache=use_cache)
        for n in range(2, max_n + 1)
    }
    ramsey: dict[int, int] = {}
    prev = _VALUE_1
    for n in range(2, max_n + 1):
        for k in range(prev + 1, values[n] + 1):
            ramsey[k] = n
        prev = max(prev, values[n])
    return RamseyTable(max_n, values, ramsey)


def cache_dir() -> Path:
    env = os.environ.get("RAMSEY_TRAILS_CACHE")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME", os.path.join(os.path.expanduser("~"), ".cache"))
    return Path(base) / "ramsey-trails"


def _cache_read(n: int) -> int | None:
    path = cache_dir() / f"value_{n}.json"
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("version") != __version__ or data.get("n") != n:
        log.info("ignoring stale cache entry %s", path)
        return None
    v = data.get("value")
    return v if isinstance(v, int) else None


def _cache_write(n: int, value: int) -> None:
    d = cache_dir()
    try:
        d.mkdir(parents=True, exist_ok=True)
        payload = {"version": __version__, "n": n, "value": value}
        (d / f"value_{n}.json").write_text(json.dumps(payload))
    except OSError as exc:  # cache is best-effort
        log.warning("could not write cache: %s", exc)
