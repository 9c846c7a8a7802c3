"""Classical baselines: Kosaraju SCCs, BFS distances, Floyd-Warshall.

These are the independent reference implementations the round engine is
checked against, and the comparison subjects of the benchmark harness.
All of them are pure functions of an immutable graph.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .graphs import Digraph, NodeId
from .partition import SccPartition

INF = math.inf


@dataclass(frozen=True)
class DistanceMatrix:
    """Shortest directed path lengths; unreachable pairs hold ``inf``."""

    n: int
    rows: tuple[tuple[float, ...], ...]

    def distance(self, u: int, v: int) -> float:
        return self.rows[u][v]

    def finite_diameter(self) -> int:
        """Largest finite entry; 0 when no pair is connected."""
        best = 0
        for row in self.rows:
            for d in row:
                if d != INF and d > best:
                    best = d
        return int(best)

    def in_eccentricity(self, v: int) -> int:
        """Largest finite distance from any node into ``v``."""
        best = 0
        for row in self.rows:
            d = row[v]
            if d != INF and d > best:
                best = d
        return int(best)


def _bfs_distances(adj: tuple[tuple[int, ...], ...], n: int, source: int) -> list[float]:
    dist = [INF] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du1 = dist[u] + 1
        for w in adj[u]:
            if dist[w] == INF:
                dist[w] = du1
                queue.append(w)
    return dist


def reach_set(g: Digraph, v: NodeId) -> set[NodeId]:
    """All nodes with a directed path to ``v``, including ``v`` itself."""
    g.check_node(v)
    dist = _bfs_distances(g.in_adj, g.n, v)
    return {u for u in range(g.n) if dist[u] != INF}


def all_pairs_bfs(g: Digraph) -> DistanceMatrix:
    """Exact unweighted shortest paths, one BFS per source."""
    if g.n < 1:
        raise ValueError("all_pairs_bfs requires a nonempty graph")
    rows = tuple(tuple(_bfs_distances(g.out_adj, g.n, s)) for s in range(g.n))
    return DistanceMatrix(n=g.n, rows=rows)


def bfs_finite_diameter(g: Digraph) -> int:
    """Largest finite shortest-path length, without storing the matrix."""
    if g.n < 1:
        raise ValueError("bfs_finite_diameter requires a nonempty graph")
    best = 0
    for s in range(g.n):
        m = max(d for d in _bfs_distances(g.out_adj, g.n, s) if d != INF)
        if m > best:
            best = m
    return int(best)


def floyd_warshall_diameter(g: Digraph) -> int:
    """Finite diameter via the cubic all-pairs relaxation, unit weights.

    Kept as a genuinely independent route to the same number as
    :func:`all_pairs_bfs`; also the classical subject of the diameter
    benchmark.
    """
    if g.n < 1:
        raise ValueError("floyd_warshall_diameter requires a nonempty graph")
    n = g.n
    dist = [[INF] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
    for u, v in g.edges:
        if u != v:
            dist[u][v] = 1
    for k in range(n):
        row_k = dist[k]
        for i in range(n):
            d_ik = dist[i][k]
            if d_ik == INF:
                continue
            row_i = dist[i]
            for j in range(n):
                nd = d_ik + row_k[j]
                if nd < row_i[j]:
                    row_i[j] = nd
    best = 0.0
    for row in dist:
        for d in row:
            if d != INF and d > best:
                best = d
    return int(best)


def scc_kosaraju(g: Digraph) -> SccPartition:
    """Exact SCC partition via two iterative depth-first passes.

    Iterative on explicit stacks, so arbitrarily deep graphs (e.g. a
    100k-node path) do not hit the recursion limit.
    """
    if g.n < 1:
        raise ValueError("scc_kosaraju requires a nonempty graph")
    n = g.n
    visited = [False] * n
    order: list[int] = []
    for s in range(n):
        if visited[s]:
            continue
        visited[s] = True
        stack: list[tuple[int, int]] = [(s, 0)]
        while stack:
            u, i = stack[-1]
            adj = g.out_adj[u]
            while i < len(adj) and visited[adj[i]]:
                i += 1
            if i < len(adj):
                stack[-1] = (u, i + 1)
                visited[adj[i]] = True
                stack.append((adj[i], 0))
            else:
                stack.pop()
                order.append(u)
    assigned = [False] * n
    components: list[list[int]] = []
    for s in reversed(order):
        if assigned[s]:
            continue
        comp = [s]
        assigned[s] = True
        work = [s]
        while work:
            u = work.pop()
            for w in g.in_adj[u]:
                if not assigned[w]:
                    assigned[w] = True
                    comp.append(w)
                    work.append(w)
        components.append(comp)
    return SccPartition.from_components(n, components)


def partitions_equal(a: SccPartition, b: SccPartition) -> bool:
    """Whether two partitions are the same family of sets."""
    if a.n != b.n:
        raise ValueError(f"partitions over different universes: {a.n} vs {b.n}")
    return set(a.components) == set(b.components)
