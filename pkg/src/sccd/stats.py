"""Summary statistics of a digraph, computed with the classical baselines."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Digraph, max_in_degree
from .oracles import bfs_finite_diameter, scc_kosaraju


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    d_in_max: int
    finite_diameter: int
    num_sccs: int


def graph_stats(g: Digraph) -> GraphStats:
    """Node/edge counts, max in-degree, BFS finite diameter, Kosaraju SCC count."""
    if g.n < 1:
        raise ValueError("graph_stats requires a nonempty graph")
    return GraphStats(
        n=g.n,
        m=g.m,
        d_in_max=max_in_degree(g),
        finite_diameter=bfs_finite_diameter(g),
        num_sccs=scc_kosaraju(g).num_components,
    )
