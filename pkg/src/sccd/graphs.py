"""Directed-graph data model and edge-list text format.

A :class:`Digraph` is immutable after construction: node ids are dense
integers ``0..n-1`` and the edge set is a set of ordered pairs.  Both
in- and out-adjacency are precomputed because the round engine consumes
in-neighbors while the classical baselines walk out-neighbors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

NodeId = int

_NODES_DIRECTIVE = re.compile(r"^#\s*nodes\s*:\s*(\d+)\s*$")


class EdgeListError(ValueError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


@dataclass(frozen=True)
class Digraph:
    """Directed graph over nodes ``0..n-1`` with set-semantics edges.

    ``in_adj[v]`` / ``out_adj[v]`` are sorted tuples and always agree
    exactly with ``edges``.  Instances are safe to share across threads.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    in_adj: tuple[tuple[int, ...], ...] = field(repr=False)
    out_adj: tuple[tuple[int, ...], ...] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
        if n < 0:
            raise ValueError(f"node count must be >= 0, got {n}")
        edge_set = frozenset((int(u), int(v)) for u, v in edges)
        for u, v in edge_set:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        ins: list[list[int]] = [[] for _ in range(n)]
        outs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edge_set:
            outs[u].append(v)
            ins[v].append(u)
        return cls(
            n=n,
            edges=edge_set,
            in_adj=tuple(tuple(sorted(a)) for a in ins),
            out_adj=tuple(tuple(sorted(a)) for a in outs),
        )

    @property
    def m(self) -> int:
        """Number of directed edges."""
        return len(self.edges)

    def check_node(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"node {v} out of range for n={self.n}")


def in_neighbors(g: Digraph, v: NodeId) -> set[NodeId]:
    """Sources of edges entering ``v`` (contains ``v`` only on a self-loop)."""
    g.check_node(v)
    return set(g.in_adj[v])


def out_neighbors(g: Digraph, v: NodeId) -> set[NodeId]:
    """Targets of edges leaving ``v``."""
    g.check_node(v)
    return set(g.out_adj[v])


def max_in_degree(g: Digraph) -> int:
    """Largest in-degree over all nodes; undefined on an empty graph."""
    if g.n < 1:
        raise ValueError("max_in_degree is undefined for an empty graph")
    return max(len(a) for a in g.in_adj)


def parse_edge_list(text: str, base: int = 0) -> Digraph:
    """Parse whitespace-separated "u v" lines into a :class:`Digraph`.

    Lines may carry ``#`` comments; blank lines are skipped; duplicate
    edges collapse.  ``base`` declares whether ids in the text start at
    0 or 1 (they are rebased to 0).  An optional directive line
    ``# nodes: N`` pins the node count, which is the only way to keep
    isolated trailing nodes; without it ``n`` is one more than the
    largest id seen.
    """
    if base not in (0, 1):
        raise ValueError(f"base must be 0 or 1, got {base}")
    declared_n: int | None = None
    edges: set[tuple[int, int]] = set()
    max_id = -1
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            m = _NODES_DIRECTIVE.match(stripped)
            if m:
                if declared_n is not None:
                    raise EdgeListError("duplicate 'nodes:' directive", line_no)
                declared_n = int(m.group(1))
            continue
        if "#" in stripped:
            stripped = stripped[: stripped.index("#")].strip()
        if not stripped:
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise EdgeListError(f"expected 'u v', got {stripped!r}", line_no)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListError(f"non-integer id in {stripped!r}", line_no) from None
        u -= base
        v -= base
        if u < 0 or v < 0:
            raise EdgeListError(f"id below base {base} in {stripped!r}", line_no)
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise EdgeListError(
                f"id {max(u, v) + base} exceeds declared node count {declared_n}", line_no
            )
        edges.add((u, v))
        max_id = max(max_id, u, v)
    n = declared_n if declared_n is not None else max_id + 1
    return Digraph.from_edges(n, edges)


def serialize_edge_list(g: Digraph, base: int = 0, header: bool = True) -> str:
    """Canonical edge-list text: one "u v" per line, pair-lexicographic order.

    With ``header`` a ``# nodes: N`` directive is emitted first so the
    round-trip preserves isolated nodes.
    """
    if base not in (0, 1):
        raise ValueError(f"base must be 0 or 1, got {base}")
    lines: list[str] = []
    if header:
        lines.append(f"# nodes: {g.n}")
    lines.extend(f"{u + base} {v + base}" for u, v in sorted(g.edges))
    return "\n".join(lines) + ("\n" if lines else "")
