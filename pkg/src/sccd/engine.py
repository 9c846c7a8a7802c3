"""Synchronous round engine that grows per-node reach sets until they stabilize.

Every node starts knowing only itself.  Each round it merges the reach
sets of its in-neighbors into its own, records the largest set size it
has seen, and marks as peers the nodes whose previous-round size matches
its new size and that already appear in its merged set.  A node's size
stops changing exactly when its reach set is complete, which happens
after (longest finite distance into the node) + 1 rounds; the largest
round count over all nodes is therefore the graph's finite diameter
plus one, and the stabilized peer sets assemble into the strongly
connected components.

Two scheduling variants are provided:

* ``PER_NODE_FREEZE`` -- a node stops updating the moment it stabilizes;
  its last state is carried forward verbatim and stays readable by
  others.  Early-stabilizing members of a component may freeze with a
  strict subset of it, so partition assembly merges by inclusion-maximal
  peer sets.
* ``GLOBAL_ROUNDS`` -- every node keeps updating until all stabilize in
  the same round; each node's final peer set is then individually its
  exact component.

Within a round every update is a pure function of the immutable
previous-round snapshot, so updates may run concurrently with no
ordering dependence; results are identical for any schedule.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum

from .graphs import Digraph, NodeId
from .partition import SccPartition


class InternalCorrectnessError(RuntimeError):
    """An internal invariant was violated; indicates an engine bug."""


class Mode(Enum):
    PER_NODE_FREEZE = "per-node-freeze"
    GLOBAL_ROUNDS = "global-rounds"


@dataclass(frozen=True)
class NodeState:
    """One node's view after some number of rounds.

    reach     -- ids with a known directed path to this node (always
                 contains the node itself)
    max_size  -- largest reach-set size seen among the node and its
                 in-neighbors
    peers     -- nodes currently believed to share this node's component
    stable    -- max_size did not change in the last update
    rounds    -- number of updates this node has executed
    frozen    -- the node will not be updated again; from then on its
                 state never changes
    """

    reach: frozenset[int]
    max_size: int
    peers: frozenset[int]
    stable: bool
    rounds: int
    frozen: bool


@dataclass(frozen=True)
class RoundSnapshot:
    """All node states at one common round; read-only while updates run."""

    states: tuple[NodeState, ...]


@dataclass(frozen=True)
class RunResult:
    """Final states plus per-node round counts and optional full history."""

    mode: Mode
    final: RoundSnapshot
    rounds_per_node: tuple[int, ...]
    element_ops: int
    history: tuple[RoundSnapshot, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.final.states)


def init_state(v: NodeId) -> NodeState:
    """Round-0 state: the node knows only itself."""
    return NodeState(
        reach=frozenset((v,)),
        max_size=1,
        peers=frozenset(),
        stable=False,
        rounds=0,
        frozen=False,
    )


def node_round(v: NodeId, g: Digraph, snap: RoundSnapshot) -> NodeState:
    """One update of node ``v`` against the previous-round snapshot.

    The peer test consults the previous-round sizes of every node in the
    merged reach set, which is exactly the information a shared snapshot
    provides (a frozen node's entry is its last computed value).
    """
    states = snap.states
    if not 0 <= v < len(states):
        raise IndexError(f"node {v} out of range for n={len(states)}")
    prev = states[v]
    if prev.frozen:
        raise ValueError(f"node {v} is frozen and must not be updated")
    in_nbrs = g.in_adj[v]
    reach = prev.reach.union(*(states[j].reach for j in in_nbrs)) if in_nbrs else prev.reach
    nbr_max = max((len(states[j].reach) for j in in_nbrs), default=0)
    max_size = max(nbr_max, len(reach))
    peers = frozenset(j for j in reach if states[j].max_size == max_size)
    stable = max_size == prev.max_size
    return NodeState(
        reach=reach,
        max_size=max_size,
        peers=peers,
        stable=stable,
        rounds=prev.rounds + 1,
        frozen=stable,
    )


def _round_ops(g: Digraph, states: tuple[NodeState, ...], live: list[int]) -> int:
    # Set elements read while merging, the per-round work the engine is billed for.
    return sum(
        len(states[v].reach) + sum(len(states[j].reach) for j in g.in_adj[v]) for v in live
    )


def run(
    g: Digraph,
    mode: Mode = Mode.PER_NODE_FREEZE,
    trace: bool = False,
    parallel: bool = False,
    max_workers: int | None = None,
) -> RunResult:
    """Execute rounds until every node has stabilized.

    ``trace`` records a snapshot per round (round 0 is the initial
    state).  ``parallel`` computes each round's updates on a thread
    pool; output is identical to the sequential schedule.
    """
    if g.n < 1:
        raise ValueError("run requires a nonempty graph")
    n = g.n
    states = tuple(init_state(v) for v in range(n))
    history: list[RoundSnapshot] | None = [RoundSnapshot(states)] if trace else None
    element_ops = 0
    cap = n + 2  # a reach set grows every round it is incomplete, so n+2 is unreachable
    rounds = 0
    pool = ThreadPoolExecutor(max_workers=max_workers) if parallel else None
    try:
        while True:
            if mode is Mode.PER_NODE_FREEZE:
                done = all(s.frozen for s in states)
            else:
                done = all(s.stable for s in states)
            if done:
                break
            rounds += 1
            if rounds > cap:
                raise InternalCorrectnessError(
                    f"no convergence after {rounds - 1} rounds on {n} nodes"
                )
            snap = RoundSnapshot(states)
            if mode is Mode.PER_NODE_FREEZE:
                live = [v for v in range(n) if not states[v].frozen]
            else:
                live = list(range(n))
            element_ops += _round_ops(g, states, live)
            if pool is not None:
                updated = list(pool.map(lambda v: node_round(v, g, snap), live))
            else:
                updated = [node_round(v, g, snap) for v in live]
            new_states = list(states)
            for v, st in zip(live, updated):
                new_states[v] = st
            if mode is Mode.GLOBAL_ROUNDS and not all(s.stable for s in new_states):
                # A stabilized node keeps updating in this mode, so the frozen
                # flag only latches on the terminal round.
                new_states = [replace(s, frozen=False) if s.frozen else s for s in new_states]
            states = tuple(new_states)
            if history is not None:
                history.append(RoundSnapshot(states))
    finally:
        if pool is not None:
            pool.shutdown()
    return RunResult(
        mode=mode,
        final=RoundSnapshot(states),
        rounds_per_node=tuple(s.rounds for s in states),
        element_ops=element_ops,
        history=tuple(history) if history is not None else None,
    )


def assemble_partition(g: Digraph, result: RunResult) -> SccPartition:
    """Combine final peer sets into the component partition.

    Each node joins the inclusion-maximal peer set it appears in (its
    own singleton as fallback).  Under per-node freezing a node may have
    stopped with a subset of its component, but the component member
    that stabilized last holds the complete set, so the maximal
    candidate is the true component.  Overlapping candidates that are
    not nested cannot come from a correct run and raise.
    """
    n = result.n
    if g.n != n:
        raise ValueError(f"graph has {g.n} nodes but run has {n}")
    candidates: list[list[frozenset[int]]] = [[frozenset((v,))] for v in range(n)]
    for state in result.final.states:
        for v in state.peers:
            candidates[v].append(state.peers)
    components: dict[frozenset[int], None] = {}
    for v in range(n):
        best = max(candidates[v], key=len)
        for cand in candidates[v]:
            if not cand <= best:
                raise InternalCorrectnessError(
                    f"node {v} appears in non-nested peer sets {sorted(cand)} "
                    f"and {sorted(best)}"
                )
        components[best] = None
    try:
        return SccPartition.from_components(n, components)
    except ValueError as exc:  # pragma: no cover - unreachable for a correct engine
        raise InternalCorrectnessError(f"peer sets do not form a partition: {exc}") from exc


def finite_diameter_from_run(result: RunResult) -> int:
    """Longest finite shortest path, read off the round counts.

    A node stabilizes one round after the longest finite distance into
    it, so the maximum round count over all nodes is that distance plus
    one; single nodes and edgeless graphs yield 0.
    """
    return max(result.rounds_per_node) - 1


def trace_table(result: RunResult, base: int = 0) -> str:
    """Render the recorded history as a tab-separated table.

    One block of four rows per round, labeled with the compact
    parameter names x (reach), y (max_size), z (peers) and w (stable);
    one column per node; sets in ascending id order.  ``base`` shifts
    displayed ids for graphs that were read from 1-based input.
    """
    if result.history is None:
        raise ValueError("run was executed without trace recording")
    n = result.n
    header = "k\tP\t" + "\t".join(f"v{v + base}" for v in range(n))
    lines = [header]
    for k, snap in enumerate(result.history):
        lines.append(f"{k}\tx\t" + "\t".join(_fmt_set(s.reach, base) for s in snap.states))
        lines.append(f"{k}\ty\t" + "\t".join(str(s.max_size) for s in snap.states))
        lines.append(f"{k}\tz\t" + "\t".join(_fmt_set(s.peers, base) for s in snap.states))
        lines.append(f"{k}\tw\t" + "\t".join(str(s.stable) for s in snap.states))
    return "\n".join(lines) + "\n"


def _fmt_set(ids: frozenset[int], base: int) -> str:
    return "{" + ",".join(str(v + base) for v in sorted(ids)) + "}"


def render_result(result: RunResult, partition: SccPartition, base: int = 0) -> str:
    """Structured text: components, per-node round counts, diameter."""
    lines = []
    for comp in partition.components:
        lines.append("component: " + " ".join(str(v + base) for v in sorted(comp)))
    lines.append("rounds: " + " ".join(str(r) for r in result.rounds_per_node))
    lines.append(f"diameter: {finite_diameter_from_run(result)}")
    return "\n".join(lines) + "\n"
