"""Benchmark harness: engine vs. classical baselines on random graph families.

Wall-clock numbers are recorded for inspection only and never gate
anything; correctness (partition equality against Kosaraju, and the
round-count/diameter identity against the BFS and Floyd-Warshall
oracles) is asserted on every generated graph.
"""

from __future__ import annotations

import csv
import math
import time
import warnings
from dataclasses import dataclass
from pathlib import Path
from statistics import median
from typing import Callable

from . import __version__
from .engine import InternalCorrectnessError, Mode, assemble_partition, finite_diameter_from_run, run
from .generators import gen_barabasi_albert, gen_erdos_renyi, gen_watts_strogatz
from .graphs import Digraph, serialize_edge_list
from .oracles import floyd_warshall_diameter, partitions_equal, scc_kosaraju
from .stats import GraphStats, graph_stats

EULER_MASCHERONI = 0.5772156649015329

FAMILIES = ("ER", "BA", "WS")

# Second-parameter choice per (family, parameter_set); WS uses 4 lattice
# neighbors throughout since only the rewiring probability varies.
WS_LATTICE_K = 4

CSV_COLUMNS = (
    "family",
    "parameter_set",
    "n",
    "generator_params",
    "seed",
    "replicate",
    "m_edges",
    "d_in_max",
    "finite_diameter",
    "num_sccs",
    "rounds_max",
    "element_ops",
    "t_consensus",
    "t_kosaraju",
    "t_floyd_warshall",
    "correct",
)


@dataclass(frozen=True)
class CostEstimate:
    """Average-degree x average-path-length product for a random family."""

    expected_avg_degree: float
    expected_avg_path_length: float

    @property
    def expected_cost(self) -> float:
        return self.expected_avg_degree * self.expected_avg_path_length


def expected_cost_er(n: int, m: int) -> CostEstimate:
    """Closed-form cost estimate for a uniform random graph with ``m`` edges.

    Average degree 2m/n; average path length
    (ln n - gamma)/ln(2m/n) + 1/2, defined only above mean degree 1.
    """
    if n < 2 or m < 1:
        raise ValueError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    avg_degree = 2 * m / n
    if avg_degree <= 1.0:
        raise ValueError(f"mean degree {avg_degree} <= 1; path-length formula undefined")
    avg_path = (math.log(n) - EULER_MASCHERONI) / math.log(avg_degree) + 0.5
    return CostEstimate(avg_degree, avg_path)


def expected_cost_ba(n: int, m: int) -> CostEstimate:
    """Closed-form cost estimate for preferential attachment with ``m`` links per vertex.

    Average degree 2m; average path length
    (ln n - ln(m/2) - 1 - gamma)/(ln ln n + ln(m/2)) + 3/2.
    """
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    denom = math.log(math.log(n)) + math.log(m / 2)
    if denom <= 0.0:
        raise ValueError(f"non-positive denominator {denom:.4f} for n={n}, m={m}")
    if denom < 0.1:
        warnings.warn(
            f"near-singular path-length denominator {denom:.4f} for n={n}, m={m}",
            RuntimeWarning,
            stacklevel=2,
        )
    avg_path = (math.log(n) - math.log(m / 2) - 1 - EULER_MASCHERONI) / denom + 1.5
    return CostEstimate(2.0 * m, avg_path)


def expected_cost_ws(n: int, K: int, p: float | None = None) -> tuple[CostEstimate, CostEstimate]:
    """Limiting cost estimates for a rewired ring lattice with degree ``K``.

    Average path length tends to n/(2K) with no rewiring and to
    ln(n)/ln(K) under full rewiring; both limits are returned (the
    rewiring probability ``p`` is accepted for call-site symmetry but
    the estimates bracket the whole range).
    """
    if K < 2:
        raise ValueError(f"need K >= 2, got {K}")
    if n <= K:
        raise ValueError(f"need n > K, got n={n}, K={K}")
    lattice = CostEstimate(float(K), n / (2 * K))
    rewired = CostEstimate(float(K), math.log(n) / math.log(K))
    return lattice, rewired


@dataclass(frozen=True)
class ExperimentConfig:
    family: str
    parameter_set: int
    node_sizes: tuple[int, ...] = (100, 200, 300, 400, 500)
    replicates: int = 10
    seed: int = 0
    mode: Mode = Mode.PER_NODE_FREEZE
    timing_reps: int = 5

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.parameter_set not in (1, 2):
            raise ValueError(f"parameter_set must be 1 or 2, got {self.parameter_set}")
        if self.replicates < 1 or not self.node_sizes:
            raise ValueError("need replicates >= 1 and at least one node size")


@dataclass(frozen=True)
class ExperimentRecord:
    family: str
    parameter_set: int
    n: int
    generator_params: str
    seed: int
    replicate: int
    stats: GraphStats
    rounds_max: int
    element_ops: int
    t_consensus: float
    t_kosaraju: float
    t_floyd_warshall: float | None
    correct: bool


def _generate(family: str, parameter_set: int, n: int, seed: int) -> tuple[Digraph, str]:
    if family == "ER":
        m = round(n ** (2 / 3)) if parameter_set == 1 else 500
        return gen_erdos_renyi(n, m, seed), f"m={m}"
    if family == "BA":
        m = max(1, round(n / 5)) if parameter_set == 1 else 50
        return gen_barabasi_albert(n, m, seed), f"m={m}"
    K = WS_LATTICE_K
    p = 0.8 if parameter_set == 1 else 0.2
    return gen_watts_strogatz(n, K, p, seed), f"K={K};p={p}"


def _median_time(fn: Callable[[], object], reps: int) -> float:
    # One discarded warm-up, then the median of `reps` monotonic-clock timings.
    fn()
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        t1 = time.perf_counter()
        times.append(t1 - t0)
    return median(times)


def _record_seed(base_seed: int, parameter_set: int, n: int, replicate: int) -> int:
    return ((base_seed * 31 + parameter_set) * 1_000_003 + n) * 101 + replicate


def _check_and_record(
    family: str,
    parameter_set: int,
    n: int,
    seed: int,
    replicate: int,
    g: Digraph,
    params: str,
    mode: Mode,
    timing_reps: int,
    with_floyd_warshall: bool = False,
) -> ExperimentRecord:
    stats = graph_stats(g)
    result = run(g, mode=mode)
    partition = assemble_partition(g, result)
    reference = scc_kosaraju(g)
    rounds_max = max(result.rounds_per_node)
    engine_diameter = finite_diameter_from_run(result)
    correct = (
        partitions_equal(partition, reference)
        and rounds_max == stats.finite_diameter + 1
        and engine_diameter == stats.finite_diameter
    )
    t_fw = None
    if with_floyd_warshall:
        fw = floyd_warshall_diameter(g)
        correct = correct and fw == engine_diameter
        t_fw = _median_time(lambda: floyd_warshall_diameter(g), timing_reps)
    if not correct:
        raise InternalCorrectnessError(
            f"mismatch on {family} set {parameter_set}, n={n}, seed={seed}: "
            f"engine D={engine_diameter}, oracle D={stats.finite_diameter}, "
            f"engine components={partition.num_components}, "
            f"oracle components={reference.num_components}\n"
            f"offending graph:\n{serialize_edge_list(g)}"
        )
    t_consensus = _median_time(lambda: run(g, mode=mode), timing_reps)
    t_kosaraju = _median_time(lambda: scc_kosaraju(g), timing_reps)
    return ExperimentRecord(
        family=family,
        parameter_set=parameter_set,
        n=n,
        generator_params=params,
        seed=seed,
        replicate=replicate,
        stats=stats,
        rounds_max=rounds_max,
        element_ops=result.element_ops,
        t_consensus=t_consensus,
        t_kosaraju=t_kosaraju,
        t_floyd_warshall=t_fw,
        correct=correct,
    )


def run_experiment(cfg: ExperimentConfig) -> list[ExperimentRecord]:
    """Generate, decompose and cross-check graphs for one family/parameter set.

    The graph sequence is a pure function of ``cfg.seed``; only the
    timing fields vary between invocations.  Any correctness mismatch
    aborts the whole run with the offending seed and graph.
    """
    records = []
    for n in cfg.node_sizes:
        for rep in range(cfg.replicates):
            seed = _record_seed(cfg.seed, cfg.parameter_set, n, rep)
            g, params = _generate(cfg.family, cfg.parameter_set, n, seed)
            records.append(
                _check_and_record(
                    cfg.family, cfg.parameter_set, n, seed, rep, g, params,
                    cfg.mode, cfg.timing_reps,
                )
            )
    return records


def diameter_benchmark(seed: int, timing_reps: int = 5) -> list[ExperimentRecord]:
    """Ten 25-node graphs per family, engine diameter against Floyd-Warshall."""
    records = []
    for family in FAMILIES:
        for rep in range(10):
            rec_seed = _record_seed(seed, 0, 25, rep) + _family_offset(family)
            if family == "ER":
                g, params = gen_erdos_renyi(25, 50, rec_seed), "m=50"
            elif family == "BA":
                g, params = gen_barabasi_albert(25, 3, rec_seed), "m=3"
            else:
                g, params = gen_watts_strogatz(25, WS_LATTICE_K, 0.2, rec_seed), (
                    f"K={WS_LATTICE_K};p=0.2"
                )
            records.append(
                _check_and_record(
                    family, 0, 25, rec_seed, rep, g, params,
                    Mode.PER_NODE_FREEZE, timing_reps, with_floyd_warshall=True,
                )
            )
    return records


def _family_offset(family: str) -> int:
    # Stable across processes, unlike hash() on strings.
    return sum(ord(c) * 257**i for i, c in enumerate(family))


def _fmt_real(x: float | None) -> str:
    return "" if x is None else f"{x:.6g}"


def emit_csv(records: list[ExperimentRecord], path: str | Path) -> None:
    """Write one header row plus one row per record, columns in CSV_COLUMNS order."""
    if not records:
        raise ValueError("no records to emit")
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow(
                [
                    r.family,
                    r.parameter_set,
                    r.n,
                    r.generator_params,
                    r.seed,
                    r.replicate,
                    r.stats.m,
                    r.stats.d_in_max,
                    r.stats.finite_diameter,
                    r.stats.num_sccs,
                    r.rounds_max,
                    r.element_ops,
                    _fmt_real(r.t_consensus),
                    _fmt_real(r.t_kosaraju),
                    _fmt_real(r.t_floyd_warshall),
                    str(r.correct).lower(),
                ]
            )


def write_manifest(path: str | Path, description: str, seed: int, mode: Mode) -> None:
    """Reproducibility sidecar: tool version, configuration, seed."""
    lines = [
        f"sccd version: {__version__}",
        f"configuration: {description}",
        f"seed: {seed}",
        f"engine mode: {mode.value}",
        f"watts-strogatz lattice neighbors: {WS_LATTICE_K}",
        "timings: median of repeated runs, monotonic clock, warm-up discarded",
    ]
    Path(path).write_text("\n".join(lines) + "\n")
