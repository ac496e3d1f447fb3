"""Benchmark harness: run solvers over instance collections and emit rows
mirroring the experimental table schema, plus pairwise comparison summaries."""

import csv
import io
import time
from dataclasses import dataclass, fields
from typing import Dict, List, Optional, Sequence, Tuple

from .bounds import bounds
from .errors import GdomsetError
from .exact import BRUTE_FORCE_LIMIT, bgds, brute_force_gamma_g
from .graph import Graph, is_global_dominating
from .heuristics import HEURISTICS, run_heuristic
from .instances import InstanceMeta
from .purify import purify

ALGORITHMS = tuple(HEURISTICS) + ("bgds", "brute")


@dataclass
class BenchRow:
    instance: str
    n: int
    m: int
    L: Optional[int]
    lb_degree: Optional[int]
    lb_radius: Optional[int]
    lb_diameter: Optional[int]
    lb_support: Optional[int]
    U: Optional[int]
    algorithm: str
    size_before: Optional[int]
    size_after: Optional[int]
    pct_purified: Optional[float]
    time_ms: Optional[float]
    optimal_known: Optional[int]
    error_pct: Optional[float]
    status: str = "ok"


CSV_HEADER = tuple(f.name for f in fields(BenchRow))


@dataclass
class BenchSummary:
    """Pairwise size_after comparisons and purification aggregates."""

    total_instances: int
    comparisons: Dict[str, Dict[str, int]]
    avg_pct_purified: Dict[str, float]
    frac_instances_purified: Dict[str, float]


def run_one(
    g: Graph, meta: InstanceMeta, algo: str, deadline: Optional[float] = None
) -> BenchRow:
    """Solve one instance with one algorithm; failures land in the row."""
    row = BenchRow(
        instance=meta.name,
        n=meta.n,
        m=meta.m,
        L=None,
        lb_degree=None,
        lb_radius=None,
        lb_diameter=None,
        lb_support=None,
        U=None,
        algorithm=algo,
        size_before=None,
        size_after=None,
        pct_purified=None,
        time_ms=None,
        optimal_known=None,
        error_pct=None,
    )
    start = time.perf_counter()
    try:
        b = bounds(g)
        row.L = b.L
        row.lb_degree = b.lb_degree
        row.lb_radius = b.lb_radius
        row.lb_diameter = b.lb_diameter
        row.lb_support = b.lb_support
        row.U = b.U
        if algo in HEURISTICS:
            d, _ = run_heuristic(algo, g)
            purified, report = purify(g, d)
            row.size_before = report.before
            row.size_after = report.after
            row.pct_purified = round(report.pct, 2)
            final = purified
        elif algo == "bgds":
            res = bgds(g, deadline=deadline)
            row.size_before = row.size_after = res.cardinality
            row.pct_purified = 0.0
            row.optimal_known = res.cardinality
            final = res.vertices
        elif algo == "brute":
            res = brute_force_gamma_g(g)
            row.size_before = row.size_after = res.cardinality
            row.pct_purified = 0.0
            row.optimal_known = res.cardinality
            final = res.vertices
        else:
            raise GdomsetError(f"unknown algorithm {algo!r}")
        if not is_global_dominating(g, final):
            row.status = "error:infeasible-result"
    except TimeoutError:
        row.status = "timeout"
    except GdomsetError as exc:
        row.status = f"error:{exc}"
    row.time_ms = round((time.perf_counter() - start) * 1000.0, 3)
    return row


def run_bench(
    instances: Sequence[Tuple[Graph, InstanceMeta]],
    algos: Sequence[str],
    timeout_s: Optional[float] = None,
    workers: int = 1,
) -> Tuple[List[BenchRow], BenchSummary]:
    """One row per (instance, algorithm), input order preserved."""
    tasks = [(g, meta, algo) for g, meta in instances for algo in algos]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_one_timed, g, meta, algo, timeout_s)
                for g, meta, algo in tasks
            ]
            rows = [f.result() for f in futures]
    else:
        rows = [_run_one_timed(g, meta, algo, timeout_s) for g, meta, algo in tasks]
    _fill_error_pct(rows)
    return rows, summarize(rows, algos)


def _run_one_timed(g, meta, algo, timeout_s):
    deadline = time.monotonic() + timeout_s if timeout_s else None
    row = run_one(g, meta, algo, deadline=deadline)
    if timeout_s and row.status == "ok" and row.time_ms > timeout_s * 1000.0:
        row.status = "timeout"
    return row


def _fill_error_pct(rows: List[BenchRow]):
    optima: Dict[str, int] = {}
    for row in rows:
        if row.optimal_known is not None and row.status == "ok":
            optima[row.instance] = row.optimal_known
    for row in rows:
        opt = optima.get(row.instance)
        if opt is not None and row.size_after is not None and row.status == "ok":
            row.optimal_known = opt
            row.error_pct = round(100.0 * (row.size_after - opt) / opt, 2)


def summarize(rows: Sequence[BenchRow], algos: Sequence[str]) -> BenchSummary:
    by_algo: Dict[str, Dict[str, BenchRow]] = {a: {} for a in algos}
    names: List[str] = []
    for row in rows:
        if row.instance not in names:
            names.append(row.instance)
        if row.algorithm in by_algo and row.status == "ok":
            by_algo[row.algorithm][row.instance] = row
    comparisons: Dict[str, Dict[str, int]] = {}
    for i, x in enumerate(algos):
        for y in algos[i + 1 :]:
            buckets = {"equal": 0, "greater": 0, "less": 0}
            for name in names:
                rx, ry = by_algo[x].get(name), by_algo[y].get(name)
                if rx is None or ry is None:
                    continue
                if rx.size_after == ry.size_after:
                    buckets["equal"] += 1
                elif rx.size_after > ry.size_after:
                    buckets["greater"] += 1
                else:
                    buckets["less"] += 1
            comparisons[f"{x}-vs-{y}"] = buckets
    avg_pct: Dict[str, float] = {}
    frac: Dict[str, float] = {}
    for a in algos:
        done = list(by_algo[a].values())
        if done and a in HEURISTICS:
            avg_pct[a] = round(sum(r.pct_purified for r in done) / len(done), 2)
            frac[a] = round(
                sum(1 for r in done if r.size_after < r.size_before) / len(done), 4
            )
    return BenchSummary(
        total_instances=len(names),
        comparisons=comparisons,
        avg_pct_purified=avg_pct,
        frac_instances_purified=frac,
    )


def rows_to_csv(rows: Sequence[BenchRow], summary: Optional[BenchSummary] = None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            ["" if getattr(row, f) is None else getattr(row, f) for f in CSV_HEADER]
        )
    if summary is not None:
        writer.writerow([])
        writer.writerow(["# summary", f"instances={summary.total_instances}"])
        for pair, buckets in summary.comparisons.items():
            total = sum(buckets.values()) or 1
            writer.writerow(
                [f"# {pair}"]
                + [f"{k}={v} ({100.0 * v / total:.2f}%)" for k, v in buckets.items()]
            )
        for a, pct in summary.avg_pct_purified.items():
            writer.writerow(
                [
                    f"# purify {a}",
                    f"avg_pct={pct}",
                    f"frac_purified={summary.frac_instances_purified[a]}",
                ]
            )
    return buf.getvalue()
