"""Benchmark harness: runs several checkers on the same instances and
insists that they agree on the verdict."""

import csv
import math
import time
from dataclasses import asdict, dataclass, fields

from .bucketed import check_bucketed
from .checker import DEFAULT_TOL, check_naive
from .generators import gen_random_monotone, gen_reuleaux_arc, gen_staircase, gen_straight_subdivided


class DifferentialMismatch(RuntimeError):
    """Two algorithms disagreed on an instance, or a counter bound was broken."""


@dataclass(frozen=True)
class BenchRecord:
    family: str
    d: int
    n: int
    algorithm: str
    q: int
    verdict: str
    halfspace_tests: int
    points_inspected: int
    index_queries: int
    wall_time_ms: float
    seed: int


CSV_COLUMNS = [f.name for f in fields(BenchRecord)]


def make_instance(family, d, n, seed, max_turn=0.3):
    if family == "random-monotone":
        return gen_random_monotone(d, n, max_turn, seed)
    if family == "straight":
        return gen_straight_subdivided(d, n)
    if family == "staircase":
        return gen_staircase(max(1, (n - 1) // 2))
    if family == "reuleaux2":
        return gen_reuleaux_arc(max(2, (n - 1) // 2))
    raise ValueError(f"unknown bench family {family!r}")


def run_algorithm(chain, algo, tol=DEFAULT_TOL, q=None):
    if algo == "naive":
        return check_naive(chain, tol)
    if algo.startswith("bucketed"):
        _, _, kind = algo.partition(":")
        return check_bucketed(chain, tol, kind or "kdtree", q)
    raise ValueError(f"unknown algorithm {algo!r}")


def run_bench(family, sizes, d, algos, repeats=1, seed=0, tol=DEFAULT_TOL, q=None, max_turn=0.3):
    """Yield one BenchRecord per (size, repeat, algorithm)."""
    for n in sizes:
        for r in range(repeats):
            inst_seed = seed + r
            chain = make_instance(family, d, n, inst_seed, max_turn)
            verdicts = set()
            for algo in algos:
                t0 = time.perf_counter()
                report = run_algorithm(chain, algo, tol, q)
                ms = (time.perf_counter() - t0) * 1e3
                plan = getattr(report, "plan", None)
                if plan is not None and report.stats.max_brute_per_query > math.ceil(chain.n / plan.q):
                    raise DifferentialMismatch(
                        f"{algo} scanned {report.stats.max_brute_per_query} frontier points "
                        f"(limit {math.ceil(chain.n / plan.q)}) at n={chain.n}")
                verdicts.add(report.verdict)
                yield BenchRecord(family, chain.dimension, chain.n, algo, plan.q if plan else 1,
                                  report.verdict, report.stats.halfspace_tests,
                                  report.stats.points_inspected, report.stats.index_queries,
                                  round(ms, 3), inst_seed)
            if len(verdicts) > 1:
                raise DifferentialMismatch(
                    f"verdicts disagree on {family} d={d} n={chain.n} seed={inst_seed}: {sorted(verdicts)}")


def write_csv(records, fh):
    writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
    writer.writeheader()
    for rec in records:
        writer.writerow(asdict(rec))
