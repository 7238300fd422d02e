"""Benchmark grid: interleaved updates and queries, reported as CSV.

Counter columns are deterministic for a fixed seed; timing columns are not.
"""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass, field

from .index import DynamicSuffixArray
from .lce import DEFAULT_SEED

CSV_COLUMNS = ("n", "k", "op", "count", "avg_lce_calls", "p50_time_ns", "p99_time_ns")
QUERY_OPS = ("SA", "ISA", "BWT", "LCPARR")


@dataclass
class BenchConfig:
    n: int = 1024
    k: int | None = None
    query_count: int = 200
    update_count: int = 200
    alphabet_size: int = 4
    seed: int = DEFAULT_SEED
    output_path: str | None = None
    backend: str | None = None
    ops: tuple = field(default=QUERY_OPS)

    def validate(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.k is not None and not 1 <= self.k <= self.n:
            raise ValueError(f"k must lie in [1, n], got {self.k}")
        if not 1 <= self.alphabet_size <= 255:
            raise ValueError("alphabet size must lie in [1, 255]")


def alphabet(size: int) -> bytes:
    return bytes(range(97, 97 + size)) if size <= 26 else bytes(range(1, size + 1))


def random_text(n: int, size: int, rng: random.Random) -> bytes:
    letters = alphabet(size)
    return bytes(rng.choice(letters) for _ in range(n))


def _percentile(sorted_values, q):
    # nearest-rank percentile
    if not sorted_values:
        return 0
    idx = max(0, min(len(sorted_values) - 1, -(-q * len(sorted_values) // 100) - 1))
    return sorted_values[idx]


def run_bench(cfg: BenchConfig) -> list[dict]:
    """Run one (n, k) configuration and return its CSV rows."""
    cfg.validate()
    rng = random.Random(cfg.seed)
    letters = alphabet(cfg.alphabet_size)
    data = random_text(cfg.n, cfg.alphabet_size, rng)
    t0 = time.perf_counter_ns()
    dsa = DynamicSuffixArray(data, k=cfg.k, seed=cfg.seed, backend=cfg.backend)
    build_ns = time.perf_counter_ns() - t0
    counters = dsa.counters
    build_calls = counters.lce_calls
    n = dsa.n
    calls = {op: [] for op in ("SUB",) + tuple(cfg.ops)}
    times = {op: [] for op in calls}

    def timed(op, fn, *args):
        before = counters.lce_calls
        start = time.perf_counter_ns()
        fn(*args)
        times[op].append(time.perf_counter_ns() - start)
        calls[op].append(counters.lce_calls - before)

    handlers = {"SA": dsa.sa, "ISA": dsa.isa, "BWT": dsa.bwt, "LCPARR": dsa.lcp_array}
    for step in range(max(cfg.update_count, cfg.query_count)):
        if step < cfg.update_count:
            timed("SUB", dsa.substitute, rng.randint(1, n), rng.choice(letters))
        if step < cfg.query_count:
            for op in cfg.ops:
                low = 2 if op == "LCPARR" else 1
                if low > n:
                    continue
                timed(op, handlers[op], rng.randint(low, n))

    rows = [_row(n, dsa.k, "BUILD", [build_calls], [build_ns])]
    rows.extend(_row(n, dsa.k, op, calls[op], times[op]) for op in calls if calls[op])
    return rows


def _row(n, k, op, calls, times):
    times = sorted(times)
    return {
        "n": n,
        "k": k,
        "op": op,
        "count": len(calls),
        "avg_lce_calls": f"{sum(calls) / len(calls):.3f}",
        "p50_time_ns": _percentile(times, 50),
        "p99_time_ns": _percentile(times, 99),
    }


def write_csv(rows, fh):
    writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
