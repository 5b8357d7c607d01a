#!/usr/bin/env python3
"""
Benchmark script for classify / enumerate on the generated families.

目标：
- 对每个结构重复运行，记录每次延迟（ms）
- 打印 P50 / P95
- 快速确认向量化扫描没有退化
"""

import os
import statistics
import time

from libs.axioms.engine import classify
from libs.congruences.congruences import enumerate_congruences
from libs.constructions.generators import gen_affine, gen_modring, gen_powerset
from libs.ideals.ideals import enumerate_ideals

# ---------------------------------------------------------------------
# 配置参数
# ---------------------------------------------------------------------
N_RUNS = int(os.getenv("BENCH_RUNS", "10"))

TARGETS = [
    ("classify", gen_powerset(2, 2, 3), classify),
    ("classify", gen_modring(16, 2, 3), classify),
    ("classify", gen_affine(4), classify),
    ("classify", gen_modring(32, 2, 3), classify),
    ("ideals", gen_modring(12, 2, 2), enumerate_ideals),
    ("congruences", gen_affine(3), enumerate_congruences),
]


# ---------------------------------------------------------------------
# 主执行逻辑
# ---------------------------------------------------------------------
def run_benchmark():
    print(f"Benchmarking {len(TARGETS)} targets ({N_RUNS} runs each)\n")

    for label, s, fn in TARGETS:
        latencies = []
        for _ in range(N_RUNS):
            t0 = time.perf_counter()
            fn(s)
            latencies.append((time.perf_counter() - t0) * 1000)

        latencies.sort()
        p50 = statistics.median(latencies)
        p95 = latencies[max(int(0.95 * len(latencies)) - 1, 0)]
        print(
            f"{label:<12} {s.name:<18} k={s.k:<3} "
            f"P50 {p50:9.2f} ms  P95 {p95:9.2f} ms  mean {statistics.mean(latencies):9.2f} ms"
        )


if __name__ == "__main__":
    run_benchmark()
