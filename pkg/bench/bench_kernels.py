#!/usr/bin/env python3
"""Benchmark the compiled branch-and-bound kernel against the pure-Python
fallback on representative oracle workloads.

Run after an editable install:

    python bench/bench_kernels.py
"""

import os
import random
import time

from dompack import families, oracles, solvers
from dompack.graph import Graph, XYInstance


def labeled_sweep(n):
    def work():
        for g in families.enumerate_labeled_graphs(n):
            inst = XYInstance(g)
            oracles.exact_domination(inst)
            oracles.exact_packing(inst)

    return work


def random_batch(count, n, p, seed=7):
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        graphs.append(Graph.from_edges(n, edges))

    def work():
        for g in graphs:
            inst = XYInstance(g)
            oracles.exact_domination(inst)
            oracles.exact_packing(inst)

    return work


def petersen_repeats(count):
    g = families.gen_petersen()

    def work():
        inst = XYInstance(g)
        for _ in range(count):
            oracles.exact_domination(inst)
            oracles.exact_packing(inst)

    return work


def hard_structured():
    # Subcubic block chains have weak greedy bounds, so the branch-and-bound
    # tree is genuinely large here and the kernel dominates the runtime.
    graphs = [families.gen_chained_blocks(4), families.gen_chained_blocks(5)]

    def work():
        for g in graphs:
            inst = XYInstance(g)
            oracles.exact_domination(inst)
            oracles.exact_packing(inst)

    return work


WORKLOADS = [
    ("all labeled graphs, n=6", labeled_sweep(6)),
    ("300 random graphs, n=16 p=0.25", random_batch(300, 16, 0.25)),
    ("100 random graphs, n=22 p=0.18", random_batch(100, 22, 0.18)),
    ("Petersen x 2000", petersen_repeats(2000)),
    ("block chains i=4,5 (n=26,32)", hard_structured()),
]


def timed(work):
    t0 = time.perf_counter()
    work()
    return time.perf_counter() - t0


def main():
    if solvers.backend_name() == "python":
        print("compiled kernel unavailable; nothing to compare")
        return
    print(f"{'workload':<36} {'compiled':>10} {'python':>10} {'speedup':>9}")
    for name, work in WORKLOADS:
        os.environ.pop("DOMPACK_FORCE_PY", None)
        fast = timed(work)
        os.environ["DOMPACK_FORCE_PY"] = "1"
        slow = timed(work)
        os.environ.pop("DOMPACK_FORCE_PY", None)
        print(f"{name:<36} {fast:>9.2f}s {slow:>9.2f}s {slow / fast:>8.1f}x")


if __name__ == "__main__":
    main()
