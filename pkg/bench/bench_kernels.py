"""Benchmark the compiled word kernels against the pure-Python fallback.

Times raw detector throughput on a fixed workload of class-pair masks, then
a few end-to-end solves.  When the compiled backend is active the script
re-runs itself in a subprocess with AVOIDCOL_PURE=1 so both columns come from
the same workload.

Run from the repository root:  python3 bench/bench_kernels.py
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

from avoidcol import backend_name, chi_H, path_graph, pattern_from_token, sample_gnp
from avoidcol._kernels import DETECTOR_TAGS, bound_detector
from avoidcol.graph import maximal_independent_sets
from avoidcol.polyalgs import decide_2k2_at_most_3

RAW_REPEATS = 200


def raw_workload():
    g = sample_gnp(14, 0.3, 1)
    sets = maximal_independent_sets(g)
    pairs = []
    for i, a in enumerate(sets):
        for b in sets[i + 1 :]:
            pairs.append((a & ~b, b & ~a))
    return g, pairs


def bench_raw() -> list[tuple[str, float]]:
    g, pairs = raw_workload()
    out = []
    for tag in DETECTOR_TAGS:
        check = bound_detector(tag, g)
        start = time.perf_counter()
        hits = 0
        for _ in range(RAW_REPEATS):
            for a, b in pairs:
                if check(a, b):
                    hits += 1
        elapsed = time.perf_counter() - start
        calls = RAW_REPEATS * len(pairs)
        out.append((tag, calls / elapsed))
    return out


def bench_solves() -> list[tuple[str, float]]:
    cases = [
        ("chi_2K2(P12)", lambda: chi_H(path_graph(12), pattern_from_token("2K2"))),
        (
            "chi_P4(G(11,.35))",
            lambda: chi_H(sample_gnp(11, 0.35, 5), pattern_from_token("P4")),
        ),
        (
            "decide_2K2<=3(G(13,.25))",
            lambda: decide_2k2_at_most_3(sample_gnp(13, 0.25, 3)),
        ),
    ]
    out = []
    for name, fn in cases:
        start = time.perf_counter()
        fn()
        out.append((name, time.perf_counter() - start))
    return out


def report() -> None:
    print(f"backend: {backend_name()}")
    for tag, rate in bench_raw():
        print(f"  raw {tag:6s} {rate/1e6:8.2f} M checks/s")
    for name, elapsed in bench_solves():
        print(f"  solve {name:28s} {elapsed*1000:9.1f} ms")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--no-subprocess",
        action="store_true",
        help="only benchmark the backend active in this process",
    )
    args = parser.parse_args()
    report()
    sys.stdout.flush()
    if backend_name() == "compiled" and not args.no_subprocess:
        env = dict(os.environ, AVOIDCOL_PURE="1")
        subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--no-subprocess"],
            env=env,
            check=True,
        )


if __name__ == "__main__":
    main()
