#!/usr/bin/env python3
"""Compare the compiled rank kernel against the pure-Python fallback.

Times the exact rank kernels on boundary matrices taken from real
independence complexes (a dense chain member, a face-rich random graph)
and on random dense integer matrices, then an end-to-end homology run.
Run from the repository root:

    python benchmarks/bench_rank.py
"""

from __future__ import annotations

import random
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from edgechains import _pyrank  # noqa: E402
from edgechains import linalg  # noqa: E402
from edgechains.chain import ChainSeed, generate_graph  # noqa: E402
from edgechains.complexes import independence_complex  # noqa: E402
from edgechains.graphs import Graph, _bit_positions  # noqa: E402

REPEATS = 5


def boundary_matrices(cx) -> list[list[list[int]]]:
    by_dim = cx.faces_by_dim()
    out = []
    top = max(by_dim)
    for d in range(top + 1):
        upper = by_dim.get(d, [])
        lower = by_dim.get(d - 1, []) if d > 0 else [0]
        index = {m: i for i, m in enumerate(lower)}
        rows = [[0] * len(upper) for _ in lower]
        for c, m in enumerate(upper):
            for i, b in enumerate(_bit_positions(m)):
                rows[index[m ^ (1 << b)]][c] = 1 if i % 2 == 0 else -1
        out.append(rows)
    return out


def timed(fn, *args) -> float:
    best = []
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        fn(*args)
        best.append(time.perf_counter() - t0)
    return statistics.median(best)


def bench_case(label: str, matrices, field) -> None:
    def run_fast():
        for m in matrices:
            linalg.rank(m, field)

    def run_pure():
        for m in matrices:
            if field == linalg.RATIONAL:
                _pyrank.rank_rational(m)
            else:
                _pyrank.rank_mod_p(m, field)

    t_pure = timed(run_pure)
    if linalg.backend_name() == "compiled":
        t_fast = timed(run_fast)
        print(
            f"{label:42s} pure {t_pure * 1e3:9.2f} ms   "
            f"compiled {t_fast * 1e3:9.2f} ms   x{t_pure / t_fast:5.1f}"
        )
    else:
        print(f"{label:42s} pure {t_pure * 1e3:9.2f} ms   (compiled kernel not built)")


def main() -> None:
    print(f"active backend: {linalg.backend_name()}")
    rng = random.Random(11)

    dense = independence_complex(generate_graph(ChainSeed(4, ((1, 4),)), 30))
    bench_case("dense member complex (n=30)", boundary_matrices(dense), linalg.RATIONAL)

    n = 17
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < 0.25
    ]
    rich = independence_complex(Graph(range(1, n + 1), edges))
    mats = boundary_matrices(rich)
    sizes = ", ".join(f"{len(m)}x{len(m[0])}" for m in mats if m and m[0])
    print(f"face-rich boundary matrices: {sizes}")
    bench_case("face-rich complex, rational", mats, linalg.RATIONAL)
    bench_case("face-rich complex, GF(1009)", mats, 1009)

    square = [[[rng.randint(-5, 5) for _ in range(60)] for _ in range(60)]]
    bench_case("random dense 60x60, rational", square, linalg.RATIONAL)
    bench_case("random dense 60x60, GF(1009)", square, 1009)


if __name__ == "__main__":
    main()
