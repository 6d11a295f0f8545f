"""Compare the interpreted and compiled kernels on the package workloads.

Run from the repository root after installing:

    python3 benchmarks/bench_kernels.py [--repeats N]

Each workload builds a fresh engine so memo tables never carry over
between backends or repeats; the reported figure is the best of N runs.
"""

from __future__ import annotations

import argparse
import time

from diamondcgt.engine import Engine
from diamondcgt.values import Relation
from diamondcgt.yashima import MultiGraph, Variant, YashimaSolver, YashimaState
from diamondcgt.yashima import verify_bipartite_simplicity

LADDER_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 4),
    (5, 6), (6, 7), (7, 8), (8, 9),
    (0, 5), (1, 6), (2, 7), (3, 8), (3, 8), (4, 9),
)


def bench_ladder(engine: Engine) -> None:
    state = YashimaState(MultiGraph(10, LADDER_EDGES), 0, 4)
    stats = YashimaSolver(engine).solve_stats(state)
    assert str(stats.value) == "{0|-3}"


def bench_sweep(engine: Engine) -> None:
    report = verify_bipartite_simplicity(
        engine, max_vertices=4, max_edges=5, variant=Variant.YASHIMA
    )
    assert report.ok


def bench_day3(engine: Engine) -> None:
    def subsets(items):
        out = [()]
        for item in items:
            out.extend([s + (item,) for s in out])
        return out

    zero = engine.zero
    day1 = (
        zero,
        engine.intern((zero,), ()),
        engine.intern((), (zero,)),
        engine.intern((zero,), (zero,)),
    )
    day2 = [engine.intern(l, r) for l in subsets(day1) for r in subsets(day1)]
    values = sorted({engine.canonical_form(g) for g in day2})
    assert len(values) == 22
    for g in values:
        for h in values:
            engine.compare(g, h)


WORKLOADS = [
    ("ladder solve (104k nodes)", bench_ladder),
    ("board sweep (4 vertices, 5 edges)", bench_sweep),
    ("day-3 canonicalization + compares", bench_day3),
]


def run(pure: bool, repeats: int) -> list[float]:
    results = []
    for _name, workload in WORKLOADS:
        best = min(
            _timed(workload, pure) for _ in range(repeats)
        )
        results.append(best)
    return results


def _timed(workload, pure: bool) -> float:
    engine = Engine(pure_kernel=pure)
    start = time.perf_counter()
    workload(engine)
    return time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    pure = run(pure=True, repeats=args.repeats)
    try:
        Engine(pure_kernel=False)
    except ImportError:
        print("compiled kernel not built; showing the pure kernel only")
        for (name, _), t in zip(WORKLOADS, pure):
            print("  %-36s %8.3fs" % (name, t))
        return 0
    compiled = run(pure=False, repeats=args.repeats)
    print("%-38s %10s %10s %8s" % ("workload", "pure", "compiled", "speedup"))
    for (name, _), tp, tc in zip(WORKLOADS, pure, compiled):
        print(
            "%-38s %9.3fs %9.3fs %7.2fx" % (name, tp, tc, tp / tc if tc else 0.0)
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
