"""Benchmark the compiled bottleneck kernels against the pure-Python twin.

Builds one random network, extracts its CSR form, then times the three
kernel entry points on every backend that imports. Results are checked for
cross-backend equality while timing, so a run doubles as a parity check.

    python3 benchmarks/bench_kernels.py --nodes 80 --density 0.3 --repeat 3
"""

from __future__ import annotations

import argparse
import time

from fuzzysna import random_network
from fuzzysna.kernels import available_backends


def build_case(n: int, density: float, seed: int):
    g = random_network(n=n, density=density, vagueness=0.5, seed=seed)
    # benchmarks live in-tree, so reaching into the CSR helper is fine
    indptr, nbr, wts, _ = g._csr()
    return g.n, indptr, nbr, wts


def run_table_sweep(mod, n, indptr, nbr, wts, cap):
    out = []
    for t in range(n):
        out.append(mod.bottleneck_table(indptr, nbr, wts, n, t, cap))
    return out


def run_best_paths(mod, n, indptr, nbr, wts, cap, tables):
    out = []
    for t in range(n):
        table = tables[t]
        for s in range(n):
            if s == t:
                continue
            out.append(mod.shortest_lex_path(indptr, nbr, wts, table, s, t, cap))
    return out


def run_tied_paths(mod, n, indptr, nbr, wts, cap, tables, tie_eps, max_paths):
    out = []
    for t in range(n):
        table = tables[t]
        for s in range(n):
            if s == t:
                continue
            opt = table[cap][s]
            if opt == float("-inf"):
                continue
            out.append(
                mod.enumerate_tied_paths(
                    indptr, nbr, wts, table, s, t, cap, opt - tie_eps, max_paths
                )
            )
    return out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nodes", type=int, default=80)
    parser.add_argument("--density", type=float, default=0.3)
    parser.add_argument("--steps", type=int, default=4, help="path step cap")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--repeat", type=int, default=3, help="keep best of N")
    args = parser.parse_args()

    n, indptr, nbr, wts = build_case(args.nodes, args.density, args.seed)
    backends = available_backends()
    print(
        f"n={n} density={args.density} steps={args.steps} "
        f"backends={', '.join(backends)}"
    )

    stages = ("table-sweep", "best-paths", "tied-paths")
    times: dict[str, dict[str, float]] = {name: {} for name in backends}
    results: dict[str, tuple] = {}
    for name, mod in backends.items():
        best = {stage: float("inf") for stage in stages}
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            tables = run_table_sweep(mod, n, indptr, nbr, wts, args.steps)
            t1 = time.perf_counter()
            paths = run_best_paths(mod, n, indptr, nbr, wts, args.steps, tables)
            t2 = time.perf_counter()
            tied = run_tied_paths(
                mod, n, indptr, nbr, wts, args.steps, tables, 1e-9, 10_000
            )
            t3 = time.perf_counter()
            best["table-sweep"] = min(best["table-sweep"], t1 - t0)
            best["best-paths"] = min(best["best-paths"], t2 - t1)
            best["tied-paths"] = min(best["tied-paths"], t3 - t2)
        times[name] = best
        results[name] = (
            [[list(row) for row in table] for table in tables],
            [list(p) if p is not None else None for p in paths],
            [(sorted(map(tuple, found)), trunc) for found, trunc in tied],
        )

    names = list(backends)
    for other in names[1:]:
        if results[other] != results[names[0]]:
            print(f"MISMATCH: {other} disagrees with {names[0]}")
            return 1
    if len(names) > 1:
        print(f"parity: {' and '.join(names)} produce identical results")

    width = max(len(name) for name in names) + 2
    header = "backend".ljust(width) + "".join(s.rjust(14) for s in stages)
    print(header)
    for name in names:
        row = name.ljust(width)
        row += "".join(f"{times[name][s] * 1e3:11.2f} ms" for s in stages)
        print(row)
    if "python" in times and "compiled" in times:
        row = "speedup".ljust(width)
        for stage in stages:
            ratio = times["python"][stage] / times["compiled"][stage]
            row += f"{ratio:12.1f} x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
