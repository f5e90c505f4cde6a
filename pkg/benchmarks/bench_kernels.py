"""Compare the compiled and pure-Python kernels on random unicycle graphs.

    python benchmarks/bench_kernels.py [--sizes 14 16 18 20] [--reps 5]
"""
from __future__ import annotations

import argparse
import statistics
import time

from psigreedoid.generators import GeneratorSpec, generate_random_unicycle
from psigreedoid.kernels import backends


def workload(mod, adj):
    full = (1 << len(adj)) - 1
    psi = mod.psi_masks(adj)
    mod.accessibility_violation(psi)
    mod.maximum_matching_pairs(adj, full)
    return len(psi)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[14, 16, 18, 20])
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    mods = backends()
    print(f"{'n':>3} {'|Psi|':>7} " + " ".join(f"{name:>12}" for name in mods) + "   speedup")
    for n in args.sizes:
        graphs = [
            generate_random_unicycle(GeneratorSpec(n, 3 + (i % 6), seed=args.seed + i)).adjacency_masks
            for i in range(args.reps)
        ]
        times = {}
        sizes = set()
        for name, mod in mods.items():
            runs = []
            for adj in graphs:
                t0 = time.perf_counter()
                sizes.add(workload(mod, adj))
                runs.append(time.perf_counter() - t0)
            times[name] = statistics.median(runs)
        cols = " ".join(f"{times[name] * 1e3:10.2f}ms" for name in mods)
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "      n/a"
        print(f"{n:>3} {max(sizes):>7} {cols} {speed}")


if __name__ == "__main__":
    main()
