"""Compare the compiled treewidth kernel against the pure-Python one.

Run as: python benchmarks/bench_kernels.py
"""

import time

from gridlab._kernels import _pure
from gridlab.generators import grid, random_graph

try:
    from gridlab._kernels import _core
except ImportError:
    _core = None


def instances():
    yield "grid 4x4", grid(4, 4)
    yield "grid 4x5", grid(4, 5)
    yield "grid 5x5", grid(5, 5)
    for n in (14, 16, 18):
        for seed in (0, 1):
            yield f"gnp n={n} seed={seed}", random_graph(n, seed, 0.3)


def bench(kernel, g):
    start = time.perf_counter()
    width, _ = kernel.treewidth_order(g.n, g.adjacency_masks())
    return width, time.perf_counter() - start


def main():
    if _core is None:
        print("compiled kernel unavailable; timing the fallback only")
    print(f"{'instance':<20} {'width':>5} {'pure s':>10} {'cython s':>10} "
          f"{'speedup':>8}")
    for name, g in instances():
        w_pure, t_pure = bench(_pure, g)
        if _core is not None:
            w_core, t_core = bench(_core, g)
            assert w_core == w_pure, (name, w_core, w_pure)
            print(f"{name:<20} {w_pure:>5} {t_pure:>10.4f} {t_core:>10.4f} "
                  f"{t_pure / max(t_core, 1e-9):>7.1f}x")
        else:
            print(f"{name:<20} {w_pure:>5} {t_pure:>10.4f} {'-':>10} "
                  f"{'-':>8}")


if __name__ == "__main__":
    main()
