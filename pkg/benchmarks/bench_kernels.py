"""Compare the compiled and pure-Python kernels on the Gray graph workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

import numpy as np

from grayud import _kernels
from grayud.graph import gray_graph, grid3_configuration, levi_graph
from grayud.symmetry import _search_order, refined_colors


def workloads(g, h):
    gp, gi = g.csr
    hp, hi = h.csr
    (c,) = refined_colors([g])
    cg, ch = refined_colors([g, h])
    order, parent = _search_order(g, c)
    order_gh, parent_gh = _search_order(g, cg)
    empty = np.zeros(0, dtype=np.int64)
    return {
        "bfs_distances": lambda k: k.bfs_distances(gp, gi),
        "girth": lambda k: k.girth(gp, gi),
        "isomorphism (first)": lambda k: k.search(gp, gi, hp, hi, h.adjacency_matrix, order_gh,
                                                  parent_gh, cg, ch, empty, 1),
        "all automorphisms": lambda k: k.search(gp, gi, gp, gi, g.adjacency_matrix, order,
                                                parent, c, c, empty, 0),
    }


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels.compiled_backend is None:
        raise SystemExit("compiled backend not built; run `pip install -e . --no-build-isolation`")
    g = gray_graph()
    h = levi_graph(grid3_configuration(3))
    print(f"{'kernel':<22}{'python [ms]':>14}{'cython [ms]':>14}{'speedup':>10}")
    for name, fn in workloads(g, h).items():
        a = fn(_kernels.python_backend)
        b = fn(_kernels.compiled_backend)
        assert np.array_equal(np.asarray(a), np.asarray(b)), name
        tp = best_of(lambda: fn(_kernels.python_backend), args.repeat)
        tc = best_of(lambda: fn(_kernels.compiled_backend), args.repeat)
        print(f"{name:<22}{tp * 1e3:>14.3f}{tc * 1e3:>14.3f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
