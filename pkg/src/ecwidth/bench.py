"""Benchmark comparing the compiled and pure-Python search kernels."""

from __future__ import annotations

import time

from . import _kernel
from ._kernel import _pure
from .ecw import _parent_array, _triangle_order, ecw_heuristic
from .fixtures import glued_binary_trees, ladder, random_connected_graph


def _time(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def run_benchmark(rungs: int = 5, seed: int = 7) -> None:
    compiled = _kernel.backend
    if compiled.IMPL == "pure":
        print("compiled kernel unavailable; benchmarking pure against itself")
    cases = [
        ("ladder(%d)" % rungs, ladder(rungs)[0]),
        ("glued_binary_trees(2)", glued_binary_trees(2)),
        ("glued_binary_trees(3)", glued_binary_trees(3)),
        ("random_connected(10, 17, seed=%d)" % seed,
         random_connected_graph(10, 17, seed)),
    ]
    print(f"{'case':34} {'kernel':8} {'width':5} {'nodes':>9} {'time':>9}")
    for name, g in cases:
        seed_res = ecw_heuristic(g, seed=0, iterations=60)
        order = _triangle_order(g)
        args = (g.n, list(g.edges), order, seed_res.width,
                _parent_array(seed_res.witness), 0)
        for impl in (compiled, _pure):
            (width, _parent, exact, nodes), dt = _time(
                impl.branch_and_bound, *args)
            assert exact
            print(f"{name:34} {impl.IMPL:8} {width:5} {nodes:9} {dt:8.3f}s")


if __name__ == "__main__":
    run_benchmark()
