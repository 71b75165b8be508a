"""Compare the compiled kernels against the pure-Python mirrors.

Usage: python benchmarks/bench_kernels.py [--trials N] [--nodes N]

Times the cascade Monte Carlo and the betweenness sweep on the bundled
17-station network and on a larger synthetic network, then prints the
per-backend wall time and the speedup.  Both backends produce bit-identical
output; this script asserts that before timing.
"""

import argparse
import random
import time

import numpy as np

from gridline import load_bundled, metrics
from gridline._kernels import pure

try:
    from gridline._kernels import _native
except ImportError:
    _native = None


def synthetic_network(rng, n):
    from gridline.network import RailLink, StationNode, ThreatProfile, TransitNetwork
    profile = ThreatProfile(threat=1.0, vulnerability=0.5, consequence=4.0,
                            prevention_cost=1.2, response_cost=1.8)
    names = [f"s{i:04d}" for i in range(n)]
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    for _ in range(n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            edges.add((min(i, j), max(i, j)))
    return TransitNetwork(
        nodes=tuple(StationNode(id=name, name=name, placement="surface",
                                profile=profile) for name in names),
        links=tuple(RailLink(a=names[i], b=names[j], profile=profile)
                    for i, j in sorted(edges)))


def timed(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_network(label, network, trials):
    indptr, indices = metrics.adjacency_csr(network)
    consequence = np.array([n.profile.consequence for n in network.nodes])

    rows = []
    pure_time, pure_casc = timed(pure.cascade_trials, indptr, indices,
                                 consequence, 0.5, trials, 42)
    if _native is not None:
        native_time, native_casc = timed(_native.cascade_trials, indptr,
                                         indices, consequence, 0.5, trials, 42)
        assert np.array_equal(np.asarray(native_casc), pure_casc)
        rows.append((f"cascade x{trials}", native_time, pure_time))
    else:
        rows.append((f"cascade x{trials}", None, pure_time))

    pure_time, pure_bw = timed(pure.betweenness, indptr, indices)
    if _native is not None:
        native_time, native_bw = timed(_native.betweenness, indptr, indices)
        assert np.array_equal(np.asarray(native_bw), pure_bw)
        rows.append(("betweenness", native_time, pure_time))
    else:
        rows.append(("betweenness", None, pure_time))

    print(f"\n{label} ({len(network.nodes)} nodes, {len(network.links)} links)")
    print(f"  {'kernel':20} {'native':>12} {'pure':>12} {'speedup':>9}")
    for name, native_time, pure_time in rows:
        if native_time is None:
            print(f"  {name:20} {'n/a':>12} {pure_time * 1e3:>10.2f}ms {'':>9}")
        else:
            print(f"  {name:20} {native_time * 1e3:>10.2f}ms "
                  f"{pure_time * 1e3:>10.2f}ms {pure_time / native_time:>8.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=10000)
    parser.add_argument("--nodes", type=int, default=300)
    args = parser.parse_args()

    if _native is None:
        print("compiled kernels unavailable; timing the pure backend only")

    bench_network("greenline17", load_bundled("greenline17"), args.trials)
    bench_network("synthetic", synthetic_network(random.Random(1), args.nodes),
                  args.trials)


if __name__ == "__main__":
    main()
