"""Pure-Python kernels: cascade Monte Carlo and shortest-path betweenness.

These mirror the compiled versions operation for operation.  Both backends
walk neighbors in CSR order, use the same counter-based RNG, and perform
the same float arithmetic in the same order, so their outputs are
bit-identical and the test suite can diff them directly.

The RNG is SplitMix64 in counter mode: each trial owns a stream keyed by
(seed, trial index), so results do not depend on scheduling or on how many
draws earlier trials consumed.
"""

from __future__ import annotations

import numpy as np

_MASK = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def cascade_trials(indptr: np.ndarray, indices: np.ndarray,
                   consequence: np.ndarray, gamma: float,
                   trials: int, seed: int) -> np.ndarray:
    """Run failure cascades; returns the total consequence of each trial.

    Each trial seeds one uniformly random node, then every newly failed
    node attempts each still-standing neighbor once with probability
    gamma, breadth-first.  The trial's value is the summed consequence of
    everything that failed.
    """
    n = len(indptr) - 1
    out = np.empty(trials, dtype=np.float64)
    failed = bytearray(n)
    queue = [0] * n
    cons = consequence.tolist()
    iptr = indptr.tolist()
    idx = indices.tolist()

    for t in range(trials):
        state = _mix64((seed ^ _mix64(((t + 1) * _GOLDEN) & _MASK)) & _MASK)

        state = (state + _GOLDEN) & _MASK
        u = (_mix64(state) >> 11) * 2.0 ** -53
        start = int(u * n)
        if start == n:
            start = n - 1

        for i in range(n):
            failed[i] = 0
        failed[start] = 1
        queue[0] = start
        head, tail = 0, 1
        total = cons[start]

        while head < tail:
            v = queue[head]
            head += 1
            for j in range(iptr[v], iptr[v + 1]):
                w = idx[j]
                if not failed[w]:
                    state = (state + _GOLDEN) & _MASK
                    u = (_mix64(state) >> 11) * 2.0 ** -53
                    if u < gamma:
                        failed[w] = 1
                        total += cons[w]
                        queue[tail] = w
                        tail += 1
        out[t] = total
    return out


def betweenness(indptr: np.ndarray, indices: np.ndarray) -> np.ndarray:
    """Raw shortest-path betweenness of every node (undirected, unnormalized).

    Brandes' accumulation, except predecessors are rediscovered during the
    reverse sweep by re-scanning neighbors for dist[v] == dist[w] - 1;
    that keeps the float operations identical across backends without a
    per-node predecessor list.
    """
    n = len(indptr) - 1
    iptr = indptr.tolist()
    idx = indices.tolist()
    bc = [0.0] * n
    dist = [0] * n
    sigma = [0.0] * n
    delta = [0.0] * n
    order = [0] * n

    for s in range(n):
        for i in range(n):
            dist[i] = -1
            sigma[i] = 0.0
            delta[i] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head, tail = 0, 1
        while head < tail:
            v = order[head]
            head += 1
            for j in range(iptr[v], iptr[v + 1]):
                w = idx[j]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    order[tail] = w
                    tail += 1
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]

        for i in range(tail - 1, 0, -1):
            w = order[i]
            coeff = (1.0 + delta[w]) / sigma[w]
            for j in range(iptr[w], iptr[w + 1]):
                v = idx[j]
                if dist[v] == dist[w] - 1:
                    delta[v] += sigma[v] * coeff
            bc[w] += delta[w]

    return np.asarray(bc, dtype=np.float64) / 2.0
