# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: cascade Monte Carlo and shortest-path betweenness.

Must stay operation-for-operation identical to pure.py; the test suite
compares the two bit-for-bit.
"""

import numpy as np

cdef unsigned long long _GOLDEN = 0x9E3779B97F4A7C15ULL


cdef inline unsigned long long _mix64(unsigned long long z) nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


def cascade_trials(int[:] indptr, int[:] indices, double[:] consequence,
                   double gamma, int trials, unsigned long long seed):
    cdef int n = indptr.shape[0] - 1
    out_arr = np.empty(trials, dtype=np.float64)
    failed_arr = np.zeros(n, dtype=np.uint8)
    queue_arr = np.zeros(n, dtype=np.int32)
    cdef double[:] out = out_arr
    cdef unsigned char[:] failed = failed_arr
    cdef int[:] queue = queue_arr

    cdef unsigned long long state
    cdef double u, total
    cdef int t, i, j, v, w, start, head, tail

    for t in range(trials):
        state = _mix64(seed ^ _mix64((<unsigned long long>(t + 1)) * _GOLDEN))

        state = state + _GOLDEN
        u = <double>(_mix64(state) >> 11) * (2.0 ** -53)
        start = <int>(u * n)
        if start == n:
            start = n - 1

        for i in range(n):
            failed[i] = 0
        failed[start] = 1
        queue[0] = start
        head = 0
        tail = 1
        total = consequence[start]

        while head < tail:
            v = queue[head]
            head += 1
            for j in range(indptr[v], indptr[v + 1]):
                w = indices[j]
                if not failed[w]:
                    state = state + _GOLDEN
                    u = <double>(_mix64(state) >> 11) * (2.0 ** -53)
                    if u < gamma:
                        failed[w] = 1
                        total += consequence[w]
                        queue[tail] = w
                        tail += 1
        out[t] = total
    return out_arr


def betweenness(int[:] indptr, int[:] indices):
    cdef int n = indptr.shape[0] - 1
    bc_arr = np.zeros(n, dtype=np.float64)
    dist_arr = np.zeros(n, dtype=np.int32)
    sigma_arr = np.zeros(n, dtype=np.float64)
    delta_arr = np.zeros(n, dtype=np.float64)
    order_arr = np.zeros(n, dtype=np.int32)
    cdef double[:] bc = bc_arr
    cdef int[:] dist = dist_arr
    cdef double[:] sigma = sigma_arr
    cdef double[:] delta = delta_arr
    cdef int[:] order = order_arr

    cdef int s, i, j, v, w, head, tail
    cdef double coeff

    for s in range(n):
        for i in range(n):
            dist[i] = -1
            sigma[i] = 0.0
            delta[i] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = order[head]
            head += 1
            for j in range(indptr[v], indptr[v + 1]):
                w = indices[j]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    order[tail] = w
                    tail += 1
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]

        for i in range(tail - 1, 0, -1):
            w = order[i]
            coeff = (1.0 + delta[w]) / sigma[w]
            for j in range(indptr[w], indptr[w + 1]):
                v = indices[j]
                if dist[v] == dist[w] - 1:
                    delta[v] += sigma[v] * coeff
            bc[w] += delta[w]

    for i in range(n):
        bc[i] = bc[i] / 2.0
    return bc_arr
