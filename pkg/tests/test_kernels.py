"""Backend equivalence: the compiled kernels must match the pure mirrors
bit for bit, not merely to within tolerance.
"""

import os
import random
import subprocess
import sys

import numpy as np
import pytest

from gridline import metrics
from gridline._kernels import BACKEND, pure

from _builders import random_connected_network

try:
    from gridline._kernels import _native
except ImportError:
    _native = None

needs_native = pytest.mark.skipif(_native is None,
                                  reason="compiled kernels not built")


def _csr_and_consequence(network):
    indptr, indices = metrics.adjacency_csr(network)
    consequence = np.array([n.profile.consequence for n in network.nodes])
    return indptr, indices, consequence


@needs_native
def test_native_backend_selected_by_default():
    assert BACKEND == "native"


@needs_native
def test_cascade_bit_identical_greenline(greenline):
    indptr, indices, consequence = _csr_and_consequence(greenline)
    for gamma in (0.05, 0.5, 0.95):
        a = np.asarray(_native.cascade_trials(indptr, indices, consequence,
                                              gamma, 4000, 12345))
        b = pure.cascade_trials(indptr, indices, consequence, gamma, 4000, 12345)
        assert np.array_equal(a, b)


@needs_native
def test_cascade_bit_identical_random_graphs():
    rng = random.Random(5)
    for _ in range(10):
        net = random_connected_network(rng, rng.randrange(3, 30))
        indptr, indices, consequence = _csr_and_consequence(net)
        seed = rng.randrange(2 ** 32)
        a = np.asarray(_native.cascade_trials(indptr, indices, consequence,
                                              0.4, 500, seed))
        b = pure.cascade_trials(indptr, indices, consequence, 0.4, 500, seed)
        assert np.array_equal(a, b)


@needs_native
def test_betweenness_bit_identical(greenline):
    indptr, indices, _ = _csr_and_consequence(greenline)
    a = np.asarray(_native.betweenness(indptr, indices))
    b = pure.betweenness(indptr, indices)
    assert np.array_equal(a, b)
    rng = random.Random(6)
    for _ in range(10):
        net = random_connected_network(rng, rng.randrange(3, 30))
        indptr, indices, _ = _csr_and_consequence(net)
        a = np.asarray(_native.betweenness(indptr, indices))
        b = pure.betweenness(indptr, indices)
        assert np.array_equal(a, b)


def test_trial_streams_are_independent(greenline):
    # each trial draws from its own counter stream, so a longer run
    # reproduces a shorter one as its prefix
    indptr, indices, consequence = _csr_and_consequence(greenline)
    short = pure.cascade_trials(indptr, indices, consequence, 0.5, 100, 77)
    long = pure.cascade_trials(indptr, indices, consequence, 0.5, 1000, 77)
    assert np.array_equal(short, long[:100])


def test_cascade_gamma_extremes(greenline):
    indptr, indices, consequence = _csr_and_consequence(greenline)
    total = consequence.sum()
    near_one = pure.cascade_trials(indptr, indices, consequence, 0.999999,
                                   200, 3)
    assert np.all(near_one == total)
    near_zero = pure.cascade_trials(indptr, indices, consequence, 1e-12, 200, 3)
    assert np.all(np.isin(near_zero, consequence))


def test_forced_pure_backend_subprocess():
    env = dict(os.environ, GRIDLINE_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import gridline; print(gridline.KERNEL_BACKEND)"],
        capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "pure"
