"""Resiliency-line calibration and the Monte Carlo cascade exponent.

The resiliency line is log10(q) = b + k * gamma * rho, fitted by least
squares over calibration points (gamma, q).  Its root gives the critical
vulnerability gamma_c = -b / (k * rho).  The exponent q for a given gamma
can also be estimated directly by simulating failure cascades and fitting
the tail of the consequence exceedance distribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, metrics
from .errors import CalibrationError
from .network import TransitNetwork

# Calibration fixture for the bundled network: q measured by the reference
# MBRA sessions at gamma = 0.10 and gamma = 0.90.
DEFAULT_CALIBRATION_POINTS = ((0.10, 1.86052), (0.90, 0.763993))

# Fraction of the empirical consequence distribution used by the exceedance
# fit; the remainder is dropped to avoid small-cascade saturation.
DEFAULT_TAIL_FRACTION = 0.9


@dataclass(frozen=True)
class CalibrationPoint:
    gamma: float
    q: float


@dataclass(frozen=True)
class ResilienceFit:
    b: float
    k: float
    rho: float
    gamma_critical: float | None


@dataclass(frozen=True)
class CriticalVulnerability:
    value: float
    raw: float
    clamped: bool


def _as_points(points) -> list[CalibrationPoint]:
    out = []
    for p in points:
        if isinstance(p, CalibrationPoint):
            out.append(p)
        else:
            gamma, q = p
            out.append(CalibrationPoint(gamma, q))
    return out


def fit_resilience_line(points, rho: float) -> ResilienceFit:
    """Least-squares fit of log10(q) against gamma * rho.

    Exact on two-point input.  gamma_critical is filled in when the line
    actually crosses zero at a fraction (declining k, root within [0, 1]).
    """
    pts = _as_points(points)
    if rho <= 0.0:
        raise CalibrationError("rho must be positive")
    if len({p.gamma for p in pts}) < 2:
        raise CalibrationError("need at least 2 calibration points with distinct gamma")
    for p in pts:
        if p.q <= 0.0:
            raise CalibrationError(f"q must be positive, got {p.q}")

    xs = [p.gamma * rho for p in pts]
    ys = [math.log10(p.q) for p in pts]
    x_mean = sum(xs) / len(xs)
    y_mean = sum(ys) / len(ys)
    sxx = sum((x - x_mean) ** 2 for x in xs)
    sxy = sum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys))
    k = sxy / sxx
    b = y_mean - k * x_mean

    gamma_critical = None
    if k < 0.0:
        raw = -b / (k * rho)
        if 0.0 <= raw <= 1.0:
            gamma_critical = raw
    return ResilienceFit(b=b, k=k, rho=rho, gamma_critical=gamma_critical)


def critical_vulnerability(fit: ResilienceFit) -> CriticalVulnerability:
    """Root of the resiliency line, clamped into [0, 1] with a flag when
    the raw crossing falls outside."""
    if fit.rho <= 0.0:
        raise CalibrationError("rho must be positive")
    if fit.k >= 0.0:
        raise CalibrationError("line does not decline; no critical vulnerability")
    raw = -fit.b / (fit.k * fit.rho)
    value = min(max(raw, 0.0), 1.0)
    return CriticalVulnerability(value=value, raw=raw, clamped=value != raw)


def default_fit(network: TransitNetwork) -> ResilienceFit:
    """Fit against the bundled calibration fixture using the network's own
    spectral radius."""
    rho = metrics.spectral_radius(metrics.adjacency_matrix(network))
    return fit_resilience_line(DEFAULT_CALIBRATION_POINTS, rho)


def estimate_q(network: TransitNetwork, gamma: float, trials: int, seed: int,
               tail_fraction: float = DEFAULT_TAIL_FRACTION) -> float:
    """Cascade exponent by Monte Carlo.

    Each trial fails one uniformly random station, then every newly failed
    station attempts each still-standing neighbor once with probability
    gamma, to quiescence; the trial records the summed consequence of the
    failed stations.  q is the negative slope of log10 exceedance
    probability against log10 consequence, fitted over the distinct
    consequence values strictly above the (1 - tail_fraction) quantile.
    Deterministic for a fixed seed.
    """
    if not 0.0 < gamma < 1.0:
        raise CalibrationError("gamma must lie strictly between 0 and 1")
    if trials < 1000:
        raise CalibrationError("need at least 1000 trials for a stable tail fit")
    if seed < 0:
        raise CalibrationError("seed must be a non-negative integer")
    if not 0.0 < tail_fraction <= 1.0:
        raise CalibrationError("tail_fraction must lie in (0, 1]")
    if not network.nodes or not metrics.is_connected(network):
        raise CalibrationError("cascade estimation requires a connected network")

    indptr, indices = metrics.adjacency_csr(network)
    consequence = np.array([n.profile.consequence for n in network.nodes],
                           dtype=np.float64)
    values = np.asarray(_kernels.cascade_trials(
        indptr, indices, consequence, float(gamma), int(trials), int(seed)))

    distinct = np.unique(values)
    distinct = distinct[distinct > 0.0]
    threshold = float(np.quantile(values, 1.0 - tail_fraction))
    tail = distinct[distinct > threshold]
    if len(tail) < 2:
        tail = distinct
    if len(tail) < 2:
        raise CalibrationError("cascade consequences are degenerate; cannot fit a slope")

    ordered = np.sort(values)
    exceed = (len(values) - np.searchsorted(ordered, tail, side="left")) / len(values)
    xs = np.log10(tail)
    ys = np.log10(exceed)
    x_mean = float(xs.mean())
    y_mean = float(ys.mean())
    slope = float(((xs - x_mean) * (ys - y_mean)).sum() / ((xs - x_mean) ** 2).sum())
    return -slope
