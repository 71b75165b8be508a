"""Resiliency line fit, critical vulnerability, Monte Carlo exponent."""

import math

import pytest

from gridline import resilience
from gridline.errors import CalibrationError, GridlineError

from _builders import make_network


def test_fit_from_bundled_points():
    fit = resilience.fit_resilience_line(
        resilience.DEFAULT_CALIBRATION_POINTS, 2.22)
    assert -0.219 <= fit.k <= -0.216
    assert 0.316 <= fit.b <= 0.320
    assert fit.rho == 2.22


def test_fit_passes_through_the_two_points():
    fit = resilience.fit_resilience_line(
        resilience.DEFAULT_CALIBRATION_POINTS, 2.22)
    for gamma, q in resilience.DEFAULT_CALIBRATION_POINTS:
        predicted = fit.b + fit.k * gamma * fit.rho
        assert predicted == pytest.approx(math.log10(q), abs=1e-12)


def test_fit_accepts_calibration_points():
    points = tuple(resilience.CalibrationPoint(g, q)
                   for g, q in resilience.DEFAULT_CALIBRATION_POINTS)
    fit = resilience.fit_resilience_line(points, 2.22)
    assert fit.k == pytest.approx(-0.2176, abs=0.001)


def test_critical_vulnerability_greenline_window():
    fit = resilience.fit_resilience_line(
        resilience.DEFAULT_CALIBRATION_POINTS, 2.22)
    crit = resilience.critical_vulnerability(fit)
    assert crit.value == pytest.approx(0.64, abs=0.02)
    assert not crit.clamped
    # the fitted line crosses q = 1 exactly at the critical point
    assert fit.b + fit.k * crit.value * fit.rho == pytest.approx(0.0, abs=1e-12)


def test_gamma_critical_invariant_to_rho_choice(greenline):
    fixed = resilience.fit_resilience_line(
        resilience.DEFAULT_CALIBRATION_POINTS, 2.22)
    live = resilience.default_fit(greenline)
    assert live.rho == pytest.approx(2.22, abs=0.01)
    assert live.gamma_critical == pytest.approx(fixed.gamma_critical, abs=1e-12)
    assert live.b == pytest.approx(fixed.b, abs=1e-12)


def test_critical_vulnerability_clamps_to_unit_range():
    # shallow slope pushes the raw crossing past 1
    fit = resilience.fit_resilience_line(((0.1, 1.2), (0.9, 1.05)), 1.0)
    crit = resilience.critical_vulnerability(fit)
    assert crit.clamped
    assert crit.value == 1.0
    assert crit.raw > 1.0
    assert fit.gamma_critical is None


def test_critical_vulnerability_needs_negative_slope():
    fit = resilience.fit_resilience_line(((0.1, 0.9), (0.9, 1.4)), 2.0)
    assert fit.k > 0
    with pytest.raises(CalibrationError):
        resilience.critical_vulnerability(fit)


def test_fit_rejects_bad_inputs():
    points = resilience.DEFAULT_CALIBRATION_POINTS
    with pytest.raises(CalibrationError):
        resilience.fit_resilience_line(points, 0.0)
    with pytest.raises(CalibrationError):
        resilience.fit_resilience_line(((0.5, 1.0),), 2.0)
    with pytest.raises(CalibrationError):
        resilience.fit_resilience_line(((0.5, 1.0), (0.5, 2.0)), 2.0)
    with pytest.raises(CalibrationError):
        resilience.fit_resilience_line(((0.1, 1.0), (0.9, -2.0)), 2.0)


def test_estimate_q_deterministic(greenline):
    a = resilience.estimate_q(greenline, 0.3, 2000, seed=42)
    b = resilience.estimate_q(greenline, 0.3, 2000, seed=42)
    assert a == b
    c = resilience.estimate_q(greenline, 0.3, 2000, seed=43)
    assert a != c


def test_estimate_q_small_gamma_steep_tail(greenline):
    q = resilience.estimate_q(greenline, 0.01, 10000, seed=7)
    assert q > 2.0


def test_estimate_q_decreases_with_gamma(greenline):
    low = resilience.estimate_q(greenline, 0.1, 10000, seed=7)
    high = resilience.estimate_q(greenline, 0.9, 10000, seed=7)
    assert high < low


def test_estimate_q_validation(greenline):
    with pytest.raises(CalibrationError):
        resilience.estimate_q(greenline, 0.0, 2000, seed=1)
    with pytest.raises(CalibrationError):
        resilience.estimate_q(greenline, 1.0, 2000, seed=1)
    with pytest.raises(CalibrationError):
        resilience.estimate_q(greenline, 0.5, 999, seed=1)
    with pytest.raises(CalibrationError):
        resilience.estimate_q(greenline, 0.5, 2000, seed=-1)
    with pytest.raises(CalibrationError):
        resilience.estimate_q(greenline, 0.5, 2000, seed=1, tail_fraction=0.0)
    with pytest.raises(CalibrationError):
        resilience.estimate_q(greenline, 0.5, 2000, seed=1, tail_fraction=1.5)


def test_estimate_q_requires_connected(greenline):
    with pytest.raises(CalibrationError):
        resilience.estimate_q(greenline.without_node("kenmore"), 0.5, 2000, seed=1)
    empty = make_network(0, [])
    with pytest.raises(CalibrationError):
        resilience.estimate_q(empty, 0.5, 2000, seed=1)


def test_default_fit_rejects_empty():
    with pytest.raises(GridlineError):
        resilience.default_fit(make_network(0, []))
