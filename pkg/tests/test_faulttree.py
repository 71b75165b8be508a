"""Fault-tree OR gate, allocators, beta calibration, budget sweeps."""

import math
import random

import pytest

from gridline import faulttree
from gridline.errors import CalibrationError, FormatError, GridlineError

LEAF_FIELDS = dict(threat=1.0, consequence=10.0, elimination_cost=2.0)


def leaf(label, v0, **overrides):
    fields = dict(LEAF_FIELDS, **overrides)
    return faulttree.ThreatLeaf(label=label, asset=overrides.get("asset", "x"),
                                threat=fields["threat"], base_vulnerability=v0,
                                consequence=fields["consequence"],
                                elimination_cost=fields["elimination_cost"])


def test_bundled_tree_shape(bundled_tree):
    tree, curve = bundled_tree
    assert tree.labels() == ("Bomb@Copley", "SCADA@Copley",
                             "Bomb@Kenmore", "SCADA@Kenmore")
    assert tree.total_elimination_cost() == 10.0
    assert curve.beta == pytest.approx(1.163, abs=0.005)


def test_load_bundled_tree_unknown():
    with pytest.raises(GridlineError):
        faulttree.load_bundled_tree("orange-line")


def test_zero_budget_vulnerability_and_risk(bundled_tree):
    tree, curve = bundled_tree
    zero = faulttree.zero_allocation(tree)
    assert faulttree.top_vulnerability(tree, zero, curve) == pytest.approx(
        0.5023, abs=0.0005)
    assert faulttree.tree_risk(tree, zero, curve) == pytest.approx(4.90, abs=0.01)


def test_leaf_vulnerability_reduction_curve():
    curve = faulttree.ReductionCurve(beta=2.0)
    one = leaf("a", 0.4)
    assert faulttree.leaf_vulnerability(one, 0.0, curve) == 0.4
    spent = faulttree.leaf_vulnerability(one, 1.0, curve)
    assert spent == pytest.approx(0.4 * math.exp(-2.0 * 1.0 / 2.0))
    # spending more never raises a leaf's vulnerability
    assert faulttree.leaf_vulnerability(one, 2.0, curve) < spent


def test_or_gate_matches_direct_product():
    rng = random.Random(99)
    curve = faulttree.ReductionCurve(beta=1.0)
    for _ in range(50):
        leaves = tuple(leaf(f"l{i}", rng.uniform(0.01, 0.9))
                       for i in range(rng.randrange(1, 8)))
        tree = faulttree.FaultTree(leaves=leaves)
        got = faulttree.top_vulnerability(
            tree, faulttree.zero_allocation(tree), curve)
        product = 1.0
        for item in leaves:
            product *= 1.0 - item.base_vulnerability
        assert got == pytest.approx(1.0 - product, abs=1e-9)


def test_proportional_allocation_by_elimination_cost(bundled_tree):
    tree, _ = bundled_tree
    allocation = faulttree.allocate_proportional(tree, 10.0)
    assert allocation.spend["Bomb@Copley"] == pytest.approx(3.0)
    assert allocation.spend["SCADA@Copley"] == pytest.approx(2.0)
    assert allocation.total() == pytest.approx(10.0)


def test_greedy_spends_the_whole_budget(bundled_tree):
    tree, curve = bundled_tree
    allocation = faulttree.allocate_greedy(tree, 5.0, 0.01, curve)
    assert allocation.total() == pytest.approx(5.0)
    assert all(v >= 0 for v in allocation.spend.values())


def test_greedy_prefers_the_cheap_high_value_leaf(bundled_tree):
    tree, curve = bundled_tree
    allocation = faulttree.allocate_greedy(tree, 2.0, 0.01, curve)
    assert allocation.spend["SCADA@Copley"] > allocation.spend["Bomb@Copley"]
    assert allocation.spend["SCADA@Kenmore"] > allocation.spend["Bomb@Kenmore"]


def test_greedy_never_loses_to_proportional(bundled_tree):
    tree, curve = bundled_tree
    for budget in (1.0, 5.0, 10.0):
        greedy = faulttree.tree_risk(
            tree, faulttree.allocate_greedy(tree, budget, 0.01, curve), curve)
        proportional = faulttree.tree_risk(
            tree, faulttree.allocate_proportional(tree, budget), curve)
        assert greedy <= proportional + 1e-9


def test_allocate_dispatch(bundled_tree):
    tree, curve = bundled_tree
    a = faulttree.allocate(tree, 4.0, "proportional", curve)
    b = faulttree.allocate_proportional(tree, 4.0)
    assert a.spend == b.spend
    with pytest.raises(GridlineError):
        faulttree.allocate(tree, 4.0, "simulated-annealing", curve)


def test_allocation_checks(bundled_tree):
    tree, curve = bundled_tree
    stray = faulttree.Allocation(spend={"Bomb@Fenway": 1.0}, budget=1.0)
    with pytest.raises(GridlineError):
        faulttree.top_vulnerability(tree, stray, curve)
    negative = faulttree.Allocation(spend={"Bomb@Copley": -1.0}, budget=1.0)
    with pytest.raises(GridlineError):
        faulttree.top_vulnerability(tree, negative, curve)
    over = faulttree.Allocation(spend={"Bomb@Copley": 2.0}, budget=1.0)
    with pytest.raises(GridlineError):
        faulttree.top_vulnerability(tree, over, curve)


def test_negative_budget_rejected(bundled_tree):
    tree, curve = bundled_tree
    with pytest.raises(GridlineError):
        faulttree.allocate(tree, -1.0, "proportional", curve)


def test_calibrate_beta_hits_target(bundled_tree):
    tree, curve = bundled_tree
    recalibrated = faulttree.calibrate_beta(tree, 10.0, 0.1855)
    assert recalibrated.beta == pytest.approx(curve.beta, abs=1e-9)
    allocation = faulttree.allocate_proportional(tree, 10.0)
    reached = faulttree.top_vulnerability(tree, allocation, recalibrated)
    assert reached == pytest.approx(0.1855, abs=1e-9)


def test_calibrate_beta_closed_form(bundled_tree):
    # with proportional spends of (3,2,3,2) both leaf pairs shrink by the
    # same factor a = exp(-beta), so a solves a quadratic in closed form
    tree, _ = bundled_tree
    target = 0.1855
    c = 1.0 - math.sqrt(1.0 - target)
    a = (0.32 - math.sqrt(0.32 ** 2 - 4 * 0.0255 * c)) / (2 * 0.0255)
    expected = -math.log(a)
    got = faulttree.calibrate_beta(tree, 10.0, target)
    assert got.beta == pytest.approx(expected, abs=1e-9)


def test_calibrate_beta_unreachable_targets(bundled_tree):
    tree, _ = bundled_tree
    with pytest.raises(CalibrationError):
        faulttree.calibrate_beta(tree, 10.0, 0.0)
    with pytest.raises(CalibrationError):
        faulttree.calibrate_beta(tree, 10.0, 0.9)


def test_calibrate_beta_baseline_target(bundled_tree):
    tree, curve = bundled_tree
    baseline = faulttree.top_vulnerability(
        tree, faulttree.zero_allocation(tree), curve)
    flat = faulttree.calibrate_beta(tree, 10.0, baseline)
    assert flat.beta == faulttree.BETA_MIN


def test_budget_sweep_values(bundled_tree):
    tree, curve = bundled_tree
    points = faulttree.budget_sweep(tree, [0.0, 5.0, 10.0], "proportional", curve)
    assert [p.budget for p in points] == [0.0, 5.0, 10.0]
    assert points[0].vulnerability == pytest.approx(0.5023, abs=0.0005)
    assert points[1].vulnerability == pytest.approx(0.3275, abs=0.025)
    assert points[2].vulnerability == pytest.approx(0.1855, abs=0.005)
    assert points[2].risk < points[1].risk < points[0].risk


def test_budget_sweep_rejects_bad_lists(bundled_tree):
    tree, curve = bundled_tree
    with pytest.raises(GridlineError):
        faulttree.budget_sweep(tree, [5.0, 1.0], "proportional", curve)
    with pytest.raises(GridlineError):
        faulttree.budget_sweep(tree, [-1.0, 5.0], "proportional", curve)


def test_validate_tree_rules():
    bad = faulttree.FaultTree(leaves=(
        leaf("dup", 0.5), leaf("dup", 0.4),
        leaf("hot", 1.5), leaf("free", 0.2, elimination_cost=0.0),
    ))
    rules = {v.rule for v in faulttree.validate_tree(bad)}
    assert "unique-label" in rules
    assert any("range" in r or "vulnerability" in r for r in rules)
    assert any("cost" in r for r in rules)


def test_parse_tree_roundtrip(bundled_tree):
    tree, curve = bundled_tree
    doc = faulttree.serialize_tree_dict(tree, curve)
    again, curve_again = faulttree.parse_tree_dict(doc)
    assert again == tree
    assert curve_again == curve


def test_parse_tree_strictness(bundled_tree):
    tree, curve = bundled_tree
    doc = faulttree.serialize_tree_dict(tree, curve)
    doc["leaves"][0]["surprise"] = 1
    with pytest.raises(FormatError) as err:
        faulttree.parse_tree_dict(doc)
    assert "leaves[0]" in str(err.value)

    doc = faulttree.serialize_tree_dict(tree, curve)
    del doc["leaves"][1]["v0"]
    with pytest.raises(FormatError):
        faulttree.parse_tree_dict(doc)

    doc = faulttree.serialize_tree_dict(tree, curve)
    doc["beta"] = -2.0
    with pytest.raises(FormatError):
        faulttree.parse_tree_dict(doc)


def test_parse_tree_beta_optional(bundled_tree):
    tree, curve = bundled_tree
    doc = faulttree.serialize_tree_dict(tree, curve)
    del doc["beta"]
    again, no_curve = faulttree.parse_tree_dict(doc)
    assert again == tree
    assert no_curve is None
