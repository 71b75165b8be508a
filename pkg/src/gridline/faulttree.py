"""Fault-tree budget optimization.

A fault tree here is a flat OR gate over threat leaves: the top event
occurs if any leaf succeeds, so top vulnerability is 1 - prod(1 - v_i).
Spending buys each leaf's vulnerability down an exponential reduction
curve v = v0 * exp(-beta * spend / E), where E is the leaf's elimination
cost.  Allocators split a budget across leaves; calibrate_beta pins the
curve so a known full-budget outcome is reproduced.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources

from .errors import (CalibrationError, FormatError, GridlineError,
                     UnknownDatasetError, ValidationError)
from .network import Violation

BUNDLED_TREES = ("copley-kenmore",)

# Reported when the calibration target needs no reduction at all.
BETA_MIN = 1e-9

# Dollar granularity of the greedy allocator.
DEFAULT_STEP = 0.01

ALLOCATORS = ("proportional", "greedy")


@dataclass(frozen=True)
class ThreatLeaf:
    label: str
    asset: str
    threat: float
    base_vulnerability: float
    consequence: float
    elimination_cost: float


@dataclass(frozen=True)
class FaultTree:
    leaves: tuple[ThreatLeaf, ...]

    def labels(self) -> tuple[str, ...]:
        return tuple(leaf.label for leaf in self.leaves)

    def total_elimination_cost(self) -> float:
        return sum(leaf.elimination_cost for leaf in self.leaves)


@dataclass(frozen=True)
class ReductionCurve:
    beta: float


@dataclass(frozen=True)
class Allocation:
    spend: dict[str, float]
    budget: float

    def total(self) -> float:
        return sum(self.spend.values())


@dataclass(frozen=True)
class SweepPoint:
    budget: float
    vulnerability: float
    risk: float
    allocation: Allocation


def validate_tree(tree: FaultTree) -> list[Violation]:
    out: list[Violation] = []
    if not tree.leaves:
        out.append(Violation("tree", "non-empty", "tree must have at least one leaf"))
    seen: set[str] = set()
    for leaf in tree.leaves:
        entity = f"leaf {leaf.label}"
        if leaf.label in seen:
            out.append(Violation(entity, "unique-label",
                                 f"duplicate leaf label {leaf.label!r}"))
        seen.add(leaf.label)
        if not 0.0 <= leaf.threat <= 1.0:
            out.append(Violation(entity, "threat-range", "threat out of range [0,1]"))
        if not 0.0 <= leaf.base_vulnerability <= 1.0:
            out.append(Violation(entity, "vulnerability-range",
                                 "base vulnerability out of range [0,1]"))
        if leaf.consequence < 0.0:
            out.append(Violation(entity, "consequence-negative",
                                 "consequence must be >= 0"))
        if leaf.elimination_cost <= 0.0:
            out.append(Violation(entity, "elimination-cost",
                                 "elimination cost must be > 0"))
    return out


def _check_allocation(tree: FaultTree, allocation: Allocation) -> None:
    labels = set(tree.labels())
    for label, spend in allocation.spend.items():
        if label not in labels:
            raise GridlineError(f"allocation names unknown leaf {label!r}")
        if spend < 0.0:
            raise GridlineError(f"negative spend on leaf {label!r}")
    if allocation.total() > allocation.budget + 1e-9:
        raise GridlineError("allocation exceeds its budget")


def leaf_vulnerability(leaf: ThreatLeaf, spend: float,
                       curve: ReductionCurve) -> float:
    """Vulnerability left after spending on the leaf: v0 * exp(-beta*x/E)."""
    if spend < 0.0:
        raise GridlineError("spend must be >= 0")
    return leaf.base_vulnerability * math.exp(-curve.beta * spend / leaf.elimination_cost)


def top_vulnerability(tree: FaultTree, allocation: Allocation,
                      curve: ReductionCurve) -> float:
    """OR-gate top event probability: 1 - prod(1 - v_i)."""
    _check_allocation(tree, allocation)
    survive = 1.0
    for leaf in tree.leaves:
        v = leaf_vulnerability(leaf, allocation.spend.get(leaf.label, 0.0), curve)
        survive *= 1.0 - v
    return 1.0 - survive


def tree_risk(tree: FaultTree, allocation: Allocation,
              curve: ReductionCurve) -> float:
    """Summed leaf risk T x v(spend) x C under the allocation."""
    _check_allocation(tree, allocation)
    total = 0.0
    for leaf in tree.leaves:
        v = leaf_vulnerability(leaf, allocation.spend.get(leaf.label, 0.0), curve)
        total += leaf.threat * v * leaf.consequence
    return total


def zero_allocation(tree: FaultTree) -> Allocation:
    return Allocation(spend={leaf.label: 0.0 for leaf in tree.leaves}, budget=0.0)


def allocate_proportional(tree: FaultTree, budget: float) -> Allocation:
    """Spend proportional to each leaf's elimination cost."""
    if budget < 0.0:
        raise GridlineError("budget must be >= 0")
    total_cost = tree.total_elimination_cost()
    spend = {leaf.label: budget * leaf.elimination_cost / total_cost
             for leaf in tree.leaves}
    return Allocation(spend=spend, budget=budget)


def allocate_greedy(tree: FaultTree, budget: float, step: float,
                    curve: ReductionCurve) -> Allocation:
    """Assign the budget in steps, each to the leaf with the greatest
    marginal risk decrease (beta/E) * T * v * C; ties go to the first
    label alphabetically.
    """
    if budget < 0.0:
        raise GridlineError("budget must be >= 0")
    if step <= 0.0:
        raise GridlineError("step must be > 0")
    ordered = sorted(tree.leaves, key=lambda leaf: leaf.label)
    spend = {leaf.label: 0.0 for leaf in tree.leaves}
    remaining = budget
    while remaining > 1e-12:
        chunk = min(step, remaining)
        best = None
        best_gain = -1.0
        for leaf in ordered:
            v = leaf_vulnerability(leaf, spend[leaf.label], curve)
            gain = (curve.beta / leaf.elimination_cost) * leaf.threat * v * leaf.consequence
            if gain > best_gain:
                best = leaf
                best_gain = gain
        spend[best.label] += chunk
        remaining -= chunk
    return Allocation(spend=spend, budget=budget)


def allocate(tree: FaultTree, budget: float, allocator: str,
             curve: ReductionCurve, step: float = DEFAULT_STEP) -> Allocation:
    """Dispatch to a named allocator."""
    if allocator == "proportional":
        return allocate_proportional(tree, budget)
    if allocator == "greedy":
        return allocate_greedy(tree, budget, step, curve)
    raise GridlineError(f"unknown allocator {allocator!r}")


def calibrate_beta(tree: FaultTree, full_budget: float,
                   target_top_vulnerability: float) -> ReductionCurve:
    """Bisect beta so that spending the full budget proportionally leaves
    exactly the target top vulnerability."""
    if full_budget <= 0.0:
        raise GridlineError("full budget must be > 0")
    baseline = top_vulnerability(tree, zero_allocation(tree), ReductionCurve(beta=BETA_MIN))
    if target_top_vulnerability <= 0.0:
        raise CalibrationError(
            "target 0 is unreachable; the reduction curve never hits zero")
    if target_top_vulnerability > baseline:
        raise CalibrationError(
            f"target {target_top_vulnerability} exceeds the zero-spend "
            f"vulnerability {baseline:.6f}")
    if target_top_vulnerability == baseline:
        return ReductionCurve(beta=BETA_MIN)

    allocation = allocate_proportional(tree, full_budget)

    def top_at(beta: float) -> float:
        return top_vulnerability(tree, allocation, ReductionCurve(beta=beta))

    lo = BETA_MIN
    hi = 1.0
    while top_at(hi) > target_top_vulnerability:
        hi *= 2.0
        if hi > 1e12:
            raise CalibrationError("target unreachable within the beta search range")
    for _ in range(200):
        if hi - lo <= 1e-14 * max(1.0, hi):
            break
        mid = 0.5 * (lo + hi)
        if top_at(mid) > target_top_vulnerability:
            lo = mid
        else:
            hi = mid
    return ReductionCurve(beta=0.5 * (lo + hi))


def budget_sweep(tree: FaultTree, budgets, allocator: str,
                 curve: ReductionCurve, step: float = DEFAULT_STEP) -> list[SweepPoint]:
    """Evaluate vulnerability and risk at each budget under one allocator."""
    budgets = list(budgets)
    if any(b < 0.0 for b in budgets):
        raise GridlineError("budgets must be non-negative")
    if budgets != sorted(budgets):
        raise GridlineError("budgets must be sorted ascending")
    points = []
    for budget in budgets:
        allocation = allocate(tree, budget, allocator, curve, step)
        points.append(SweepPoint(
            budget=budget,
            vulnerability=top_vulnerability(tree, allocation, curve),
            risk=tree_risk(tree, allocation, curve),
            allocation=allocation,
        ))
    return points


# ---------------------------------------------------------------------------
# Document format

_LEAF_FIELDS = ("label", "asset", "threat", "v0", "consequence", "elimination_cost")


def parse_tree_dict(doc: dict) -> tuple[FaultTree, ReductionCurve | None]:
    if not isinstance(doc, dict):
        raise FormatError("expected an object", "document")
    for field in doc:
        if field not in ("leaves", "beta"):
            raise FormatError(f"unknown field {field!r}", "document")
    if "leaves" not in doc or not isinstance(doc["leaves"], list):
        raise FormatError("expected a list of leaves", "document.leaves")

    leaves = []
    for i, obj in enumerate(doc["leaves"]):
        where = f"leaves[{i}]"
        if not isinstance(obj, dict):
            raise FormatError("expected an object", where)
        for field in _LEAF_FIELDS:
            if field not in obj:
                raise FormatError(f"missing field {field!r}", where)
        for field in obj:
            if field not in _LEAF_FIELDS:
                raise FormatError(f"unknown field {field!r}", where)
        if not isinstance(obj["label"], str) or not isinstance(obj["asset"], str):
            raise FormatError("label and asset must be strings", where)
        for field in ("threat", "v0", "consequence", "elimination_cost"):
            value = obj[field]
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise FormatError(f"expected a number for {field!r}", f"{where}.{field}")
        leaves.append(ThreatLeaf(
            label=obj["label"],
            asset=obj["asset"],
            threat=float(obj["threat"]),
            base_vulnerability=float(obj["v0"]),
            consequence=float(obj["consequence"]),
            elimination_cost=float(obj["elimination_cost"]),
        ))

    tree = FaultTree(leaves=tuple(leaves))
    violations = validate_tree(tree)
    if violations:
        raise ValidationError(violations)

    curve = None
    if "beta" in doc:
        beta = doc["beta"]
        if isinstance(beta, bool) or not isinstance(beta, (int, float)) or beta <= 0.0:
            raise FormatError("beta must be a positive number", "document.beta")
        curve = ReductionCurve(beta=float(beta))
    return tree, curve


def parse_tree(text: str) -> tuple[FaultTree, ReductionCurve | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}", "document") from exc
    return parse_tree_dict(doc)


def serialize_tree_dict(tree: FaultTree, curve: ReductionCurve | None = None) -> dict:
    doc: dict = {
        "leaves": [
            {
                "label": leaf.label,
                "asset": leaf.asset,
                "threat": leaf.threat,
                "v0": leaf.base_vulnerability,
                "consequence": leaf.consequence,
                "elimination_cost": leaf.elimination_cost,
            }
            for leaf in tree.leaves
        ],
    }
    if curve is not None:
        doc["beta"] = curve.beta
    return doc


def load_bundled_tree(name: str = "copley-kenmore") -> tuple[FaultTree, ReductionCurve]:
    """Load a fault tree that ships with the package, with its calibrated
    reduction curve."""
    if name not in BUNDLED_TREES:
        raise UnknownDatasetError(
            f"unknown fault tree {name!r}; bundled trees: {', '.join(BUNDLED_TREES)}")
    filename = name.replace("-", "_") + "_tree.json"
    text = resources.files("gridline.data").joinpath(filename).read_text("utf-8")
    tree, curve = parse_tree(text)
    if curve is None:
        raise FormatError("bundled tree is missing its beta", "document.beta")
    return tree, curve
