"""Investment analysis: ROI, the prevention/response budget split, funding
tiers, and the diminishing-returns ROI curve over fault-tree budgets.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import faulttree
from .errors import GridlineError
from .network import TransitNetwork

# Per-node (prevention, response) costs in million USD by funding tier.
# Response is 1.5x prevention in every tier.
TIER_COSTS = {
    "high": (3.0, 4.5),
    "medium": (2.16, 3.24),
    "low": (1.2, 1.8),
}

# Network risk left after the reference cost-allocation optimization run;
# shipped as a fixture because that optimizer is external to this library.
OPTIMIZED_RISK_FINAL = 128.08
OPTIMIZED_EXPENDITURE = 10.0


@dataclass(frozen=True)
class BudgetPlan:
    total: float
    prevention: float
    response: float
    tier_assignment: dict[str, str]
    per_node_costs: dict[str, tuple[float, float]]


@dataclass(frozen=True)
class RoiPoint:
    expenditure: float
    risk_final: float
    roi: float


def roi(risk_initial: float, risk_final: float, expenditure: float) -> float:
    """(initial risk - final risk) / expenditure; dimensionless per unit spent."""
    if expenditure <= 0.0:
        raise GridlineError("expenditure must be > 0")
    return (risk_initial - risk_final) / expenditure


def split_budget(total: float, response_share: float) -> tuple[float, float]:
    """Split a total budget into (prevention, response)."""
    if not 0.0 <= response_share <= 1.0:
        raise GridlineError("response share must lie in [0,1]")
    response = total * response_share
    return total - response, response


def tier_costs(tier: str) -> tuple[float, float]:
    """Per-node (prevention, response) cost for a funding tier."""
    if tier not in TIER_COSTS:
        raise GridlineError(f"unknown tier {tier!r}; tiers: {', '.join(TIER_COSTS)}")
    return TIER_COSTS[tier]


def assign_tiers(network: TransitNetwork) -> dict[str, str]:
    """Classify each station into a funding tier by matching its stored
    prevention/response cost pair against the tier table."""
    assignment = {}
    for node in network.nodes:
        pair = (node.profile.prevention_cost, node.profile.response_cost)
        for tier, costs in TIER_COSTS.items():
            if pair == costs:
                assignment[node.id] = tier
                break
        else:
            raise GridlineError(
                f"node {node.id!r} costs {pair} match no funding tier")
    return assignment


def budget_plan(network: TransitNetwork, total: float,
                response_share: float) -> BudgetPlan:
    prevention, response = split_budget(total, response_share)
    assignment = assign_tiers(network)
    return BudgetPlan(
        total=total,
        prevention=prevention,
        response=response,
        tier_assignment=assignment,
        per_node_costs={node_id: TIER_COSTS[tier]
                        for node_id, tier in assignment.items()},
    )


def roi_curve(tree: faulttree.FaultTree, budgets, allocator: str,
              curve: faulttree.ReductionCurve,
              risk_initial: float | None = None,
              step: float = faulttree.DEFAULT_STEP) -> list[RoiPoint]:
    """ROI at each budget, against the tree's zero-spend risk by default."""
    budgets = list(budgets)
    if not budgets:
        raise GridlineError("budget list must not be empty")
    if any(b <= 0.0 for b in budgets):
        raise GridlineError("budgets must be strictly positive")
    if any(b2 <= b1 for b1, b2 in zip(budgets, budgets[1:])):
        raise GridlineError("budgets must be strictly ascending")
    if risk_initial is None:
        risk_initial = faulttree.tree_risk(
            tree, faulttree.zero_allocation(tree), curve)
    points = []
    for budget in budgets:
        allocation = faulttree.allocate(tree, budget, allocator, curve, step)
        risk_final = faulttree.tree_risk(tree, allocation, curve)
        points.append(RoiPoint(
            expenditure=budget,
            risk_final=risk_final,
            roi=roi(risk_initial, risk_final, budget),
        ))
    return points
