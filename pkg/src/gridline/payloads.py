"""JSON payload builders shared by the CLI and the HTTP service.

Both interfaces must emit byte-identical JSON for the same operation and
inputs, so every payload is assembled here and serialized through
dump_bytes; neither interface builds result JSON on its own.
"""

from __future__ import annotations

import hashlib
import json

from . import attacks, faulttree, investment, metrics, resilience, risk
from .errors import ValidationError
from .network import TransitNetwork, Violation, serialize_dict, validate


def dump_bytes(payload) -> bytes:
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def snapshot_version(network: TransitNetwork) -> str:
    """Content hash of the network; identical networks share a version."""
    canonical = json.dumps(serialize_dict(network), sort_keys=True,
                           separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:12]


def _require_usable(network: TransitNetwork) -> None:
    violations = validate(network)
    if violations:
        raise ValidationError(violations)
    if not network.nodes:
        raise ValidationError(
            [Violation("network", "non-empty", "network has no nodes")])
    if not network.links:
        raise ValidationError(
            [Violation("network", "has-links", "network has no links")])


def network_payload(network: TransitNetwork) -> dict:
    return serialize_dict(network)


def metrics_payload(network: TransitNetwork) -> dict:
    """Every graph metric keyed by name; centralities whose preconditions
    fail (too few nodes, disconnected) are omitted rather than erroring."""
    _require_usable(network)
    summary = metrics.robustness_summary(network)
    payload: dict = {
        "node_count": len(network.nodes),
        "link_count": len(network.links),
        "per_node_degree": summary.per_node_degree,
        "total_degree": summary.total_degree,
        "network_degree": summary.network_degree,
        "mean_degree_paper": summary.mean_degree_paper,
        "mean_degree_standard": summary.mean_degree_standard,
        "spectral_radius": summary.spectral_radius,
        "link_robustness": summary.link_robustness,
        "node_robustness": summary.node_robustness,
        "blocking_fraction": summary.blocking_fraction,
        "removable_links": summary.removable_links,
        "removable_nodes": summary.removable_nodes,
        "irremovable_blocking_nodes": summary.irremovable_blocking_nodes,
        "blocking_display_nodes": list(summary.blocking_display),
    }
    if len(network.nodes) >= 2:
        payload["degree_centrality"] = metrics.degree_centrality(network).values
    if len(network.nodes) >= 3:
        payload["betweenness_centrality"] = metrics.betweenness_centrality(network).values
    if metrics.is_connected(network):
        payload["eigenvector_centrality"] = metrics.eigenvector_centrality(network).values
    return payload


def risk_payload(network: TransitNetwork) -> dict:
    report = risk.network_risk(network)
    return {
        "per_asset_risk": report.per_asset_risk,
        "total_risk": report.total_risk,
        "ranking": [[asset, value] for asset, value in report.ranking],
    }


def resilience_payload(network: TransitNetwork,
                       estimate: dict | None = None) -> dict:
    """Resiliency-line fit for the network's spectral radius against the
    bundled calibration points; optionally carries a Monte Carlo estimate."""
    _require_usable(network)
    fit = resilience.default_fit(network)
    payload: dict = {
        "b": fit.b,
        "k": fit.k,
        "rho": fit.rho,
        "gamma_critical": fit.gamma_critical,
    }
    if estimate is not None:
        payload["estimated_q"] = estimate
    return payload


def estimate_payload(network: TransitNetwork, gamma: float, trials: int,
                     seed: int) -> dict:
    q = resilience.estimate_q(network, gamma, trials, seed)
    return {"gamma": gamma, "trials": trials, "seed": seed, "q": q}


def _allocation_entry(tree: faulttree.FaultTree,
                      allocation: faulttree.Allocation) -> dict:
    return {leaf.label: allocation.spend.get(leaf.label, 0.0)
            for leaf in tree.leaves}


def faulttree_payload(tree: faulttree.FaultTree, curve: faulttree.ReductionCurve,
                      budget: float, allocator: str,
                      step: float = faulttree.DEFAULT_STEP) -> dict:
    allocation = faulttree.allocate(tree, budget, allocator, curve, step)
    return {
        "budget": budget,
        "allocator": allocator,
        "beta": curve.beta,
        "vulnerability": faulttree.top_vulnerability(tree, allocation, curve),
        "risk": faulttree.tree_risk(tree, allocation, curve),
        "allocation": _allocation_entry(tree, allocation),
    }


def sweep_payload(tree: faulttree.FaultTree, curve: faulttree.ReductionCurve,
                  budgets, allocator: str,
                  step: float = faulttree.DEFAULT_STEP) -> list:
    points = faulttree.budget_sweep(tree, budgets, allocator, curve, step)
    return [
        {
            "budget": point.budget,
            "vulnerability": point.vulnerability,
            "risk": point.risk,
            "allocation": _allocation_entry(tree, point.allocation),
        }
        for point in points
    ]


def attack_payload(before: TransitNetwork, after: TransitNetwork) -> dict:
    report = attacks.impact_report(before, after)
    return {
        "components_before": report.components_before,
        "components_after": report.components_after,
        "largest_component_after": report.largest_component_after,
        "disconnected_terminus_pairs": report.disconnected_terminus_pairs,
        "risk_before": report.risk_before,
        "risk_after": report.risk_after,
        "spectral_radius_before": report.spectral_radius_before,
        "spectral_radius_after": report.spectral_radius_after,
    }


def roi_payload(tree: faulttree.FaultTree, curve: faulttree.ReductionCurve,
                budgets, allocator: str,
                step: float = faulttree.DEFAULT_STEP) -> list:
    points = investment.roi_curve(tree, budgets, allocator, curve, step=step)
    return [
        {
            "expenditure": point.expenditure,
            "risk_final": point.risk_final,
            "roi": point.roi,
        }
        for point in points
    ]
