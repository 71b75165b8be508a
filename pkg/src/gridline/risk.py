"""MBRA-style risk scoring: expected loss T x V x C per asset, summed over
nodes and links for the network figure, with deterministic rankings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GridlineError
from .network import RailLink, ThreatProfile, TransitNetwork
from . import metrics


@dataclass(frozen=True)
class RiskReport:
    per_asset_risk: dict[str, float]
    total_risk: float
    ranking: tuple[tuple[str, float], ...]


def link_key(link: RailLink) -> str:
    """JSON key for a link: endpoints in lexical order, joined by an em dash."""
    a, b = link.key
    return f"{a}—{b}"


def asset_risk(profile: ThreatProfile) -> float:
    return profile.threat * profile.vulnerability * profile.consequence


def _ranked(per_asset: dict[str, float]) -> tuple[tuple[str, float], ...]:
    return tuple(sorted(per_asset.items(), key=lambda kv: (-kv[1], kv[0])))


def network_risk(network: TransitNetwork) -> RiskReport:
    """Per-asset risks for every node and link; total is their plain sum."""
    per_asset: dict[str, float] = {}
    for node in network.nodes:
        per_asset[node.id] = asset_risk(node.profile)
    for link in network.links:
        per_asset[link_key(link)] = asset_risk(link.profile)
    return RiskReport(
        per_asset_risk=per_asset,
        total_risk=sum(per_asset.values()),
        ranking=_ranked(per_asset),
    )


def rank_assets(network: TransitNetwork, key: str) -> list[tuple[str, float]]:
    """Stations ordered by the chosen key (risk, degree, or betweenness),
    non-increasing, ties broken by id.  Links carry no degree or
    betweenness, so ranking covers nodes only.
    """
    if key == "risk":
        values = {n.id: asset_risk(n.profile) for n in network.nodes}
    elif key == "degree":
        values = {k: float(v) for k, v in network.degrees().items()}
    elif key == "betweenness":
        values = metrics.betweenness_centrality(network).values
    else:
        raise GridlineError(f"unknown ranking key {key!r}")
    return sorted(values.items(), key=lambda kv: (-kv[1], kv[0]))
