"""Attack scenarios: ordered disruption steps applied to a network, preset
scenarios around the Kenmore hub, metric-driven targeted strikes, and the
structural/risk impact report comparing before and after.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import metrics, risk
from .errors import FormatError, GridlineError, ScenarioError, UnknownPresetError
from .network import TransitNetwork

KINDS = ("random", "targeted", "combined")


@dataclass(frozen=True)
class RemoveNode:
    id: str


@dataclass(frozen=True)
class RemoveLink:
    a: str
    b: str


@dataclass(frozen=True)
class DegradeNode:
    id: str
    vulnerability: float


@dataclass(frozen=True)
class RandomNodes:
    count: int


Step = RemoveNode | RemoveLink | DegradeNode | RandomNodes


@dataclass(frozen=True)
class AttackScenario:
    name: str
    kind: str
    steps: tuple[Step, ...]


@dataclass(frozen=True)
class ImpactReport:
    components_before: int
    components_after: int
    largest_component_after: int
    disconnected_terminus_pairs: int
    risk_before: float
    risk_after: float
    spectral_radius_before: float
    spectral_radius_after: float


PRESETS = {
    "kenmore-random": AttackScenario(
        name="kenmore-random", kind="random", steps=(RandomNodes(count=1),)),
    "kenmore-targeted": AttackScenario(
        name="kenmore-targeted", kind="targeted",
        steps=(RemoveNode(id="kenmore"),)),
    "kenmore-combined": AttackScenario(
        name="kenmore-combined", kind="combined",
        steps=(
            RemoveNode(id="kenmore"),
            DegradeNode(id="hynes", vulnerability=1.0),
            DegradeNode(id="brookline-village", vulnerability=1.0),
            DegradeNode(id="boston-college", vulnerability=1.0),
            DegradeNode(id="cleveland-circle", vulnerability=1.0),
        )),
}


def preset(name: str) -> AttackScenario:
    if name not in PRESETS:
        raise UnknownPresetError(
            f"unknown preset {name!r}; presets: {', '.join(sorted(PRESETS))}")
    return PRESETS[name]


def requires_seed(scenario: AttackScenario) -> bool:
    return any(isinstance(step, RandomNodes) for step in scenario.steps)


def apply_scenario(network: TransitNetwork, scenario: AttackScenario,
                   seed: int | None = None) -> TransitNetwork:
    """Apply the scenario's steps in order; deterministic for a fixed seed.

    Random selections draw without replacement from the nodes still
    present when the step runs.
    """
    if seed is not None and seed < 0:
        raise ScenarioError("seed must be a non-negative integer")
    rng = None
    current = network
    for step in scenario.steps:
        if isinstance(step, RemoveNode):
            try:
                current = current.without_node(step.id)
            except KeyError:
                raise ScenarioError(
                    f"cannot remove node {step.id!r}: absent or already removed")
        elif isinstance(step, RemoveLink):
            try:
                current = current.without_link(step.a, step.b)
            except KeyError:
                raise ScenarioError(
                    f"cannot remove link {step.a!r}-{step.b!r}: absent or already removed")
        elif isinstance(step, DegradeNode):
            if not 0.0 <= step.vulnerability <= 1.0:
                raise ScenarioError("degraded vulnerability out of range [0,1]")
            try:
                current = current.with_vulnerability(step.id, step.vulnerability)
            except KeyError:
                raise ScenarioError(
                    f"cannot degrade node {step.id!r}: absent or already removed")
        elif isinstance(step, RandomNodes):
            if step.count > len(current.nodes):
                raise ScenarioError(
                    f"cannot remove {step.count} nodes from a "
                    f"{len(current.nodes)}-node network")
            if rng is None:
                if seed is None:
                    raise ScenarioError("scenario has random steps; a seed is required")
                rng = np.random.default_rng(seed)
            ids = current.node_ids()
            picks = rng.choice(len(ids), size=step.count, replace=False)
            for node_id in [ids[int(i)] for i in picks]:
                current = current.without_node(node_id)
        else:
            raise ScenarioError(f"unknown step type {type(step).__name__}")
    return current


def targeted_attack(network: TransitNetwork, k: int, metric: str) -> AttackScenario:
    """Scenario removing the top-k nodes by a metric computed once on the
    intact network (static attack), ties broken by id."""
    if metric not in ("degree", "betweenness", "risk"):
        raise GridlineError(f"invalid targeting metric {metric!r}")
    if k > len(network.nodes):
        raise ScenarioError(f"k={k} exceeds the node count {len(network.nodes)}")
    ranked = risk.rank_assets(network, metric)
    return AttackScenario(
        name=f"targeted-{metric}-{k}",
        kind="targeted",
        steps=tuple(RemoveNode(id=node_id) for node_id, _ in ranked[:k]),
    )


def _component_index(network: TransitNetwork) -> dict[str, int]:
    index = {}
    for i, component in enumerate(metrics.connected_components(network)):
        for node_id in component:
            index[node_id] = i
    return index


def _spectral_or_zero(network: TransitNetwork) -> float:
    if not network.links:
        return 0.0
    return metrics.spectral_radius(metrics.adjacency_matrix(network))


def impact_report(before: TransitNetwork, after: TransitNetwork) -> ImpactReport:
    """Structural and risk deltas between a network and its degraded copy.

    Terminus pairs count the degree-1 stations of the original network
    whose connection was severed: connected before, but missing or
    separated after.
    """
    before_components = metrics.connected_components(before)
    after_components = metrics.connected_components(after)
    before_index = _component_index(before)
    after_index = _component_index(after)

    termini = sorted(node_id for node_id, degree in before.degrees().items()
                     if degree == 1)
    severed = 0
    for i, u in enumerate(termini):
        for v in termini[i + 1:]:
            if before_index[u] != before_index[v]:
                continue
            if u not in after_index or v not in after_index \
                    or after_index[u] != after_index[v]:
                severed += 1

    return ImpactReport(
        components_before=len(before_components),
        components_after=len(after_components),
        largest_component_after=max((len(c) for c in after_components), default=0),
        disconnected_terminus_pairs=severed,
        risk_before=risk.network_risk(before).total_risk,
        risk_after=risk.network_risk(after).total_risk,
        spectral_radius_before=_spectral_or_zero(before),
        spectral_radius_after=_spectral_or_zero(after),
    )


# ---------------------------------------------------------------------------
# Document format

_STEP_FIELDS = {
    "remove_node": ("op", "id"),
    "remove_link": ("op", "a", "b"),
    "degrade_node": ("op", "id", "vulnerability"),
    "random_nodes": ("op", "count"),
}


def _parse_step(obj: dict, where: str) -> Step:
    if not isinstance(obj, dict):
        raise FormatError("expected an object", where)
    op = obj.get("op")
    if op not in _STEP_FIELDS:
        raise FormatError(f"unknown op {op!r}", f"{where}.op")
    allowed = _STEP_FIELDS[op]
    for field in allowed:
        if field not in obj:
            raise FormatError(f"missing field {field!r}", where)
    for field in obj:
        if field not in allowed:
            raise FormatError(f"unknown field {field!r}", where)
    if op == "remove_node":
        if not isinstance(obj["id"], str):
            raise FormatError("expected a string for 'id'", f"{where}.id")
        return RemoveNode(id=obj["id"])
    if op == "remove_link":
        if not isinstance(obj["a"], str) or not isinstance(obj["b"], str):
            raise FormatError("expected strings for 'a' and 'b'", where)
        return RemoveLink(a=obj["a"], b=obj["b"])
    if op == "degrade_node":
        value = obj["vulnerability"]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise FormatError("expected a number for 'vulnerability'",
                              f"{where}.vulnerability")
        if not 0.0 <= value <= 1.0:
            raise FormatError("vulnerability out of range [0,1]",
                              f"{where}.vulnerability")
        if not isinstance(obj["id"], str):
            raise FormatError("expected a string for 'id'", f"{where}.id")
        return DegradeNode(id=obj["id"], vulnerability=float(value))
    count = obj["count"]
    if isinstance(count, bool) or not isinstance(count, int) or count < 0:
        raise FormatError("expected a non-negative integer for 'count'",
                          f"{where}.count")
    return RandomNodes(count=count)


def parse_scenario_dict(doc: dict) -> AttackScenario:
    if not isinstance(doc, dict):
        raise FormatError("expected an object", "scenario")
    for field in ("name", "kind", "steps"):
        if field not in doc:
            raise FormatError(f"missing field {field!r}", "scenario")
    for field in doc:
        if field not in ("name", "kind", "steps"):
            raise FormatError(f"unknown field {field!r}", "scenario")
    if not isinstance(doc["name"], str):
        raise FormatError("expected a string for 'name'", "scenario.name")
    if doc["kind"] not in KINDS:
        raise FormatError(f"kind must be one of {KINDS}", "scenario.kind")
    if not isinstance(doc["steps"], list):
        raise FormatError("expected a list", "scenario.steps")
    steps = tuple(_parse_step(obj, f"scenario.steps[{i}]")
                  for i, obj in enumerate(doc["steps"]))
    return AttackScenario(name=doc["name"], kind=doc["kind"], steps=steps)


def parse_scenario(text: str) -> AttackScenario:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}", "scenario") from exc
    return parse_scenario_dict(doc)


def serialize_scenario_dict(scenario: AttackScenario) -> dict:
    steps = []
    for step in scenario.steps:
        if isinstance(step, RemoveNode):
            steps.append({"op": "remove_node", "id": step.id})
        elif isinstance(step, RemoveLink):
            steps.append({"op": "remove_link", "a": step.a, "b": step.b})
        elif isinstance(step, DegradeNode):
            steps.append({"op": "degrade_node", "id": step.id,
                          "vulnerability": step.vulnerability})
        else:
            steps.append({"op": "random_nodes", "count": step.count})
    return {"name": scenario.name, "kind": scenario.kind, "steps": steps}
