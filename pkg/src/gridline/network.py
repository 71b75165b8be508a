"""Transit-network domain model, validation, and the JSON document format.

A network is an undirected simple graph of stations and rail links.  Every
asset (node or link) carries a threat profile: threat and vulnerability as
fractions in [0, 1], and consequence / prevention / response costs in
million USD.  Values are immutable after construction; mutation helpers
return new objects.

Document format (UTF-8 JSON, unknown fields rejected)::

    {"nodes": [{"id", "name", "placement", "threat", "vulnerability",
                "consequence", "prevention_cost", "response_cost"}, ...],
     "links": [{"a", "b", "threat", "vulnerability",
                "consequence", "prevention_cost", "response_cost"}, ...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from importlib import resources

from .errors import FormatError, UnknownDatasetError, ValidationError

PLACEMENTS = ("underground", "surface", "on-road", "elevated")

BUNDLED_NETWORKS = ("greenline17",)


@dataclass(frozen=True)
class ThreatProfile:
    threat: float
    vulnerability: float
    consequence: float
    prevention_cost: float
    response_cost: float


@dataclass(frozen=True)
class StationNode:
    id: str
    name: str
    placement: str
    profile: ThreatProfile


@dataclass(frozen=True)
class RailLink:
    a: str
    b: str
    profile: ThreatProfile

    @property
    def key(self) -> tuple[str, str]:
        """Endpoints as a sorted pair; identifies the link regardless of
        the order the document listed them in."""
        return (self.a, self.b) if self.a <= self.b else (self.b, self.a)


@dataclass(frozen=True)
class TransitNetwork:
    nodes: tuple[StationNode, ...]
    links: tuple[RailLink, ...]

    def node_ids(self) -> tuple[str, ...]:
        return tuple(n.id for n in self.nodes)

    def node(self, node_id: str) -> StationNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)

    def degrees(self) -> dict[str, int]:
        deg = {n.id: 0 for n in self.nodes}
        for link in self.links:
            deg[link.a] += 1
            deg[link.b] += 1
        return deg

    def neighbors(self) -> dict[str, list[str]]:
        """Adjacency lists in node order, each list sorted by node index."""
        order = {n.id: i for i, n in enumerate(self.nodes)}
        adj: dict[str, list[str]] = {n.id: [] for n in self.nodes}
        for link in self.links:
            adj[link.a].append(link.b)
            adj[link.b].append(link.a)
        for lst in adj.values():
            lst.sort(key=order.__getitem__)
        return adj

    def without_node(self, node_id: str) -> "TransitNetwork":
        """Copy with the node and its incident links dropped."""
        if node_id not in {n.id for n in self.nodes}:
            raise KeyError(node_id)
        return TransitNetwork(
            nodes=tuple(n for n in self.nodes if n.id != node_id),
            links=tuple(l for l in self.links
                        if node_id not in (l.a, l.b)),
        )

    def without_link(self, a: str, b: str) -> "TransitNetwork":
        key = (a, b) if a <= b else (b, a)
        if key not in {l.key for l in self.links}:
            raise KeyError(f"{a}-{b}")
        return TransitNetwork(
            nodes=self.nodes,
            links=tuple(l for l in self.links if l.key != key),
        )

    def with_vulnerability(self, node_id: str, value: float) -> "TransitNetwork":
        node = self.node(node_id)
        updated = replace(node, profile=replace(node.profile, vulnerability=value))
        return TransitNetwork(
            nodes=tuple(updated if n.id == node_id else n for n in self.nodes),
            links=self.links,
        )


@dataclass(frozen=True)
class Violation:
    entity: str
    rule: str
    message: str

    def __str__(self) -> str:
        return f"{self.entity}: {self.message} [{self.rule}]"


def _profile_violations(entity: str, p: ThreatProfile) -> list[Violation]:
    out = []
    if not 0.0 <= p.threat <= 1.0:
        out.append(Violation(entity, "threat-range", "threat out of range [0,1]"))
    if not 0.0 <= p.vulnerability <= 1.0:
        out.append(Violation(entity, "vulnerability-range",
                             "vulnerability out of range [0,1]"))
    for field in ("consequence", "prevention_cost", "response_cost"):
        if getattr(p, field) < 0.0:
            out.append(Violation(entity, f"{field}-negative",
                                 f"{field} must be >= 0"))
    return out


def validate(network: TransitNetwork) -> list[Violation]:
    """Check every type invariant; an empty list means the network is valid.

    Violations are data, not failures: callers decide whether to raise.
    """
    out: list[Violation] = []
    seen_ids: set[str] = set()
    for node in network.nodes:
        if node.id in seen_ids:
            out.append(Violation(f"node {node.id}", "unique-id",
                                 f"duplicate node id {node.id!r}"))
        seen_ids.add(node.id)
        if node.placement not in PLACEMENTS:
            out.append(Violation(f"node {node.id}", "placement",
                                 f"placement {node.placement!r} not one of {PLACEMENTS}"))
        out.extend(_profile_violations(f"node {node.id}", node.profile))

    seen_links: set[tuple[str, str]] = set()
    for link in network.links:
        entity = f"link {link.a}-{link.b}"
        if link.a == link.b:
            out.append(Violation(entity, "self-loop", "endpoints must be distinct"))
        for end in (link.a, link.b):
            if end not in seen_ids:
                out.append(Violation(entity, "dangling-endpoint",
                                     f"dangling endpoint {end!r}"))
        if link.key in seen_links:
            out.append(Violation(entity, "duplicate-link",
                                 f"duplicate link between {link.key[0]!r} and {link.key[1]!r}"))
        seen_links.add(link.key)
        out.extend(_profile_violations(entity, link.profile))
    return out


# ---------------------------------------------------------------------------
# Document format

_PROFILE_FIELDS = ("threat", "vulnerability", "consequence",
                   "prevention_cost", "response_cost")
_NODE_FIELDS = ("id", "name", "placement") + _PROFILE_FIELDS
_LINK_FIELDS = ("a", "b") + _PROFILE_FIELDS


def _require_number(obj: dict, field: str, where: str) -> float:
    value = obj[field]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FormatError(f"expected a number for {field!r}", f"{where}.{field}")
    return float(value)


def _require_str(obj: dict, field: str, where: str) -> str:
    value = obj[field]
    if not isinstance(value, str):
        raise FormatError(f"expected a string for {field!r}", f"{where}.{field}")
    return value


def _check_fields(obj: dict, allowed: tuple[str, ...], where: str) -> None:
    if not isinstance(obj, dict):
        raise FormatError("expected an object", where)
    for field in allowed:
        if field not in obj:
            raise FormatError(f"missing field {field!r}", where)
    for field in obj:
        if field not in allowed:
            raise FormatError(f"unknown field {field!r}", where)


def _profile_from(obj: dict, where: str) -> ThreatProfile:
    return ThreatProfile(*(_require_number(obj, f, where) for f in _PROFILE_FIELDS))


def parse_dict(doc: dict) -> TransitNetwork:
    """Build a network from an already-decoded document."""
    _check_fields(doc, ("nodes", "links"), "document")
    if not isinstance(doc["nodes"], list):
        raise FormatError("expected a list", "document.nodes")
    if not isinstance(doc["links"], list):
        raise FormatError("expected a list", "document.links")

    nodes = []
    for i, obj in enumerate(doc["nodes"]):
        where = f"nodes[{i}]"
        _check_fields(obj, _NODE_FIELDS, where)
        nodes.append(StationNode(
            id=_require_str(obj, "id", where),
            name=_require_str(obj, "name", where),
            placement=_require_str(obj, "placement", where),
            profile=_profile_from(obj, where),
        ))
    links = []
    for i, obj in enumerate(doc["links"]):
        where = f"links[{i}]"
        _check_fields(obj, _LINK_FIELDS, where)
        links.append(RailLink(
            a=_require_str(obj, "a", where),
            b=_require_str(obj, "b", where),
            profile=_profile_from(obj, where),
        ))

    network = TransitNetwork(nodes=tuple(nodes), links=tuple(links))
    violations = validate(network)
    if violations:
        raise ValidationError(violations)
    return network


def parse(text: str) -> TransitNetwork:
    """Parse a network document; raises FormatError / ValidationError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}", "document") from exc
    return parse_dict(doc)


def serialize_dict(network: TransitNetwork) -> dict:
    """Document dict for a network; parse_dict inverts it field-for-field."""
    return {
        "nodes": [
            {
                "id": n.id,
                "name": n.name,
                "placement": n.placement,
                "threat": n.profile.threat,
                "vulnerability": n.profile.vulnerability,
                "consequence": n.profile.consequence,
                "prevention_cost": n.profile.prevention_cost,
                "response_cost": n.profile.response_cost,
            }
            for n in network.nodes
        ],
        "links": [
            {
                "a": l.a,
                "b": l.b,
                "threat": l.profile.threat,
                "vulnerability": l.profile.vulnerability,
                "consequence": l.profile.consequence,
                "prevention_cost": l.profile.prevention_cost,
                "response_cost": l.profile.response_cost,
            }
            for l in network.links
        ],
    }


def serialize(network: TransitNetwork) -> str:
    return json.dumps(serialize_dict(network), indent=2) + "\n"


def load_bundled(name: str) -> TransitNetwork:
    """Load a dataset that ships with the package ("greenline17")."""
    if name not in BUNDLED_NETWORKS:
        raise UnknownDatasetError(
            f"unknown dataset {name!r}; bundled datasets: {', '.join(BUNDLED_NETWORKS)}")
    text = resources.files("gridline.data").joinpath(f"{name}.json").read_text("utf-8")
    return parse(text)
