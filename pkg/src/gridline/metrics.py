"""Graph metrics: degree statistics, spectral radius, centralities, and the
robustness / blocking-node figures derived from them.

All operations are pure functions of the network; heavy loops (betweenness)
go through the kernel backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ConvergenceError, GridlineError
from .network import TransitNetwork


@dataclass(frozen=True)
class DegreeSummary:
    per_node: dict[str, int]
    total: int
    network: int
    mean_paper: float
    mean_standard: float


@dataclass(frozen=True)
class CentralityTable:
    kind: str
    values: dict[str, float]


@dataclass(frozen=True)
class MetricsSummary:
    per_node_degree: dict[str, int]
    total_degree: int
    network_degree: int
    mean_degree_paper: float
    mean_degree_standard: float
    spectral_radius: float
    link_robustness: float
    node_robustness: float
    blocking_fraction: float
    removable_links: int
    removable_nodes: int
    irremovable_blocking_nodes: int
    blocking_display: tuple[str, ...]


def adjacency_matrix(network: TransitNetwork) -> np.ndarray:
    """Symmetric 0/1 matrix in node order, zero diagonal."""
    order = {n.id: i for i, n in enumerate(network.nodes)}
    n = len(order)
    matrix = np.zeros((n, n), dtype=np.float64)
    for link in network.links:
        i, j = order[link.a], order[link.b]
        matrix[i, j] = 1.0
        matrix[j, i] = 1.0
    return matrix


def adjacency_csr(network: TransitNetwork) -> tuple[np.ndarray, np.ndarray]:
    """Adjacency in CSR form (indptr, indices), neighbors in ascending
    node-index order; the layout the kernel backends expect."""
    order = {n.id: i for i, n in enumerate(network.nodes)}
    n = len(order)
    adj: list[list[int]] = [[] for _ in range(n)]
    for link in network.links:
        i, j = order[link.a], order[link.b]
        adj[i].append(j)
        adj[j].append(i)
    indptr = np.zeros(n + 1, dtype=np.int32)
    for i, row in enumerate(adj):
        row.sort()
        indptr[i + 1] = indptr[i] + len(row)
    indices = np.fromiter((w for row in adj for w in row), dtype=np.int32,
                          count=int(indptr[n]))
    return indptr, indices


def connected_components(network: TransitNetwork) -> list[list[str]]:
    """Connected components as lists of node ids, in node order."""
    ids = network.node_ids()
    neighbors = network.neighbors()
    seen: set[str] = set()
    components = []
    for start in ids:
        if start in seen:
            continue
        component = [start]
        seen.add(start)
        head = 0
        while head < len(component):
            for other in neighbors[component[head]]:
                if other not in seen:
                    seen.add(other)
                    component.append(other)
            head += 1
        components.append(component)
    return components


def is_connected(network: TransitNetwork) -> bool:
    return len(connected_components(network)) <= 1


def degree_summary(network: TransitNetwork) -> DegreeSummary:
    """Per-node degrees plus the totals and the two mean-degree readings.

    mean_paper divides total degree by link count (identically 2 on any
    graph with links); mean_standard divides by node count.
    """
    per_node = network.degrees()
    total = sum(per_node.values())
    links = len(network.links)
    nodes = len(network.nodes)
    return DegreeSummary(
        per_node=per_node,
        total=total,
        network=max(per_node.values(), default=0),
        mean_paper=total / links if links else 0.0,
        mean_standard=total / nodes if nodes else 0.0,
    )


def _shifted_power_iteration(matrix: np.ndarray, tolerance: float,
                             max_iterations: int) -> tuple[float, np.ndarray]:
    """Power iteration on (A + I) with an all-ones start.

    The shift keeps bipartite spectra (paired eigenvalues ±rho) from
    trapping the Rayleigh quotient between the two extremes; subtracting
    the shift afterwards recovers rho itself.  Returns (rho, unit vector).
    """
    n = matrix.shape[0]
    x = np.full(n, 1.0 / math.sqrt(n))
    rayleigh = None
    for _ in range(max_iterations):
        y = matrix @ x + x
        value = float(x @ y)
        norm = float(np.linalg.norm(y))
        x_next = y / norm
        drift = float(np.max(np.abs(x_next - x)))
        x = x_next
        if rayleigh is not None and abs(value - rayleigh) < tolerance \
                and drift < tolerance:
            return value - 1.0, x
        rayleigh = value
    raise ConvergenceError(
        f"power iteration did not converge in {max_iterations} iterations")


def spectral_radius(matrix: np.ndarray, tolerance: float = 1e-9,
                    max_iterations: int = 10000) -> float:
    """Largest eigenvalue magnitude of a symmetric nonnegative matrix."""
    if matrix.size == 0:
        raise GridlineError("spectral radius of an empty matrix is undefined")
    value, _ = _shifted_power_iteration(matrix, tolerance, max_iterations)
    return value


def degree_centrality(network: TransitNetwork) -> CentralityTable:
    n = len(network.nodes)
    if n < 2:
        raise GridlineError("degree centrality needs at least 2 nodes")
    degrees = network.degrees()
    return CentralityTable(
        kind="degree",
        values={node_id: degree / (n - 1) for node_id, degree in degrees.items()},
    )


def betweenness_centrality(network: TransitNetwork) -> CentralityTable:
    """Fraction of shortest paths through each node, normalized by the
    (N-1)(N-2)/2 interior pair count."""
    n = len(network.nodes)
    if n < 3:
        raise GridlineError("betweenness centrality needs at least 3 nodes")
    indptr, indices = adjacency_csr(network)
    raw = _kernels.betweenness(indptr, indices)
    scale = (n - 1) * (n - 2) / 2.0
    ids = network.node_ids()
    return CentralityTable(
        kind="betweenness",
        values={ids[i]: raw[i] / scale for i in range(n)},
    )


def eigenvector_centrality(network: TransitNetwork,
                           tolerance: float = 1e-9) -> CentralityTable:
    """Principal-eigenvector entries scaled to unit maximum."""
    if not network.nodes:
        raise GridlineError("eigenvector centrality of an empty network is undefined")
    if not is_connected(network):
        raise GridlineError(
            "eigenvector centrality requires a connected network")
    matrix = adjacency_matrix(network)
    _, vector = _shifted_power_iteration(matrix, tolerance, 10000)
    vector = np.abs(vector)
    peak = float(vector.max())
    if peak > 0.0:
        vector = vector / peak
    ids = network.node_ids()
    return CentralityTable(
        kind="eigenvector",
        values={ids[i]: float(vector[i]) for i in range(len(ids))},
    )


def _round_half_down(x: float) -> int:
    return math.ceil(x - 0.5)


def _articulation_rank(network: TransitNetwork) -> list[str]:
    """Nodes whose removal splits the network, most-splitting first,
    ties broken by id."""
    base = len(connected_components(network))
    scored = []
    for node in network.nodes:
        parts = len(connected_components(network.without_node(node.id)))
        if parts > base:
            scored.append((-parts, node.id))
    scored.sort()
    return [node_id for _, node_id in scored]


def robustness_summary(network: TransitNetwork) -> MetricsSummary:
    """Degree statistics plus the spectral-radius-derived robustness and
    blocking figures.

    Removable counts round half-down.  The display list pairs the termini
    with the strongest articulation points, filling up to the irremovable
    blocking count.
    """
    if not network.nodes:
        raise GridlineError("robustness summary of an empty network is undefined")
    degrees = degree_summary(network)
    rho = spectral_radius(adjacency_matrix(network))
    if rho <= 0.0:
        raise GridlineError("robustness figures need a positive spectral radius")

    link_robustness = 0.0
    if degrees.mean_paper > 0.0:
        link_robustness = min(max(1.0 - 2.0 / degrees.mean_paper, 0.0), 1.0)
    node_robustness = 1.0 - 1.0 / rho
    blocking_fraction = 1.0 / rho

    node_count = len(network.nodes)
    link_count = len(network.links)
    removable_links = _round_half_down(link_count * link_robustness)
    removable_nodes = _round_half_down(node_count * node_robustness)
    irremovable = node_count - removable_nodes

    termini = sorted(node_id for node_id, degree in degrees.per_node.items()
                     if degree == 1)
    display = list(termini)
    for node_id in _articulation_rank(network):
        if len(display) >= irremovable:
            break
        if node_id not in display:
            display.append(node_id)

    return MetricsSummary(
        per_node_degree=degrees.per_node,
        total_degree=degrees.total,
        network_degree=degrees.network,
        mean_degree_paper=degrees.mean_paper,
        mean_degree_standard=degrees.mean_standard,
        spectral_radius=rho,
        link_robustness=link_robustness,
        node_robustness=node_robustness,
        blocking_fraction=blocking_fraction,
        removable_links=removable_links,
        removable_nodes=removable_nodes,
        irremovable_blocking_nodes=irremovable,
        blocking_display=tuple(display),
    )
