"""Small network builders and the path-enumeration betweenness oracle.

The oracle deliberately uses a different algorithm (explicit BFS distance
labeling plus DFS path walking) from the production Brandes kernel, so the
two can check each other.
"""

from collections import deque

from gridline.network import RailLink, StationNode, ThreatProfile, TransitNetwork


def profile(threat=1.0, vulnerability=0.5, consequence=4.0,
            prevention_cost=1.2, response_cost=1.8):
    return ThreatProfile(threat=threat, vulnerability=vulnerability,
                         consequence=consequence,
                         prevention_cost=prevention_cost,
                         response_cost=response_cost)


def make_network(n, edges, consequences=None):
    """n stations named s00..s<n-1>, linked per the (i, j) index pairs."""
    names = [f"s{i:02d}" for i in range(n)]
    cons = consequences if consequences is not None else [4.0] * n
    nodes = tuple(StationNode(id=names[i], name=names[i].upper(),
                              placement="surface",
                              profile=profile(consequence=cons[i]))
                  for i in range(n))
    links = tuple(RailLink(a=names[i], b=names[j], profile=profile())
                  for i, j in edges)
    return TransitNetwork(nodes=nodes, links=links)


def random_connected_network(rng, n):
    """Random spanning tree plus a few chords; always connected."""
    edges = set()
    for i in range(1, n):
        edges.add((rng.randrange(i), i))
    extra = rng.randrange(n)
    for _ in range(extra):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i != j:
            edges.add((min(i, j), max(i, j)))
    return make_network(n, sorted(edges))


def _all_shortest_paths(adj, dist, target, v, acc, found):
    if v == target:
        found.append(list(acc))
        return
    for w in adj[v]:
        if dist.get(w) == dist[v] + 1 and dist[w] <= dist[target]:
            acc.append(w)
            _all_shortest_paths(adj, dist, target, w, acc, found)
            acc.pop()


def brute_force_betweenness(network):
    """Betweenness by enumerating every shortest path, pair by pair.

    Returns raw pair-fraction sums (no normalization).
    """
    ids = list(network.node_ids())
    adj = network.neighbors()
    score = {i: 0.0 for i in ids}
    for si, s in enumerate(ids):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        for t in ids[si + 1:]:
            if t not in dist:
                continue
            found = []
            _all_shortest_paths(adj, dist, t, s, [s], found)
            for path in found:
                for mid in path[1:-1]:
                    score[mid] += 1.0 / len(found)
    return score
