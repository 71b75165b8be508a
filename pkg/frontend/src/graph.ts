import type { NetworkDto } from "./types.js";

/** Adjacency over node ids, neighbor lists sorted for determinism. */
export function adjacency(network: NetworkDto): Map<string, string[]> {
  const result = new Map<string, string[]>();
  for (const node of network.nodes) result.set(node.id, []);
  for (const link of network.links) {
    result.get(link.a)?.push(link.b);
    result.get(link.b)?.push(link.a);
  }
  for (const neighbors of result.values()) neighbors.sort();
  return result;
}

/**
 * Connected components of the network with `removed` nodes deleted.
 *
 * Used only to group markers for cluster coloring; it is pure topology.
 * Every number shown next to the picture (component count, risk, radius)
 * still comes from the service's attack report. Components are returned
 * as sorted member lists, ordered by smallest member id.
 */
export function clusters(network: NetworkDto, removed: ReadonlySet<string>): string[][] {
  const adj = adjacency(network);
  const seen = new Set<string>(removed);
  const groups: string[][] = [];
  for (const node of network.nodes) {
    if (seen.has(node.id)) continue;
    const members: string[] = [];
    const queue: string[] = [node.id];
    seen.add(node.id);
    while (queue.length > 0) {
      const current = queue.shift() as string;
      members.push(current);
      for (const neighbor of adj.get(current) ?? []) {
        if (!seen.has(neighbor)) {
          seen.add(neighbor);
          queue.push(neighbor);
        }
      }
    }
    members.sort();
    groups.push(members);
  }
  groups.sort((left, right) => (left[0] < right[0] ? -1 : 1));
  return groups;
}

/** Map from surviving node id to its cluster index. */
export function clusterIndex(groups: string[][]): Map<string, number> {
  const result = new Map<string, number>();
  groups.forEach((members, index) => {
    for (const id of members) result.set(id, index);
  });
  return result;
}
