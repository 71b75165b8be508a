import type {
  AllocateDto,
  AttackDto,
  MetricsDto,
  NetworkDto,
  RiskDto,
} from "../src/types.js";

/*
 * Canned DTOs with the same topology as the bundled network. The profile
 * numbers are arbitrary; the e2e suite is what checks real service values.
 */

const NODE_IDS = [
  "kenmore",
  "boston-college",
  "cleveland-circle",
  "brookline-village",
  "riverside",
  "hynes",
  "copley",
  "heath-street",
  "arlington",
  "boylston",
  "park-street",
  "government-center",
  "haymarket",
  "north-station",
  "lechmere",
  "union-square",
  "medford-tufts",
];

const LINKS: Array<[string, string]> = [
  ["kenmore", "boston-college"],
  ["kenmore", "cleveland-circle"],
  ["kenmore", "brookline-village"],
  ["brookline-village", "riverside"],
  ["kenmore", "hynes"],
  ["hynes", "copley"],
  ["copley", "heath-street"],
  ["copley", "arlington"],
  ["arlington", "boylston"],
  ["boylston", "park-street"],
  ["park-street", "government-center"],
  ["government-center", "haymarket"],
  ["haymarket", "north-station"],
  ["north-station", "lechmere"],
  ["lechmere", "union-square"],
  ["lechmere", "medford-tufts"],
];

export function networkFixture(): NetworkDto {
  return {
    nodes: NODE_IDS.map((id) => ({
      id,
      name: id,
      placement: "underground",
      threat: 1,
      vulnerability: 0.5,
      consequence: 10,
      prevention_cost: 1,
      response_cost: 1.5,
    })),
    links: LINKS.map(([a, b]) => ({
      a,
      b,
      threat: 1,
      vulnerability: 0.8,
      consequence: 8,
      prevention_cost: 0.71,
      response_cost: 1.02,
    })),
  };
}

export function metricsFixture(): MetricsDto {
  const degrees: Record<string, number> = {};
  for (const id of NODE_IDS) degrees[id] = 0;
  for (const [a, b] of LINKS) {
    degrees[a] += 1;
    degrees[b] += 1;
  }
  return {
    node_count: NODE_IDS.length,
    link_count: LINKS.length,
    per_node_degree: degrees,
    total_degree: 2 * LINKS.length,
    network_degree: 4,
    spectral_radius: 2.2169,
    blocking_display_nodes: [],
  };
}

export function riskFixture(): RiskDto {
  const perAsset: Record<string, number> = {};
  NODE_IDS.forEach((id, index) => {
    perAsset[id] = 5 + (index % 5);
  });
  perAsset.kenmore = 12;
  const total = Object.values(perAsset).reduce((sum, value) => sum + value, 0);
  const ranking = Object.entries(perAsset).sort(
    (left, right) => right[1] - left[1] || (left[0] < right[0] ? -1 : 1),
  ) as Array<[string, number]>;
  return { per_asset_risk: perAsset, total_risk: total, ranking };
}

export function allocateFixture(): AllocateDto {
  return {
    budget: 0,
    allocator: "proportional",
    beta: 1.1632171457736562,
    vulnerability: 0.5022696805340099,
    risk: 4.9,
    allocation: {
      "Bomb@Copley": 0,
      "SCADA@Copley": 0,
      "Bomb@Kenmore": 0,
      "SCADA@Kenmore": 0,
    },
  };
}

export function attackFixture(): AttackDto {
  return {
    components_before: 1,
    components_after: 4,
    largest_component_after: 12,
    disconnected_terminus_pairs: 12,
    risk_before: 230.2,
    risk_after: 200.0,
    spectral_radius_before: 2.2169,
    spectral_radius_after: 2.05,
  };
}
