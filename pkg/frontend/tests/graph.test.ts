import { describe, expect, it } from "vitest";

import { adjacency, clusterIndex, clusters } from "../src/graph.js";
import { networkFixture } from "./fixtures.js";

describe("adjacency", () => {
  it("collects sorted neighbor lists", () => {
    const adj = adjacency(networkFixture());
    expect(adj.get("kenmore")).toEqual([
      "boston-college",
      "brookline-village",
      "cleveland-circle",
      "hynes",
    ]);
    expect(adj.get("riverside")).toEqual(["brookline-village"]);
  });
});

describe("clusters", () => {
  it("keeps the intact network in one cluster", () => {
    const groups = clusters(networkFixture(), new Set());
    expect(groups).toHaveLength(1);
    expect(groups[0]).toHaveLength(17);
  });

  it("splits into four clusters without kenmore", () => {
    const groups = clusters(networkFixture(), new Set(["kenmore"]));
    expect(groups).toEqual([
      [
        "arlington",
        "boylston",
        "copley",
        "government-center",
        "haymarket",
        "heath-street",
        "hynes",
        "lechmere",
        "medford-tufts",
        "north-station",
        "park-street",
        "union-square",
      ],
      ["boston-college"],
      ["brookline-village", "riverside"],
      ["cleveland-circle"],
    ]);
  });

  it("splits into three clusters without copley", () => {
    const groups = clusters(networkFixture(), new Set(["copley"]));
    expect(groups.map((members) => members.length).sort((a, b) => a - b)).toEqual([1, 6, 9]);
    expect(groups.some((members) => members.length === 1 && members[0] === "heath-street")).toBe(
      true,
    );
  });

  it("treats an empty removal set as the identity", () => {
    const whole = clusters(networkFixture(), new Set());
    const again = clusters(networkFixture(), new Set());
    expect(again).toEqual(whole);
  });
});

describe("clusterIndex", () => {
  it("covers every surviving station exactly once", () => {
    const network = networkFixture();
    const groups = clusters(network, new Set(["kenmore"]));
    const byCluster = clusterIndex(groups);
    expect(byCluster.size).toBe(16);
    expect(byCluster.has("kenmore")).toBe(false);
    const indices = new Set(byCluster.values());
    expect(indices.size).toBe(4);
  });
});
