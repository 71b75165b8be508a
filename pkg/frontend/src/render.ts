import { clusterIndex, clusters } from "./graph.js";
import { esc, fixed, pct } from "./format.js";
import { positionOf, VIEW_HEIGHT, VIEW_WIDTH } from "./layout.js";
import { BUDGET_MAX } from "./state.js";
import type { ViewState } from "./state.js";
import type { RoiPointDto } from "./types.js";

const CLUSTER_PALETTE = [
  "#2f7d31",
  "#b3541e",
  "#2b5d9e",
  "#8a3ffc",
  "#c4367a",
  "#527a00",
  "#0e7490",
  "#7f1d1d",
];

const CHART_WIDTH = 420;
const CHART_HEIGHT = 220;
const CHART_PAD = 30;

/** Color band relative to the largest per-node risk. Binning is
presentation only; every number on screen comes from a service payload. */
function riskBand(value: number, highest: number): string {
  if (highest <= 0) return "risk-low";
  const ratio = value / highest;
  if (ratio > 2 / 3) return "risk-high";
  if (ratio > 1 / 3) return "risk-mid";
  return "risk-low";
}

export function renderNetwork(state: ViewState): string {
  const network = state.cache.network;
  const metricsDto = state.cache.metrics;
  const riskDto = state.cache.risk;
  if (network === undefined || metricsDto === undefined || riskDto === undefined) {
    return `<p class="placeholder">Waiting for the service.</p>`;
  }

  const removed = state.attacked ?? new Set<string>();
  const groups = state.attacked === null ? null : clusters(network, removed);
  const byCluster = groups === null ? null : clusterIndex(groups);
  const degrees = metricsDto.per_node_degree;
  const highest = network.nodes.reduce(
    (best, node) => Math.max(best, riskDto.per_asset_risk[node.id] ?? 0),
    0,
  );

  const lines: string[] = [];
  for (const link of network.links) {
    const a = positionOf(link.a);
    const b = positionOf(link.b);
    const severed = removed.has(link.a) || removed.has(link.b);
    lines.push(
      `<line class="track${severed ? " severed" : ""}" ` +
        `x1="${a.x}" y1="${a.y}" x2="${b.x}" y2="${b.y}"/>`,
    );
  }

  const markers: string[] = [];
  for (const node of network.nodes) {
    const spot = positionOf(node.id);
    const degree = degrees[node.id] ?? 0;
    const radius = 7 + 2.5 * degree;
    const value = riskDto.per_asset_risk[node.id] ?? 0;
    const classes = ["station", riskBand(value, highest)];
    if (state.selected.has(node.id)) classes.push("selected");
    let paint = "";
    if (removed.has(node.id)) {
      classes.push("removed");
    } else if (byCluster !== null) {
      const index = byCluster.get(node.id) ?? 0;
      const color = CLUSTER_PALETTE[index % CLUSTER_PALETTE.length];
      paint = ` data-cluster="${index}" stroke="${color}"`;
    }
    const title =
      `${esc(node.name)}&#10;threat ${node.threat}` +
      `  vulnerability ${node.vulnerability}` +
      `  consequence ${node.consequence}`;
    markers.push(
      `<circle class="${classes.join(" ")}" data-node="${esc(node.id)}" ` +
        `cx="${spot.x}" cy="${spot.y}" r="${radius}"${paint}>` +
        `<title>${title}</title></circle>`,
    );
    markers.push(
      `<text class="label" x="${spot.x}" y="${spot.y - radius - 5}">${esc(node.name)}</text>`,
    );
  }

  return (
    `<svg class="map" viewBox="0 0 ${VIEW_WIDTH} ${VIEW_HEIGHT}" role="img">` +
    `<g>${lines.join("")}</g><g>${markers.join("")}</g></svg>`
  );
}

export function renderRiskPanel(state: ViewState): string {
  const riskDto = state.cache.risk;
  let body = `<p class="placeholder">Waiting for the service.</p>`;
  if (riskDto !== undefined) {
    const rows = riskDto.ranking
      .slice(0, 5)
      .map(
        ([asset, value]) =>
          `<tr><td>${esc(asset)}</td>` +
          `<td class="num" data-exact="${value}">${fixed(value)}</td></tr>`,
      )
      .join("");
    body =
      `<p>total <strong id="total-risk" data-exact="${riskDto.total_risk}">` +
      `${fixed(riskDto.total_risk)}</strong></p>` +
      `<table class="ranking"><thead><tr><th>asset</th><th>risk</th></tr></thead>` +
      `<tbody>${rows}</tbody></table>`;
  }
  return `<section class="panel" id="risk-panel"><h2>Network risk</h2>${body}</section>`;
}

export function renderTreePanel(state: ViewState): string {
  const tree = state.cache.tree;
  const toast =
    state.toast === null ? "" : `<p class="toast" role="alert">${esc(state.toast)}</p>`;
  let figures = `<p class="placeholder">No allocation yet.</p>`;
  if (tree !== undefined) {
    const rows = Object.entries(tree.allocation)
      .map(
        ([label, spend]) =>
          `<tr><td>${esc(label)}</td>` +
          `<td class="num" data-exact="${spend}">${fixed(spend)}</td></tr>`,
      )
      .join("");
    figures =
      `<dl class="figures">` +
      `<dt>vulnerability</dt>` +
      `<dd id="tree-vulnerability" data-exact="${tree.vulnerability}">${pct(tree.vulnerability)}</dd>` +
      `<dt>risk</dt>` +
      `<dd id="tree-risk" data-exact="${tree.risk}">${fixed(tree.risk)}</dd>` +
      `</dl>` +
      `<table class="spends"><thead><tr><th>threat</th><th>spend</th></tr></thead>` +
      `<tbody>${rows}</tbody></table>`;
  }
  return (
    `<section class="panel" id="tree-panel"><h2>Fault tree budget</h2>` +
    `<label>budget ` +
    `<input id="budget" type="range" min="0" max="${BUDGET_MAX}" step="0.1" value="${state.budget}"/>` +
    `<output id="budget-value">${fixed(state.budget, 1)}</output></label>` +
    `<fieldset id="allocator"><legend>allocator</legend>` +
    `<label><input type="radio" name="allocator" value="proportional"` +
    `${state.allocator === "proportional" ? " checked" : ""}/> proportional</label>` +
    `<label><input type="radio" name="allocator" value="greedy"` +
    `${state.allocator === "greedy" ? " checked" : ""}/> greedy</label>` +
    `</fieldset>${toast}${figures}</section>`
  );
}

export function renderAttackPanel(state: ViewState): string {
  const report = state.cache.attack;
  const chosen = [...state.selected].sort();
  const chosenText = chosen.length === 0 ? "none" : chosen.join(", ");
  let figures = "";
  if (report !== undefined) {
    figures =
      `<dl class="figures">` +
      `<dt>components</dt>` +
      `<dd id="attack-components" data-exact="${report.components_after}">` +
      `${report.components_after}</dd>` +
      `<dt>largest component</dt>` +
      `<dd data-exact="${report.largest_component_after}">${report.largest_component_after}</dd>` +
      `<dt>severed terminus pairs</dt>` +
      `<dd data-exact="${report.disconnected_terminus_pairs}">` +
      `${report.disconnected_terminus_pairs}</dd>` +
      `<dt>risk after</dt>` +
      `<dd data-exact="${report.risk_after}">${fixed(report.risk_after)}</dd>` +
      `<dt>spectral radius after</dt>` +
      `<dd data-exact="${report.spectral_radius_after}">` +
      `${fixed(report.spectral_radius_after, 4)}</dd>` +
      `</dl>`;
  }
  return (
    `<section class="panel" id="attack-panel"><h2>Attack</h2>` +
    `<p>selected: <span id="attack-selection">${esc(chosenText)}</span></p>` +
    `<p><button id="apply-attack" type="button">Apply attack</button> ` +
    `<button id="clear-attack" type="button">Clear</button></p>` +
    `${figures}</section>`
  );
}

/** Polyline over the service's ROI points, drawn in response order. */
export function renderRoiChart(
  points: RoiPointDto[] | undefined,
  error: string | null,
): string {
  if (error !== null) return `<p class="chart-error">${esc(error)}</p>`;
  if (points === undefined || points.length === 0) {
    return `<p class="placeholder">No ROI data.</p>`;
  }
  const xs = points.map((p) => p.expenditure);
  const ys = points.map((p) => p.roi);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const sx = (x: number) =>
    CHART_PAD + ((x - minX) / spanX) * (CHART_WIDTH - 2 * CHART_PAD);
  const sy = (y: number) =>
    CHART_HEIGHT - CHART_PAD - ((y - minY) / spanY) * (CHART_HEIGHT - 2 * CHART_PAD);
  const line =
    points.length < 2
      ? ""
      : `<polyline class="roi-line" fill="none" points="` +
        points.map((p) => `${sx(p.expenditure).toFixed(1)},${sy(p.roi).toFixed(1)}`).join(" ") +
        `"/>`;
  const dots = points
    .map(
      (p) =>
        `<circle class="roi-point" cx="${sx(p.expenditure).toFixed(1)}" ` +
        `cy="${sy(p.roi).toFixed(1)}" r="3" data-exact="${p.roi}">` +
        `<title>budget ${p.expenditure}: roi ${fixed(p.roi, 3)}</title></circle>`,
    )
    .join("");
  return (
    `<svg class="chart" viewBox="0 0 ${CHART_WIDTH} ${CHART_HEIGHT}" role="img">` +
    `<line class="axis" x1="${CHART_PAD}" y1="${CHART_HEIGHT - CHART_PAD}" ` +
    `x2="${CHART_WIDTH - CHART_PAD}" y2="${CHART_HEIGHT - CHART_PAD}"/>` +
    `<line class="axis" x1="${CHART_PAD}" y1="${CHART_PAD}" ` +
    `x2="${CHART_PAD}" y2="${CHART_HEIGHT - CHART_PAD}"/>` +
    `${line}${dots}</svg>`
  );
}

export function renderBanner(state: ViewState): string {
  if (!state.offline) return "";
  return (
    `<div class="banner" role="alert">Service unreachable. ` +
    `Figures show the last known snapshot. ` +
    `<button id="retry" type="button">Retry</button></div>`
  );
}

export function renderPage(state: ViewState): string {
  const stale = state.offline ? " stale" : "";
  return (
    `${renderBanner(state)}` +
    `<main class="grid${stale}">` +
    `<section class="panel" id="map-panel"><h2>Network</h2>${renderNetwork(state)}</section>` +
    `${renderRiskPanel(state)}` +
    `${renderTreePanel(state)}` +
    `${renderAttackPanel(state)}` +
    `<section class="panel" id="roi-panel"><h2>ROI curve</h2>` +
    `${renderRoiChart(state.cache.roi, state.roiError)}</section>` +
    `</main>`
  );
}
