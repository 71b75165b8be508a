/** DTO shapes mirroring the service's JSON payloads. */

export interface NodeDto {
  id: string;
  name: string;
  placement: string;
  threat: number;
  vulnerability: number;
  consequence: number;
  prevention_cost: number;
  response_cost: number;
}

export interface LinkDto {
  a: string;
  b: string;
  threat: number;
  vulnerability: number;
  consequence: number;
  prevention_cost: number;
  response_cost: number;
}

export interface NetworkDto {
  nodes: NodeDto[];
  links: LinkDto[];
}

export interface MetricsDto {
  node_count: number;
  link_count: number;
  per_node_degree: Record<string, number>;
  total_degree: number;
  network_degree: number;
  spectral_radius: number;
  blocking_display_nodes: string[];
  [extra: string]: unknown;
}

export interface RiskDto {
  per_asset_risk: Record<string, number>;
  total_risk: number;
  ranking: Array<[string, number]>;
}

export interface AllocateDto {
  budget: number;
  allocator: string;
  beta: number;
  vulnerability: number;
  risk: number;
  allocation: Record<string, number>;
}

export interface AttackDto {
  components_before: number;
  components_after: number;
  largest_component_after: number;
  disconnected_terminus_pairs: number;
  risk_before: number;
  risk_after: number;
  spectral_radius_before: number;
  spectral_radius_after: number;
}

export interface RoiPointDto {
  expenditure: number;
  risk_final: number;
  roi: number;
}

/* The dashboard only ever removes stations it has on screen, so this is
   the one scenario step shape it emits. */
export interface ScenarioStepDto {
  op: "remove_node";
  id: string;
}

export interface ScenarioDto {
  name: string;
  kind: "targeted";
  steps: ScenarioStepDto[];
}

/** A response body together with the snapshot version that produced it. */
export interface Tagged<T> {
  version: string;
  body: T;
}
