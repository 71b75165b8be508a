import type {
  AllocateDto,
  AttackDto,
  MetricsDto,
  NetworkDto,
  RiskDto,
  RoiPointDto,
  Tagged,
} from "./types.js";

export type Allocator = "proportional" | "greedy";

/** Total elimination cost of the bundled fault tree; the budget slider
spans zero funding to full funding. */
export const BUDGET_MAX = 10;

export interface ResponseCache {
  network?: NetworkDto;
  metrics?: MetricsDto;
  risk?: RiskDto;
  tree?: AllocateDto;
  attack?: AttackDto;
  roi?: RoiPointDto[];
}

export interface ViewState {
  version: string | null;
  selected: ReadonlySet<string>;
  /* station set of the attack currently on screen; null when none */
  attacked: ReadonlySet<string> | null;
  budget: number;
  allocator: Allocator;
  preset: string | null;
  cache: ResponseCache;
  offline: boolean;
  toast: string | null;
  roiError: string | null;
  needsReload: boolean;
}

export function initialState(): ViewState {
  return {
    version: null,
    selected: new Set(),
    attacked: null,
    budget: 0,
    allocator: "proportional",
    preset: null,
    cache: {},
    offline: false,
    toast: null,
    roiError: null,
    needsReload: false,
  };
}

export function toggleNode(state: ViewState, id: string): ViewState {
  const selected = new Set(state.selected);
  if (selected.has(id)) selected.delete(id);
  else selected.add(id);
  return { ...state, selected };
}

export function setBudget(state: ViewState, budget: number): ViewState {
  const clamped = Math.min(Math.max(budget, 0), BUDGET_MAX);
  return { ...state, budget: clamped };
}

export function setAllocator(state: ViewState, allocator: Allocator): ViewState {
  return { ...state, allocator };
}

export function markAttacked(state: ViewState, ids: ReadonlySet<string>): ViewState {
  return { ...state, attacked: new Set(ids) };
}

export function clearAttack(state: ViewState): ViewState {
  const cache = { ...state.cache };
  delete cache.attack;
  return { ...state, attacked: null, preset: null, cache };
}

export function setOffline(state: ViewState, offline: boolean): ViewState {
  return { ...state, offline };
}

export function setToast(state: ViewState, toast: string | null): ViewState {
  return { ...state, toast };
}

export function setRoiError(state: ViewState, roiError: string | null): ViewState {
  return { ...state, roiError };
}

/**
 * Fold a tagged response into the cache.
 *
 * The first response pins the snapshot version. A later response tagged
 * with a different version is dropped and the state flagged for a full
 * reload, so no screen ever mixes figures from two snapshots.
 */
export function acceptResponse<K extends keyof ResponseCache>(
  state: ViewState,
  key: K,
  tagged: Tagged<NonNullable<ResponseCache[K]>>,
): ViewState {
  if (state.version !== null && tagged.version !== state.version) {
    return { ...state, needsReload: true };
  }
  const cache: ResponseCache = { ...state.cache, [key]: tagged.body };
  return {
    ...state,
    version: state.version ?? tagged.version,
    cache,
    offline: false,
  };
}
